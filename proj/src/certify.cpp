// Copyright 2026 the smc-toolkit authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "smc/certify.hpp"

#include <cmath>

#include "smc/cone_solver.hpp"
#include "smc/config.hpp"
#include "smc/controller.hpp"
#include "smc/random.hpp"

namespace smc {

namespace {

Json vector_to_json(const Vector& v) {
  Json out = Json::array();
  for (int i = 0; i < v.size(); ++i) out.push_back(v[i]);
  return out;
}

Matrix random_admissible_h(Rng& rng, int m, double norm_lo = 0.0,
                           double norm_hi = 0.95) {
  Matrix r = uniform_matrix(rng, m, m, -1.0, 1.0);
  double norm = induced_norm(r, NormKind::infinity);
  while (norm < 1e-9) {
    r = uniform_matrix(rng, m, m, -1.0, 1.0);
    norm = induced_norm(r, NormKind::infinity);
  }
  const double target = uniform(rng, norm_lo, norm_hi);
  return r * (target / norm);
}

Matrix random_symmetric_bound(Rng& rng, int m, double two_norm) {
  Matrix a = uniform_matrix(rng, m, m, 0.0, 1.0);
  Matrix f = 0.5 * (a + a.transpose());
  const double norm = induced_norm(f, NormKind::two);
  if (norm < 1e-9) f = Matrix::Identity(m, m);
  return f * (two_norm / induced_norm(f, NormKind::two));
}

Matrix random_invertible(Rng& rng, int m, double span) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    const Matrix candidate = uniform_matrix(rng, m, m, -span, span);
    const Eigen::FullPivLU<Matrix> lu(candidate);
    if (!lu.isInvertible()) continue;
    const Matrix inv = lu.inverse();
    if (induced_norm(candidate, NormKind::one) *
            induced_norm(inv, NormKind::one) <
        100.0) {
      return candidate;
    }
  }
  return Matrix::Identity(m, m);
}

struct SuiteContext {
  CertifyReport* report;
  int max_counterexamples = 5;

  void fail(Json detail) {
    ++report->failures;
    if (static_cast<int>(report->counterexamples.size()) <
        max_counterexamples) {
      report->counterexamples.push_back(std::move(detail));
    }
  }
};

void run_cones_trial(Rng& rng, SuiteContext& ctx) {
  const int m = 1 + static_cast<int>(rng() % 6);
  const Matrix h = random_admissible_h(rng, m);
  const auto patterns = enumerate_sign_patterns(m);
  const int pick = static_cast<int>(rng() % patterns.size());
  const SignPattern& si = patterns[pick];

  // Disjoint interiors: an interior point of one cone is interior to no
  // other.
  {
    const Vector p = uniform_vector(rng, m, 0.2, 1.5);
    const Vector y = si.matrix() * p + h * p;
    const ConeClassification own = classify_cone_membership(si, h, y);
    if (own.status != ConeStatus::interior) {
      ctx.fail({{"check", "interior_membership"},
                {"m", m},
                {"pattern", si.bits()},
                {"y", vector_to_json(y)}});
      return;
    }
    for (const SignPattern& sj : patterns) {
      if (sj == si) continue;
      const ConeClassification other = classify_cone_membership(sj, h, y);
      if (other.status == ConeStatus::interior) {
        ctx.fail({{"check", "interior_overlap"},
                  {"m", m},
                  {"pattern_i", si.bits()},
                  {"pattern_j", sj.bits()},
                  {"y", vector_to_json(y)}});
        return;
      }
    }
  }

  // Shared surfaces: zeroing a magnitude puts the point on a neighboring
  // cone as well, with the same solution.
  {
    Vector p = uniform_vector(rng, m, 0.5, 1.5);
    p[static_cast<int>(rng() % m)] = 0.0;
    const Vector y = si.matrix() * p + h * p;
    const SolveResult result = solve_control_equation({h, y});
    if (!result.on_surface) {
      ctx.fail({{"check", "surface_flag"},
                {"m", m},
                {"y", vector_to_json(y)}});
      return;
    }
    const double eps = zero_tolerance(y);
    SignPattern flipped = result.pattern;
    for (int i = 0; i < m; ++i) {
      if (std::abs(result.magnitudes[i]) <= eps) {
        flipped = flipped.with_flipped(i);
      }
    }
    const ConeClassification neighbor =
        classify_cone_membership(flipped, h, y);
    const bool accepted_too = neighbor.status != ConeStatus::outside;
    const Vector u_hat_flipped = flipped.apply(neighbor.witness);
    const double diff =
        (u_hat_flipped - result.u_hat).cwiseAbs().maxCoeff();
    if (!accepted_too || diff > 1e-7 * (1.0 + y.cwiseAbs().maxCoeff())) {
      ctx.fail({{"check", "surface_sharing"},
                {"m", m},
                {"y", vector_to_json(y)},
                {"diff", diff}});
      return;
    }
  }

  // Coverage: a random right-hand side always lands in some cone.
  {
    const Vector u_c = normal_vector(rng, m);
    try {
      (void)solve_control_equation({h, u_c});
    } catch (const Error&) {
      ctx.fail({{"check", "coverage"},
                {"m", m},
                {"u_c", vector_to_json(u_c)}});
    }
  }
}

void run_uniqueness_trial(Rng& rng, SuiteContext& ctx,
                          bool inject_inadmissible) {
  if (inject_inadmissible) {
    const int m = 1 + static_cast<int>(rng() % 4);
    const Matrix f_bar = random_symmetric_bound(rng, m, 1.5);
    const NonuniqueInstance bad = construct_nonunique_instance(f_bar);
    const ExhaustiveResult all =
        exhaustive_solutions({bad.H, bad.u_c});
    if (all.distinct_solutions() != 1) {
      ctx.fail({{"check", "uniqueness"},
                {"m", m},
                {"H", matrix_to_json(bad.H)},
                {"u_c", vector_to_json(bad.u_c)},
                {"distinct", all.distinct_solutions()},
                {"note", "inadmissible instance injected via flag"}});
    }
    return;
  }

  const int m = 1 + static_cast<int>(rng() % 6);
  const Matrix h = random_admissible_h(rng, m);
  const Vector u_c = normal_vector(rng, m);
  const ExhaustiveResult all = exhaustive_solutions({h, u_c});
  if (all.distinct_solutions() != 1) {
    ctx.fail({{"check", "uniqueness"},
              {"m", m},
              {"H", matrix_to_json(h)},
              {"u_c", vector_to_json(u_c)},
              {"distinct", all.distinct_solutions()}});
    return;
  }
  const SolveResult solved = solve_control_equation({h, u_c});
  const double diff =
      (solved.u_hat - all.accepted.front().u_hat).cwiseAbs().maxCoeff();
  if (diff > 1e-9) {
    ctx.fail({{"check", "solver_agreement"},
              {"m", m},
              {"diff", diff}});
  }
}

void run_theorem3_trial(Rng& rng, SuiteContext& ctx, int trial,
                        CertifyReport& report) {
  static constexpr double kTargets[3] = {1.0, 1.5, 3.0};
  const double target = kTargets[trial % 3];
  const int m = 1 + static_cast<int>(rng() % 6);
  const Matrix f_bar = random_symmetric_bound(rng, m, target);
  try {
    const NonuniqueInstance instance = construct_nonunique_instance(f_bar);
    const double separation =
        (instance.solution_a - instance.solution_b).cwiseAbs().maxCoeff();
    if (separation <= 1e-9) {
      ctx.fail({{"check", "distinctness"},
                {"m", m},
                {"target_norm", target},
                {"separation", separation}});
      return;
    }
    if (std::abs(instance.lambda) > 1.0 + 1e-12) {
      const ExhaustiveResult all =
          exhaustive_solutions({instance.H, instance.u_c});
      if (all.distinct_solutions() < 2) {
        ctx.fail({{"check", "exhaustive_cross_check"},
                  {"m", m},
                  {"target_norm", target},
                  {"distinct", all.distinct_solutions()}});
        return;
      }
    }
    ++report.verified_instances;
  } catch (const Error& e) {
    ctx.fail({{"check", "construction"},
              {"m", m},
              {"target_norm", target},
              {"error", e.what()}});
  }
}

void run_lyapunov_trial(Rng& rng, SuiteContext& ctx) {
  const int m = 1 + static_cast<int>(rng() % 4);
  const Matrix M = random_invertible(rng, m, 2.0);
  const Matrix Q = random_invertible(rng, m, 2.0);
  Matrix f_bar_mat = uniform_matrix(rng, m, m, 0.0, 1.0);
  const double norm = induced_norm(f_bar_mat, NormKind::two);
  f_bar_mat *= uniform(rng, 0.05, 0.95) / std::max(norm, 1e-9);

  ControllerConfig cfg;
  cfg.decomposition = GainDecomposition::make(M, Q, f_bar_mat);
  cfg.rho = uniform(rng, 0.1, 2.0);
  cfg.f_bar = uniform_vector(rng, m, 0.0, 2.0);
  cfg.eta_bar = uniform_vector(rng, m, 0.0, 0.5);
  cfg.smoothing = false;

  const Vector s = normal_vector(rng, m) * uniform(rng, 0.0, 2.0);
  const Vector f0 = normal_vector(rng, m) * uniform(rng, 0.0, 5.0);

  Vector delta_f(m), eta(m);
  for (int i = 0; i < m; ++i) {
    delta_f[i] = uniform(rng, -cfg.f_bar[i], cfg.f_bar[i]);
    eta[i] = uniform(rng, -cfg.eta_bar[i], cfg.eta_bar[i]);
  }
  Matrix f_real(m, m);
  for (int r = 0; r < m; ++r) {
    for (int c = 0; c < m; ++c) {
      f_real(r, c) = uniform(rng, -f_bar_mat(r, c), f_bar_mat(r, c));
    }
  }

  const ControlOutput out = compute_control(f0, s, cfg);
  const Vector s_dot = f0 + delta_f +
                       M * (Matrix::Identity(m, m) + f_real) * out.u_hat +
                       eta;
  const double lhs = s.dot(s_dot);
  const double rhs = -cfg.rho * s.dot(s) + 1e-9;
  if (lhs > rhs) {
    ctx.fail({{"check", "decrease"},
              {"m", m},
              {"lhs", lhs},
              {"rhs", rhs},
              {"s", vector_to_json(s)}});
  }
}

}  // namespace

Json CertifyReport::to_json() const {
  Json out;
  out["suite"] = suite;
  out["trials"] = trials;
  out["failures"] = failures;
  out["passed"] = passed();
  if (suite == "theorem3") out["verified_instances"] = verified_instances;
  out["counterexamples"] = counterexamples;
  return out;
}

CertifyReport run_certify(const CertifyOptions& options) {
  if (options.trials < 1) {
    throw Error(ErrorCode::invalid_argument, "trials must be >= 1");
  }
  CertifyReport report;
  report.suite = options.suite;
  report.trials = options.trials;
  SuiteContext ctx{&report};
  Rng rng(options.seed);

  if (options.suite == "cones") {
    for (int t = 0; t < options.trials; ++t) run_cones_trial(rng, ctx);
  } else if (options.suite == "uniqueness") {
    for (int t = 0; t < options.trials; ++t) {
      run_uniqueness_trial(rng, ctx, options.inject_inadmissible);
    }
  } else if (options.suite == "theorem3") {
    for (int t = 0; t < options.trials; ++t) {
      run_theorem3_trial(rng, ctx, t, report);
    }
  } else if (options.suite == "lyapunov") {
    for (int t = 0; t < options.trials; ++t) run_lyapunov_trial(rng, ctx);
  } else {
    throw Error(ErrorCode::invalid_argument,
                "unknown suite \"" + options.suite +
                    "\" (expected cones, uniqueness, theorem3 or lyapunov)");
  }
  return report;
}

}  // namespace smc
