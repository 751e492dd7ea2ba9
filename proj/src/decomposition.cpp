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

#include "smc/decomposition.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "smc/random.hpp"

namespace smc {

namespace {

constexpr double kSingularRatio = 1e-14;
constexpr double kMaxCondition = 1e6;

struct LuInverse {
  bool ok = false;
  Matrix inverse;
};

LuInverse try_inverse(const Matrix& a) {
  Eigen::PartialPivLU<Matrix> lu(a);
  const Vector u_diag = lu.matrixLU().diagonal().cwiseAbs();
  const double u_max = u_diag.maxCoeff();
  LuInverse out;
  if (!(u_max > 0.0) || u_diag.minCoeff() <= kSingularRatio * u_max) {
    return out;
  }
  out.inverse = lu.inverse();
  out.ok = out.inverse.allFinite();
  return out;
}

void check_samples(const UncertaintySampleSet& samples) {
  const int m = static_cast<int>(samples.G0.rows());
  if (m < 1 || samples.G0.cols() != m || !samples.G0.allFinite()) {
    throw Error(ErrorCode::invalid_argument, "G0 must be square and finite");
  }
  if (samples.deltas.empty()) {
    throw Error(ErrorCode::invalid_argument, "sample set is empty");
  }
  for (const Matrix& d : samples.deltas) {
    if (d.rows() != m || d.cols() != m || !d.allFinite()) {
      throw Error(ErrorCode::invalid_argument,
                  "all delta samples must be finite m x m matrices");
    }
  }
}

}  // namespace

Matrix ubm_from_samples(const Matrix& M, const Matrix& Q,
                        const UncertaintySampleSet& samples) {
  check_samples(samples);
  const int m = static_cast<int>(samples.G0.rows());
  if (M.rows() != m || M.cols() != m || Q.rows() != m || Q.cols() != m) {
    throw Error(ErrorCode::invalid_argument, "M, Q must match G0's shape");
  }
  const double g_scale = std::max(samples.G0.cwiseAbs().maxCoeff(), 1e-300);
  if ((M * Q - samples.G0).cwiseAbs().maxCoeff() > 1e-8 * g_scale) {
    throw Error(ErrorCode::invalid_argument,
                "decomposition mismatch: M * Q differs from G0");
  }
  const LuInverse m_inv = try_inverse(M);
  const LuInverse q_inv = try_inverse(Q);
  if (!m_inv.ok || !q_inv.ok) {
    throw Error(ErrorCode::singular, "singular decomposition factor");
  }
  Matrix ubm = Matrix::Zero(m, m);
  for (const Matrix& delta : samples.deltas) {
    ubm = ubm.cwiseMax((m_inv.inverse * delta * q_inv.inverse).cwiseAbs());
  }
  return ubm;
}

Matrix nominal_gain(const std::vector<Matrix>& gain_samples) {
  if (gain_samples.empty()) {
    throw Error(ErrorCode::invalid_argument, "no gain samples");
  }
  const Eigen::Index rows = gain_samples.front().rows();
  const Eigen::Index cols = gain_samples.front().cols();
  for (const Matrix& g : gain_samples) {
    if (g.rows() != rows || g.cols() != cols || !g.allFinite()) {
      throw Error(ErrorCode::invalid_argument,
                  "gain samples must share a finite shape");
    }
  }
  Matrix median(rows, cols);
  std::vector<double> column(gain_samples.size());
  for (Eigen::Index r = 0; r < rows; ++r) {
    for (Eigen::Index c = 0; c < cols; ++c) {
      for (size_t k = 0; k < gain_samples.size(); ++k) {
        column[k] = gain_samples[k](r, c);
      }
      const size_t n = column.size();
      auto mid = column.begin() + n / 2;
      std::nth_element(column.begin(), mid, column.end());
      if (n % 2 == 1) {
        median(r, c) = *mid;
      } else {
        const double upper = *mid;
        const double lower = *std::max_element(column.begin(), mid);
        median(r, c) = 0.5 * (lower + upper);
      }
    }
  }
  return median;
}

void PsoSettings::validate() const {
  if (swarm_size < 2) {
    throw Error(ErrorCode::config, "pso.swarm_size must be >= 2");
  }
  if (iterations < 1) {
    throw Error(ErrorCode::config, "pso.iterations must be >= 1");
  }
  if (!(inertia > 0.0 && inertia < 1.0)) {
    throw Error(ErrorCode::config, "pso.inertia must lie in (0, 1)");
  }
  if (cognitive < 0.0 || social < 0.0) {
    throw Error(ErrorCode::config, "pso acceleration weights must be >= 0");
  }
  if (bound < 0.0) {
    throw Error(ErrorCode::config, "pso.bound must be >= 0");
  }
}

DecompositionSearchResult pso_search(const UncertaintySampleSet& samples,
                                     const PsoSettings& settings) {
  check_samples(samples);
  settings.validate();
  const int m = static_cast<int>(samples.G0.rows());
  if (m > 8) {
    throw Error(ErrorCode::invalid_argument,
                "pso_search supports m <= 8 (search space is m^2)");
  }
  const LuInverse g0_inv = try_inverse(samples.G0);
  if (!g0_inv.ok) {
    throw Error(ErrorCode::singular, "G0 is singular; nothing to decompose");
  }

  // With Q = M^{-1} G0, the normalized uncertainty becomes the similarity
  // transform M^{-1} (dG G0^{-1}) M; cache the inner products once.
  std::vector<Matrix> kernels;
  kernels.reserve(samples.deltas.size());
  for (const Matrix& delta : samples.deltas) {
    kernels.push_back(delta * g0_inv.inverse);
  }

  const double inf = std::numeric_limits<double>::infinity();
  int evaluations = 0;
  auto fitness = [&](const Matrix& M) -> double {
    ++evaluations;
    const LuInverse m_inv = try_inverse(M);
    if (!m_inv.ok) return inf;
    const double cond = induced_norm(M, NormKind::one) *
                        induced_norm(m_inv.inverse, NormKind::one);
    if (!(cond < kMaxCondition)) return inf;
    Matrix ubm = Matrix::Zero(m, m);
    for (const Matrix& kernel : kernels) {
      ubm = ubm.cwiseMax((m_inv.inverse * kernel * M).cwiseAbs());
    }
    return induced_norm(ubm, NormKind::two);
  };

  const double box =
      settings.bound > 0.0 ? settings.bound
                           : 10.0 * samples.G0.cwiseAbs().maxCoeff();

  Matrix best_m;
  double best_fit = inf;
  auto consider = [&](const Matrix& candidate, double fit) {
    if (fit < best_fit) {
      best_fit = fit;
      best_m = candidate;
    }
  };

  // The two trivial decompositions are always evaluated and serve as the
  // floor for the search result.
  {
    const Matrix trivial_a = samples.G0;            // Q = I
    const Matrix trivial_b = Matrix::Identity(m, m);  // Q = G0
    consider(trivial_a, fitness(trivial_a));
    consider(trivial_b, fitness(trivial_b));
  }

  Rng rng(settings.seed);
  const int n = settings.swarm_size;
  const int dims = m * m;
  std::vector<Matrix> position(n), velocity(n), personal_best(n);
  std::vector<double> personal_fit(n, inf);

  auto clamp_box = [&](Matrix& x) {
    for (int i = 0; i < dims; ++i) {
      double& e = x.data()[i];
      e = std::clamp(e, -box, box);
    }
  };

  for (int i = 0; i < n; ++i) {
    if (i == 0) {
      position[i] = samples.G0;
      clamp_box(position[i]);
    } else if (i == 1) {
      position[i] = Matrix::Identity(m, m);
      clamp_box(position[i]);
    } else {
      position[i] = uniform_matrix(rng, m, m, -box, box);
    }
    velocity[i] = uniform_matrix(rng, m, m, -0.1 * box, 0.1 * box);
    personal_best[i] = position[i];
    personal_fit[i] = fitness(position[i]);
    consider(position[i], personal_fit[i]);
  }
  if (!std::isfinite(best_fit)) {
    throw Error(ErrorCode::singular,
                "every candidate M was singular or ill-conditioned");
  }

  DecompositionSearchResult result;
  result.fitness_trace.reserve(settings.iterations);
  for (int iter = 0; iter < settings.iterations; ++iter) {
    for (int i = 0; i < n; ++i) {
      for (int d = 0; d < dims; ++d) {
        const double r1 = uniform(rng, 0.0, 1.0);
        const double r2 = uniform(rng, 0.0, 1.0);
        velocity[i].data()[d] =
            settings.inertia * velocity[i].data()[d] +
            settings.cognitive * r1 *
                (personal_best[i].data()[d] - position[i].data()[d]) +
            settings.social * r2 * (best_m.data()[d] - position[i].data()[d]);
      }
      position[i] += velocity[i];
      clamp_box(position[i]);
      const double fit = fitness(position[i]);
      if (fit < personal_fit[i]) {
        personal_fit[i] = fit;
        personal_best[i] = position[i];
      }
      consider(position[i], fit);
    }
    result.fitness_trace.push_back(best_fit);
  }

  const Matrix q_best = try_inverse(best_m).inverse * samples.G0;
  const Matrix ubm = ubm_from_samples(best_m, q_best, samples);
  result.decomposition = GainDecomposition::make(best_m, q_best, ubm);
  result.fitness = result.decomposition.norm(NormKind::two);
  result.evaluations = evaluations;
  return result;
}

}  // namespace smc
