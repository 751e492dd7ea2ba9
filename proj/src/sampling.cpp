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

#include "smc/sampling.hpp"

#include <array>
#include <cmath>
#include <utility>

#include "smc/random.hpp"

namespace smc {

namespace {

constexpr double kDegree = M_PI / 180.0;

}  // namespace

std::vector<double> SamplingSettings::default_psi_grid() {
  return {-10.0 * kDegree, -5.0 * kDegree, -2.0 * kDegree, 0.0,
          2.0 * kDegree,   5.0 * kDegree,  10.0 * kDegree};
}

std::vector<double> SamplingSettings::default_separation_grid() {
  return {-0.05, -0.02, 0.0, 0.02, 0.05};
}

void SamplingSettings::validate() const {
  if (interior_draws < 0) {
    throw Error(ErrorCode::config, "sampling.interior_draws must be >= 0");
  }
  if (psi_grid.empty() || separation_grid.empty()) {
    throw Error(ErrorCode::config, "sampling state grids must be non-empty");
  }
}

std::vector<Matrix> spacecraft_gain_samples(const SpacecraftParams& nominal,
                                            double k,
                                            const SamplingSettings& settings) {
  settings.validate();
  nominal.validate(k);
  Rng rng(settings.seed);

  // Basic-uncertainty tuples: 2^5 corners of the box, then interior draws.
  std::vector<std::array<double, 5>> tuples;
  const std::array<double, 5> bounds = {
      nominal.bounds.m, nominal.bounds.m_f, nominal.bounds.I_f,
      nominal.bounds.a, nominal.bounds.epsilon};
  for (int corner = 0; corner < 32; ++corner) {
    std::array<double, 5> tuple;
    for (int i = 0; i < 5; ++i) {
      tuple[i] = ((corner >> i) & 1) ? bounds[i] : -bounds[i];
    }
    tuples.push_back(tuple);
  }
  for (int draw = 0; draw < settings.interior_draws; ++draw) {
    std::array<double, 5> tuple;
    for (int i = 0; i < 5; ++i) {
      tuple[i] = uniform(rng, -bounds[i], bounds[i]);
    }
    tuples.push_back(tuple);
  }

  std::vector<Matrix> gains;
  gains.reserve(tuples.size() * settings.psi_grid.size());
  for (const auto& tuple : tuples) {
    SpacecraftParams p = nominal;
    p.m = nominal.m * (1.0 + k * tuple[0]);
    p.m_f = nominal.m_f * (1.0 + k * tuple[1]);
    p.I_f = nominal.I_f * (1.0 + k * tuple[2]);
    p.a = nominal.a * (1.0 + k * tuple[3]);
    p.epsilon = nominal.epsilon * (1.0 + k * tuple[4]);
    for (double psi : settings.psi_grid) {
      gains.push_back(spacecraft_gain(p, psi));
    }
  }
  return gains;
}

std::vector<Matrix> manipulator_gain_samples(const ManipulatorRanges& ranges,
                                             double g,
                                             const SamplingSettings& settings) {
  settings.validate();
  Rng rng(settings.seed);

  std::vector<ManipulatorParams> params;
  const std::array<std::pair<double, double>, 4> boxes = {
      std::pair{ranges.m1_lo, ranges.m1_hi}, {ranges.m2_lo, ranges.m2_hi},
      {ranges.l1_lo, ranges.l1_hi},          {ranges.l2_lo, ranges.l2_hi}};
  for (const auto& [lo, hi] : boxes) {
    if (!(lo > 0.0) || hi < lo) {
      throw Error(ErrorCode::config, "manipulator ranges must be positive");
    }
  }
  for (int corner = 0; corner < 16; ++corner) {
    ManipulatorParams p;
    p.m1 = ((corner >> 0) & 1) ? ranges.m1_hi : ranges.m1_lo;
    p.m2 = ((corner >> 1) & 1) ? ranges.m2_hi : ranges.m2_lo;
    p.l1 = ((corner >> 2) & 1) ? ranges.l1_hi : ranges.l1_lo;
    p.l2 = ((corner >> 3) & 1) ? ranges.l2_hi : ranges.l2_lo;
    p.g = g;
    params.push_back(p);
  }
  for (int draw = 0; draw < settings.interior_draws; ++draw) {
    ManipulatorParams p;
    p.m1 = uniform(rng, ranges.m1_lo, ranges.m1_hi);
    p.m2 = uniform(rng, ranges.m2_lo, ranges.m2_hi);
    p.l1 = uniform(rng, ranges.l1_lo, ranges.l1_hi);
    p.l2 = uniform(rng, ranges.l2_lo, ranges.l2_hi);
    p.g = g;
    params.push_back(p);
  }

  std::vector<Matrix> gains;
  gains.reserve(params.size() * settings.separation_grid.size());
  for (const ManipulatorParams& p : params) {
    for (double separation : settings.separation_grid) {
      gains.push_back(manipulator_gain(p, separation, 0.0));
    }
  }
  return gains;
}

UncertaintySampleSet assemble_sample_set(const std::vector<Matrix>& gains,
                                         const Matrix* g0,
                                         std::string provenance) {
  if (gains.empty()) {
    throw Error(ErrorCode::invalid_argument, "no gain samples");
  }
  UncertaintySampleSet set;
  set.G0 = g0 != nullptr ? *g0 : nominal_gain(gains);
  set.deltas.reserve(gains.size());
  for (const Matrix& g : gains) {
    set.deltas.push_back(g - set.G0);
  }
  set.provenance = std::move(provenance);
  return set;
}

}  // namespace smc
