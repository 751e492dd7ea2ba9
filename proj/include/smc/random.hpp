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

#ifndef SMC_RANDOM_HPP_
#define SMC_RANDOM_HPP_

#include <cstdint>
#include <random>

#include "smc/types.hpp"

namespace smc {

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline double normal(Rng& rng) {
  return std::normal_distribution<double>(0.0, 1.0)(rng);
}

inline Vector uniform_vector(Rng& rng, int n, double lo, double hi) {
  Vector out(n);
  for (int i = 0; i < n; ++i) out[i] = uniform(rng, lo, hi);
  return out;
}

inline Vector normal_vector(Rng& rng, int n) {
  Vector out(n);
  for (int i = 0; i < n; ++i) out[i] = normal(rng);
  return out;
}

inline Matrix uniform_matrix(Rng& rng, int rows, int cols, double lo,
                             double hi) {
  Matrix out(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) out(r, c) = uniform(rng, lo, hi);
  return out;
}

}  // namespace smc

#endif  // SMC_RANDOM_HPP_
