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

#ifndef SMC_TYPES_HPP_
#define SMC_TYPES_HPP_

#include <Eigen/Dense>
#include <stdexcept>
#include <string>

namespace smc {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

// Control dimension is capped so that sign-pattern enumeration (2^m) stays
// bounded; both bundled plants have m = 2.
inline constexpr int kMaxDim = 16;

enum class ErrorCode {
  invalid_argument,
  config,
  no_solution,
  singular,
  not_admissible,
  guard,
  not_certifiable,
  property_failed,
  io,
  internal,
};

const char* error_code_name(ErrorCode code);

/// Library-wide exception; the code maps one-to-one onto the C API status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace smc

#endif  // SMC_TYPES_HPP_
