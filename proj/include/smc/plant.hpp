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

#ifndef SMC_PLANT_HPP_
#define SMC_PLANT_HPP_

#include <string>
#include <vector>

#include "smc/plants/manipulator.hpp"
#include "smc/plants/spacecraft.hpp"
#include "smc/types.hpp"

namespace smc {

struct SlidingEval {
  Vector s;
  Vector f0;  // drift of the sliding dynamics at nominal parameters
  Matrix G0;  // gain of the sliding dynamics at nominal parameters
};

/// Closed-loop plant interface: true-parameter dynamics for integration,
/// nominal-parameter sliding quantities for the controller, and the
/// true-parameter sliding dynamics for auditing.
class Plant {
 public:
  virtual ~Plant() = default;

  virtual int state_dim() const = 0;
  virtual int control_dim() const = 0;
  virtual std::vector<std::string> state_names() const = 0;
  virtual Vector initial_state() const = 0;

  /// dx/dt under the true (sampled) parameters.
  virtual Vector derivative(double t, const Vector& x,
                            const Vector& u) const = 0;

  /// Sliding variables and nominal (f0, G0) for the controller.
  virtual SlidingEval sliding(double t, const Vector& x) const = 0;

  /// f and G of the sliding dynamics under the true parameters.
  virtual void true_sliding_dynamics(double t, const Vector& x, Vector* f,
                                     Matrix* G) const = 0;

  /// Throws ErrorCode::guard when the state leaves the model's validity
  /// region.
  virtual void check_guards(const Vector& x) const = 0;
};

class SpacecraftPlant : public Plant {
 public:
  SpacecraftPlant(SpacecraftParams nominal, SpacecraftParams true_params,
                  SpacecraftState initial, double lambda1, double lambda2,
                  AxialVelocityMode mode);

  int state_dim() const override { return 8; }
  int control_dim() const override { return 2; }
  std::vector<std::string> state_names() const override;
  Vector initial_state() const override;
  Vector derivative(double t, const Vector& x, const Vector& u) const override;
  SlidingEval sliding(double t, const Vector& x) const override;
  void true_sliding_dynamics(double t, const Vector& x, Vector* f,
                             Matrix* G) const override;
  void check_guards(const Vector& x) const override;

  static SpacecraftState unpack(const Vector& x);
  static Vector pack(const SpacecraftState& x);

  const SpacecraftParams& nominal() const { return nominal_; }
  const SpacecraftParams& true_params() const { return true_; }

 private:
  SpacecraftParams nominal_;
  SpacecraftParams true_;
  SpacecraftState initial_;
  double lambda1_;
  double lambda2_;
  AxialVelocityMode mode_;
};

class ManipulatorPlant : public Plant {
 public:
  ManipulatorPlant(ManipulatorParams nominal, ManipulatorParams true_params,
                   ManipulatorState initial, double alpha);

  int state_dim() const override { return 4; }
  int control_dim() const override { return 2; }
  std::vector<std::string> state_names() const override;
  Vector initial_state() const override;
  Vector derivative(double t, const Vector& x, const Vector& u) const override;
  SlidingEval sliding(double t, const Vector& x) const override;
  void true_sliding_dynamics(double t, const Vector& x, Vector* f,
                             Matrix* G) const override;
  void check_guards(const Vector& x) const override;

  static ManipulatorState unpack(const Vector& x);
  static Vector pack(const ManipulatorState& x);

  const ManipulatorParams& nominal() const { return nominal_; }
  const ManipulatorParams& true_params() const { return true_; }

 private:
  ManipulatorParams nominal_;
  ManipulatorParams true_;
  ManipulatorState initial_;
  double alpha_;
};

}  // namespace smc

#endif  // SMC_PLANT_HPP_
