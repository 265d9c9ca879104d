// Copyright 2026 The idistill Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef IDISTILL_INPUTS_H_
#define IDISTILL_INPUTS_H_

#include <array>

#include "idistill/fock.h"

namespace idistill {

/// Diagonal weights on {|L up,R up>, |L up,R down>, |L down,R up>,
/// |L down,R down>}. Nonnegative, summing to one.
class DiagonalInput {
 public:
  static constexpr double kSumTol = 1e-12;

  DiagonalInput(double uu, double ud, double du, double dd);

  double uu() const { return w_[0]; }
  double ud() const { return w_[1]; }
  double du() const { return w_[2]; }
  double dd() const { return w_[3]; }
  const std::array<double, 4>& weights() const { return w_; }

  /// diag(weights) on the LR basis.
  Matrix4 to_matrix() const;

  bool operator==(const DiagonalInput&) const = default;

 private:
  std::array<double, 4> w_;
};

/// Inverse temperature used for T = 0 requests (weights below 1e-21).
inline constexpr double kZeroTemperatureBeta = 50.0;

/// Maps T/omega to beta*omega. T = 0 maps to kZeroTemperatureBeta, T = +inf to
/// 0. Throws on negative or NaN temperatures.
double beta_from_temperature(double t_over_omega);

struct ThermalSpec {
  double beta_left = 0.0;
  double beta_right = 0.0;

  static ThermalSpec equal(double beta) { return {beta, beta}; }
  static ThermalSpec from_temperatures(double t_left, double t_right);
};

struct WernerSpec {
  double p = 0.0;
};

DiagonalInput product_diagonal(double left_up, double right_up);

/// Product of single-qubit Gibbs states for H = (omega/2) sigma_z, omega = 1:
/// weight of down is proportional to e^{+beta/2}, up to e^{-beta/2}.
DiagonalInput thermal_input(const ThermalSpec& spec);

/// (1-p)|L up,R down><L up,R down| + (p/4) identity.
DiagonalInput werner_input(const WernerSpec& spec);

}  // namespace idistill

#endif  // IDISTILL_INPUTS_H_
