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

#include "idistill/inputs.h"

#include <cmath>
#include <stdexcept>

#include <fmt/format.h>

namespace idistill {

DiagonalInput::DiagonalInput(double uu, double ud, double du, double dd)
    : w_{uu, ud, du, dd} {
  double sum = 0.0;
  for (double w : w_) {
    if (!std::isfinite(w) || w < 0.0) {
      throw std::invalid_argument(
          fmt::format("diagonal weight must be finite and nonnegative, got {}", w));
    }
    sum += w;
  }
  if (std::abs(sum - 1.0) > kSumTol) {
    throw std::invalid_argument(
        fmt::format("diagonal weights sum to {:.15g}, expected 1", sum));
  }
}

Matrix4 DiagonalInput::to_matrix() const {
  Matrix4 m = Matrix4::Zero();
  for (int k = 0; k < 4; ++k) m(k, k) = w_[k];
  return m;
}

double beta_from_temperature(double t_over_omega) {
  if (std::isnan(t_over_omega) || t_over_omega < 0.0) {
    throw std::invalid_argument(
        fmt::format("temperature must be >= 0, got {}", t_over_omega));
  }
  if (t_over_omega == 0.0) return kZeroTemperatureBeta;
  return 1.0 / t_over_omega;
}

ThermalSpec ThermalSpec::from_temperatures(double t_left, double t_right) {
  return {beta_from_temperature(t_left), beta_from_temperature(t_right)};
}

namespace {

void check_probability(double x, const char* name) {
  if (!std::isfinite(x) || x < 0.0 || x > 1.0) {
    throw std::invalid_argument(
        fmt::format("{} must be a probability in [0, 1], got {}", name, x));
  }
}

// Up-state population of one qubit at inverse temperature beta (omega = 1).
double gibbs_up(double beta) { return 1.0 / (1.0 + std::exp(beta)); }
double gibbs_down(double beta) { return 1.0 / (1.0 + std::exp(-beta)); }

}  // namespace

DiagonalInput product_diagonal(double left_up, double right_up) {
  check_probability(left_up, "left up-probability");
  check_probability(right_up, "right up-probability");
  const double left_down = 1.0 - left_up;
  const double right_down = 1.0 - right_up;
  return DiagonalInput(left_up * right_up, left_up * right_down,
                       left_down * right_up, left_down * right_down);
}

DiagonalInput thermal_input(const ThermalSpec& spec) {
  for (double beta : {spec.beta_left, spec.beta_right}) {
    if (std::isnan(beta) || beta < 0.0) {
      throw std::invalid_argument(
          fmt::format("inverse temperature must be >= 0, got {}", beta));
    }
  }
  const double lu = gibbs_up(spec.beta_left);
  const double ld = gibbs_down(spec.beta_left);
  const double ru = gibbs_up(spec.beta_right);
  const double rd = gibbs_down(spec.beta_right);
  return DiagonalInput(lu * ru, lu * rd, ld * ru, ld * rd);
}

DiagonalInput werner_input(const WernerSpec& spec) {
  check_probability(spec.p, "Werner noise weight p");
  const double q = spec.p / 4.0;
  return DiagonalInput(q, 1.0 - 3.0 * q, q, q);
}

}  // namespace idistill
