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

#include "idistill/analytic.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace idistill::analytic {

namespace {

// At theta = pi/2 the cos(theta) factors vanish symbolically; the double
// cos(pi/2) ~ 6e-17 would otherwise be amplified by cosh(beta*omega).
bool at_half_pi(double theta) {
  return std::abs(theta - std::numbers::pi / 2.0) < 1e-15;
}

double cos_squared(double theta) {
  return at_half_pi(theta) ? 0.0 : std::pow(std::cos(theta), 2);
}

double sin_squared(double theta) {
  return at_half_pi(theta) ? 1.0 : std::pow(std::sin(theta), 2);
}

void check_beta(double beta_omega) {
  if (std::isnan(beta_omega) || beta_omega < 0.0) {
    throw std::invalid_argument("beta*omega must be >= 0");
  }
}

void check_p(double p) {
  if (!std::isfinite(p) || p < 0.0 || p > 1.0) {
    throw std::invalid_argument("Werner p must lie in [0, 1]");
  }
}

}  // namespace

double thermal_concurrence(double beta_omega, double theta) {
  check_beta(beta_omega);
  const double c2 = cos_squared(theta);
  const double cos_2t = 2.0 * c2 - 1.0;
  const double thermal_term = c2 == 0.0 ? 0.0 : 4.0 * c2 * std::cosh(beta_omega);
  const double value = (2.0 - 6.0 * c2) / (thermal_term + cos_2t + 3.0);
  return std::max(0.0, value);
}

double thermal_success(double beta_omega, double theta) {
  check_beta(beta_omega);
  // 1 - r sin^2 with 1 - r = 1/(2 + 2 cosh), rearranged so that small
  // probabilities at low temperature keep their relative precision.
  const double tail = 1.0 / (2.0 + 2.0 * std::cosh(beta_omega));
  return cos_squared(theta) + tail * sin_squared(theta);
}

double thermal_fidelity(double beta_omega, double theta) {
  check_beta(beta_omega);
  if (at_half_pi(theta)) return 1.0;
  const double c2 = cos_squared(theta);
  return 2.0 / (3.0 + (2.0 * c2 - 1.0) + 4.0 * c2 * std::cosh(beta_omega));
}

ThermalClosedForm thermal(double beta_omega, double theta) {
  return {thermal_concurrence(beta_omega, theta),
          thermal_success(beta_omega, theta),
          thermal_fidelity(beta_omega, theta)};
}

double werner_success(double p, double theta) {
  check_p(p);
  const double cos_2t = 1.0 - 2.0 * sin_squared(theta);
  return (6.0 - p + (p + 2.0) * cos_2t) / 8.0;
}

double werner_fidelity(double p, double theta) {
  check_p(p);
  if (at_half_pi(theta)) return 1.0;
  const double cos_2t = 1.0 - 2.0 * sin_squared(theta);
  return 2.0 * (2.0 - p) / (6.0 - p + (p + 2.0) * cos_2t);
}

WernerClosedForm werner(double p, double theta) {
  return {werner_success(p, theta), werner_fidelity(p, theta)};
}

}  // namespace idistill::analytic
