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

#ifndef IDISTILL_ANALYTIC_H_
#define IDISTILL_ANALYTIC_H_

// Closed-form boson results for equal-temperature thermal inputs (functions of
// beta*omega and theta) and Werner inputs (functions of p and theta).

namespace idistill::analytic {

struct ThermalClosedForm {
  double concurrence;
  double p_success;
  double fidelity;
};

struct WernerClosedForm {
  double p_success;
  double fidelity;
};

/// max(0, (2 - 6cos^2 t) / (4cos^2 t cosh(bw) + cos 2t + 3)).
double thermal_concurrence(double beta_omega, double theta);

/// 1 - [(1 + 2cosh bw) / (2 + 2cosh bw)] sin^2 t.
double thermal_success(double beta_omega, double theta);

/// 2 / (3 + cos 2t + 4cos^2 t cosh bw); exactly 1 at t = pi/2.
double thermal_fidelity(double beta_omega, double theta);

ThermalClosedForm thermal(double beta_omega, double theta);

/// (6 - p + (p + 2) cos 2t) / 8.
double werner_success(double p, double theta);

/// 2(2 - p) / (6 - p + (p + 2) cos 2t); exactly 1 at t = pi/2.
double werner_fidelity(double p, double theta);

WernerClosedForm werner(double p, double theta);

}  // namespace idistill::analytic

#endif  // IDISTILL_ANALYTIC_H_
