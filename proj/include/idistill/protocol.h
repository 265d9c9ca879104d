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

#ifndef IDISTILL_PROTOCOL_H_
#define IDISTILL_PROTOCOL_H_

#include <optional>

#include "idistill/density.h"
#include "idistill/fock.h"
#include "idistill/inputs.h"

namespace idistill {

/// Post-selection is declared failed below this success probability.
inline constexpr double kFailureThreshold = 1e-12;

/// Post-selected state and its success probability. `rho_fin` is empty when
/// post-selection failed.
struct DistillationOutcome {
  std::optional<DensityOperator> rho_fin;
  double p_success = 0.0;

  bool failed() const { return !rho_fin.has_value(); }
};

/// Nonzero entries of the post-selected X-state in the LR basis. The single
/// real coherence is <L up,R down| rho |L down,R up> (equal to its transpose).
struct CoefficientTable {
  double uu = 0.0;
  double ud = 0.0;
  double du = 0.0;
  double dd = 0.0;
  double coherence = 0.0;
  double p_success = 0.0;
  bool failed = false;

  /// The 4x4 LR-basis matrix described by the table.
  Matrix4 to_matrix() const;
};

/// Deform, post-select one particle per site, renormalize. Runs the full
/// second-quantized pipeline.
DistillationOutcome distill(const DiagonalInput& input,
                            const DeformationParams& params,
                            Statistics statistics);

/// Same as distill but returns the unnormalized deformed state on the full
/// two-particle space.
DensityOperator deformed_state(const DiagonalInput& input,
                               const DeformationParams& params,
                               Statistics statistics);

/// Reads the X-shape entries of a pipeline outcome.
CoefficientTable table_from_outcome(const DistillationOutcome& outcome);

/// Closed-form coefficients of the post-selected state. With c = cos(theta/2),
/// s = sin(theta/2) and unnormalized weights
///   uu, dd   : lambda * g,   g = cos^2(theta) (boson) or 1 (fermion)
///   ud       : lambda_ud c^4 + lambda_du s^4,  du symmetric
///   coherence: -eta sin^2(theta) (lambda_ud + lambda_du) / 4
/// every entry is divided by the success probability (their trace).
CoefficientTable closed_form_coefficients(const DiagonalInput& input,
                                          const DeformationParams& params,
                                          Statistics statistics);

/// Success probability in closed form:
///   1 - sin^2(theta) (1 + lambda_uu + lambda_dd) / 2   (bosons)
///   1 - sin^2(theta) (lambda_ud + lambda_du) / 2       (fermions)
double closed_form_success(const DiagonalInput& input, double theta,
                           Statistics statistics);

/// Max |pipeline - closed form| over the seven table entries and p_success.
double oracle_compare(const DiagonalInput& input,
                      const DeformationParams& params, Statistics statistics);

}  // namespace idistill

#endif  // IDISTILL_PROTOCOL_H_
