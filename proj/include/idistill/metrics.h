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

#ifndef IDISTILL_METRICS_H_
#define IDISTILL_METRICS_H_

#include <stdexcept>

#include "idistill/density.h"
#include "idistill/fock.h"

namespace idistill {

// Figures of merit for two-qubit states on the LR basis
// {|L up,R up>, |L up,R down>, |L down,R up>, |L down,R down>}.

struct MetricBundle {
  double concurrence = 0.0;
  double bell_max = 0.0;
  double singlet_fidelity = 0.0;
};

/// Thrown by bell_max for states with coherences outside the X pattern.
class NotXShapedError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Off-X entries and corner coherences above this count as non-X.
inline constexpr double kXShapeTol = 1e-12;

/// Wootters concurrence max(0, l1 - l2 - l3 - l4), where l_i are the square
/// roots of the eigenvalues of rho (sy x sy) rho* (sy x sy), largest first.
///
/// The l_i are the singular values of W^+ S W*, with rho = W W^+ from an
/// eigendecomposition and S = sy x sy. This equals the square roots of the
/// eigenvalues of the Hermitian sqrt(rho) rho~ sqrt(rho) without taking square
/// roots of rounding noise.
/// Throws InvalidStateError for non-density-matrix input.
double concurrence(const Matrix4& rho);
double concurrence(const DensityOperator& rho);

/// Maximal CHSH value 2 sqrt(P^2 + Q^2) of an X-shaped state whose only
/// coherence is the real (up-down, down-up) element:
///   P = rho_uu + rho_dd - rho_ud - rho_du,  Q = 2 rho_(ud,du).
/// Throws NotXShapedError("Horodecki shortcut inapplicable") otherwise.
double bell_max(const Matrix4& rho);
double bell_max(const DensityOperator& rho);

/// General Horodecki value 2 sqrt(t1^2 + t2^2) from the two largest singular
/// values of the correlation matrix T_ij = Tr(rho s_i x s_j). Valid for any
/// two-qubit state.
double horodecki_bell_max(const Matrix4& rho);

/// <Psi-| rho |Psi->, Psi- = (|L up,R down> - |L down,R up>)/sqrt(2).
double singlet_fidelity(const Matrix4& rho);
double singlet_fidelity(const DensityOperator& rho);

MetricBundle evaluate_metrics(const DensityOperator& rho);

/// The singlet as a density matrix on the LR basis.
Matrix4 singlet_state();

}  // namespace idistill

#endif  // IDISTILL_METRICS_H_
