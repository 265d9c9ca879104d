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

#include "idistill/density.h"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

namespace idistill {

BasisTag full_space_tag(Statistics statistics) {
  return statistics == Statistics::kBoson ? BasisTag::kTwoParticleBoson
                                          : BasisTag::kTwoParticleFermion;
}

int basis_dim(BasisTag tag) {
  switch (tag) {
    case BasisTag::kLR:
      return 4;
    case BasisTag::kTwoParticleBoson:
      return 10;
    case BasisTag::kTwoParticleFermion:
      return 6;
  }
  return 0;
}

void validate_density_matrix(const Matrix& m, bool require_unit_trace) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw InvalidStateError("density matrix must be square and nonempty");
  }
  if (!m.allFinite()) {
    throw InvalidStateError("density matrix has non-finite entries");
  }
  const double herm_dev = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (herm_dev > kHermiticityTol) {
    throw InvalidStateError(
        fmt::format("density matrix not Hermitian (deviation {:.3e})", herm_dev));
  }
  const Matrix h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> es(h, Eigen::EigenvaluesOnly);
  const double min_eig = es.eigenvalues().minCoeff();
  if (min_eig < -kPositivityTol) {
    throw InvalidStateError(fmt::format(
        "density matrix not positive semidefinite (min eigenvalue {:.3e})",
        min_eig));
  }
  if (require_unit_trace) {
    const double tr = m.trace().real();
    if (std::abs(tr - 1.0) > kTraceTol) {
      throw InvalidStateError(
          fmt::format("density matrix trace {:.15g} differs from 1", tr));
    }
  }
}

DensityOperator DensityOperator::make(BasisTag tag, Matrix matrix) {
  if (matrix.rows() != basis_dim(tag)) {
    throw InvalidStateError(fmt::format("expected a {}-dim matrix, got {}",
                                        basis_dim(tag), matrix.rows()));
  }
  validate_density_matrix(matrix, true);
  return DensityOperator(tag, std::move(matrix), true);
}

DensityOperator DensityOperator::unnormalized(BasisTag tag, Matrix matrix) {
  if (matrix.rows() != basis_dim(tag)) {
    throw InvalidStateError(fmt::format("expected a {}-dim matrix, got {}",
                                        basis_dim(tag), matrix.rows()));
  }
  validate_density_matrix(matrix, false);
  return DensityOperator(tag, std::move(matrix), false);
}

DensityOperator embed_lr(const DensityOperator& lr_state,
                         const TwoParticleSpace& space) {
  if (lr_state.tag() != BasisTag::kLR) {
    throw InvalidStateError("embed_lr expects a state on the LR basis");
  }
  const Matrix iso = lr_isometry(space);
  Matrix full = iso * lr_state.matrix() * iso.adjoint();
  const BasisTag tag = full_space_tag(space.statistics());
  return lr_state.normalized() ? DensityOperator::make(tag, std::move(full))
                               : DensityOperator::unnormalized(tag, std::move(full));
}

DensityOperator restrict_lr(const DensityOperator& state,
                            const TwoParticleSpace& space) {
  if (state.tag() != full_space_tag(space.statistics())) {
    throw InvalidStateError("restrict_lr: state does not live in this space");
  }
  const Matrix& m = state.matrix();
  double outside = 0.0;
  for (int r = 0; r < space.dim(); ++r) {
    for (int c = 0; c < space.dim(); ++c) {
      if (space.is_lr(r) && space.is_lr(c)) continue;
      outside = std::max(outside, std::abs(m(r, c)));
    }
  }
  if (outside > kSupportTol) {
    throw InvalidStateError(fmt::format(
        "unprojected support: weight {:.3e} outside the LR sector", outside));
  }
  const Matrix iso = lr_isometry(space);
  Matrix lr = iso.adjoint() * m * iso;
  return state.normalized() ? DensityOperator::make(BasisTag::kLR, std::move(lr))
                            : DensityOperator::unnormalized(BasisTag::kLR, std::move(lr));
}

}  // namespace idistill
