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

#ifndef IDISTILL_DENSITY_H_
#define IDISTILL_DENSITY_H_

#include <stdexcept>
#include <string>

#include "idistill/fock.h"

namespace idistill {

/// Which space a density operator lives in.
enum class BasisTag {
  kLR,                // 4-dim computational basis, one particle per site
  kTwoParticleBoson,  // 10-dim occupation basis
  kTwoParticleFermion // 6-dim occupation basis
};

BasisTag full_space_tag(Statistics statistics);
int basis_dim(BasisTag tag);

inline constexpr double kHermiticityTol = 1e-12;
inline constexpr double kPositivityTol = 1e-10;
inline constexpr double kTraceTol = 1e-12;

/// Thrown for matrices that violate density-operator invariants.
class InvalidStateError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Checks Hermiticity, positivity and (unless `require_unit_trace` is false)
/// unit trace. Throws InvalidStateError naming the failed check.
void validate_density_matrix(const Matrix& m, bool require_unit_trace = true);

/// Hermitian, positive semidefinite matrix on a declared basis. Unit trace
/// unless built with `unnormalized`.
class DensityOperator {
 public:
  static DensityOperator make(BasisTag tag, Matrix matrix);
  static DensityOperator unnormalized(BasisTag tag, Matrix matrix);

  BasisTag tag() const { return tag_; }
  const Matrix& matrix() const { return matrix_; }
  bool normalized() const { return normalized_; }
  int dim() const { return static_cast<int>(matrix_.rows()); }

 private:
  DensityOperator(BasisTag tag, Matrix matrix, bool normalized)
      : tag_(tag), matrix_(std::move(matrix)), normalized_(normalized) {}

  BasisTag tag_;
  Matrix matrix_;
  bool normalized_;
};

/// Support-check tolerance used by restrict_lr.
inline constexpr double kSupportTol = 1e-12;

DensityOperator embed_lr(const DensityOperator& lr_state,
                         const TwoParticleSpace& space);

/// Inverse of embed_lr. Throws InvalidStateError("unprojected support ...")
/// if any matrix element touches a state with two particles in one site.
DensityOperator restrict_lr(const DensityOperator& state,
                            const TwoParticleSpace& space);

}  // namespace idistill

#endif  // IDISTILL_DENSITY_H_
