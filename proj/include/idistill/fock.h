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

#ifndef IDISTILL_FOCK_H_
#define IDISTILL_FOCK_H_

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace idistill {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Matrix4 = Eigen::Matrix4cd;
using Vector = Eigen::VectorXcd;

/// Exchange statistics of the two identical particles. The underlying value is
/// the exchange sign eta.
enum class Statistics : int { kBoson = 1, kFermion = -1 };

constexpr int exchange_sign(Statistics s) { return static_cast<int>(s); }

/// Throws std::invalid_argument unless eta is +1 or -1.
Statistics statistics_from_sign(int eta);

std::string_view to_string(Statistics s);

enum class Site : std::uint8_t { kL = 0, kR = 1 };
enum class Spin : std::uint8_t { kUp = 0, kDown = 1 };

inline constexpr int kNumModes = 4;

/// Single-particle mode (site, pseudospin). The canonical order
/// L-up = 0, L-down = 1, R-up = 2, R-down = 3 fixes every fermionic sign.
struct ModeIndex {
  Site site;
  Spin spin;

  constexpr int index() const {
    return 2 * static_cast<int>(site) + static_cast<int>(spin);
  }
  static constexpr ModeIndex from_index(int i) {
    return {static_cast<Site>(i / 2), static_cast<Spin>(i % 2)};
  }
};

using Occupation = std::array<int, kNumModes>;

/// Two particles over the four modes. Basis vectors are occupation vectors in
/// ascending lexicographic order; the ket for n is
///   (a0+)^n0 (a1+)^n1 (a2+)^n2 (a3+)^n3 |0> / sqrt(n0! n1! n2! n3!),
/// i.e. creation operators applied in ascending mode order, so each basis ket
/// has unit norm.
class TwoParticleSpace {
 public:
  explicit TwoParticleSpace(Statistics statistics);

  Statistics statistics() const { return statistics_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<Occupation>& basis() const { return basis_; }

  std::optional<int> index_of(const Occupation& n) const;

  /// Index of |L left, R right>.
  int lr_index(Spin left, Spin right) const;

  /// True for basis states with exactly one particle in each site.
  bool is_lr(int basis_index) const;

 private:
  Statistics statistics_;
  std::vector<Occupation> basis_;
};

TwoParticleSpace build_space(Statistics statistics);

/// Deformation angle theta in [0, pi] and phase phi in [0, 2pi).
class DeformationParams {
 public:
  explicit DeformationParams(double theta, double phi = 0.0);

  double theta() const { return theta_; }
  double phi() const { return phi_; }

 private:
  double theta_;
  double phi_;
};

/// Mode map U with a_i+ -> sum_j U(j, i) a_j+. Spin is never mixed:
///   U(L,L) = U(R,R) = cos(theta/2),
///   U(R,L) = i e^{i phi} sin(theta/2),  U(L,R) = i e^{-i phi} sin(theta/2).
Matrix4 single_particle_deformation(const DeformationParams& params);

/// Result of normal-ordering a string of creation operators acting on vacuum.
struct CreationResult {
  double amplitude = 0.0;  // 0 when the string vanishes (Pauli exclusion)
  Occupation occupation{};
};

/// Normal-orders a_{m0}+ a_{m1}+ ... |0> into amplitude * |occupation>, where
/// |occupation> is the normalized basis ket.
CreationResult apply_creation_string(std::span<const int> modes,
                                     Statistics statistics);

/// Second-quantized image of a mode map on the two-particle space, obtained by
/// transforming every creation operator of each basis ket and re-expanding.
/// Works for any 4x4 matrix; unitary input gives a unitary result.
Matrix lift_to_two_particles(const Matrix4& mode_map,
                             const TwoParticleSpace& space);

/// Orthogonal projector onto one particle per site (rank 4).
Matrix slocc_projector(const TwoParticleSpace& space);

/// Isometry (dim x 4) mapping the computational basis
/// {|L up,R up>, |L up,R down>, |L down,R up>, |L down,R down>} into the space.
Matrix lr_isometry(const TwoParticleSpace& space);

}  // namespace idistill

#endif  // IDISTILL_FOCK_H_
