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

#include "idistill/fock.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace idistill {

Statistics statistics_from_sign(int eta) {
  if (eta == 1) return Statistics::kBoson;
  if (eta == -1) return Statistics::kFermion;
  throw std::invalid_argument("exchange sign must be +1 or -1, got " +
                              std::to_string(eta));
}

std::string_view to_string(Statistics s) {
  return s == Statistics::kBoson ? "boson" : "fermion";
}

TwoParticleSpace::TwoParticleSpace(Statistics statistics)
    : statistics_(statistics) {
  const int max_occ = statistics == Statistics::kBoson ? 2 : 1;
  // Odometer over (n0, n1, n2, n3) in ascending lexicographic order.
  Occupation n{};
  while (true) {
    int total = n[0] + n[1] + n[2] + n[3];
    if (total == 2) basis_.push_back(n);
    int k = kNumModes - 1;
    while (k >= 0 && n[k] == max_occ) {
      n[k] = 0;
      --k;
    }
    if (k < 0) break;
    ++n[k];
  }
}

std::optional<int> TwoParticleSpace::index_of(const Occupation& n) const {
  auto it = std::lower_bound(basis_.begin(), basis_.end(), n);
  if (it == basis_.end() || *it != n) return std::nullopt;
  return static_cast<int>(it - basis_.begin());
}

int TwoParticleSpace::lr_index(Spin left, Spin right) const {
  Occupation n{};
  n[ModeIndex{Site::kL, left}.index()] = 1;
  n[ModeIndex{Site::kR, right}.index()] = 1;
  return *index_of(n);
}

bool TwoParticleSpace::is_lr(int basis_index) const {
  const Occupation& n = basis_.at(basis_index);
  return n[0] + n[1] == 1 && n[2] + n[3] == 1;
}

TwoParticleSpace build_space(Statistics statistics) {
  return TwoParticleSpace(statistics);
}

DeformationParams::DeformationParams(double theta, double phi)
    : theta_(theta), phi_(phi) {
  if (!std::isfinite(theta) || theta < 0.0 || theta > std::numbers::pi) {
    throw std::invalid_argument("theta must lie in [0, pi], got " +
                                std::to_string(theta));
  }
  if (!std::isfinite(phi) || phi < 0.0 || phi >= 2.0 * std::numbers::pi) {
    throw std::invalid_argument("phi must lie in [0, 2pi), got " +
                                std::to_string(phi));
  }
}

Matrix4 single_particle_deformation(const DeformationParams& params) {
  const double c = std::cos(params.theta() / 2.0);
  const double s = std::sin(params.theta() / 2.0);
  const Complex i{0.0, 1.0};
  const Complex to_right = i * std::polar(1.0, params.phi()) * s;
  const Complex to_left = i * std::polar(1.0, -params.phi()) * s;

  Matrix4 u = Matrix4::Zero();
  for (Spin spin : {Spin::kUp, Spin::kDown}) {
    const int l = ModeIndex{Site::kL, spin}.index();
    const int r = ModeIndex{Site::kR, spin}.index();
    u(l, l) = c;
    u(r, l) = to_right;
    u(l, r) = to_left;
    u(r, r) = c;
  }
  return u;
}

CreationResult apply_creation_string(std::span<const int> modes,
                                     Statistics statistics) {
  std::vector<int> ops(modes.begin(), modes.end());
  // Bubble sort; each transposition of distinct modes contributes eta.
  int sign = 1;
  const int eta = exchange_sign(statistics);
  for (std::size_t pass = 0; pass < ops.size(); ++pass) {
    for (std::size_t k = 0; k + 1 < ops.size(); ++k) {
      if (ops[k] > ops[k + 1]) {
        std::swap(ops[k], ops[k + 1]);
        sign *= eta;
      }
    }
  }
  CreationResult result;
  for (int m : ops) {
    if (m < 0 || m >= kNumModes) {
      throw std::out_of_range("mode index out of range");
    }
    ++result.occupation[m];
  }
  double amplitude = sign;
  for (int n : result.occupation) {
    if (n > 1 && statistics == Statistics::kFermion) {
      result.amplitude = 0.0;
      return result;
    }
    // (a+)^n |0> = sqrt(n!) |n>
    amplitude *= std::sqrt(std::tgamma(n + 1.0));
  }
  result.amplitude = amplitude;
  return result;
}

Matrix lift_to_two_particles(const Matrix4& mode_map,
                             const TwoParticleSpace& space) {
  const int dim = space.dim();
  Matrix lifted = Matrix::Zero(dim, dim);
  for (int col = 0; col < dim; ++col) {
    const Occupation& n = space.basis()[col];
    std::array<int, 2> ops{};
    double input_norm = 1.0;
    int k = 0;
    for (int m = 0; m < kNumModes; ++m) {
      for (int rep = 0; rep < n[m]; ++rep) ops[k++] = m;
      input_norm *= std::sqrt(std::tgamma(n[m] + 1.0));
    }
    for (int j0 = 0; j0 < kNumModes; ++j0) {
      const Complex a0 = mode_map(j0, ops[0]);
      if (a0 == Complex{}) continue;
      for (int j1 = 0; j1 < kNumModes; ++j1) {
        const Complex a1 = mode_map(j1, ops[1]);
        if (a1 == Complex{}) continue;
        const std::array<int, 2> image{j0, j1};
        const CreationResult r =
            apply_creation_string(image, space.statistics());
        if (r.amplitude == 0.0) continue;
        const int row = *space.index_of(r.occupation);
        lifted(row, col) += a0 * a1 * (r.amplitude / input_norm);
      }
    }
  }
  return lifted;
}

Matrix slocc_projector(const TwoParticleSpace& space) {
  Matrix proj = Matrix::Zero(space.dim(), space.dim());
  for (int k = 0; k < space.dim(); ++k) {
    if (space.is_lr(k)) proj(k, k) = 1.0;
  }
  return proj;
}

Matrix lr_isometry(const TwoParticleSpace& space) {
  Matrix iso = Matrix::Zero(space.dim(), 4);
  int col = 0;
  for (Spin left : {Spin::kUp, Spin::kDown}) {
    for (Spin right : {Spin::kUp, Spin::kDown}) {
      iso(space.lr_index(left, right), col++) = 1.0;
    }
  }
  return iso;
}

}  // namespace idistill
