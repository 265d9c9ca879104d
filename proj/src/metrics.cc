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

#include "idistill/metrics.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>

#include <fmt/format.h>

namespace idistill {

namespace {

constexpr int kUU = 0;
constexpr int kUD = 1;
constexpr int kDU = 2;
constexpr int kDD = 3;

const DensityOperator& require_lr(const DensityOperator& rho) {
  if (rho.tag() != BasisTag::kLR) {
    throw InvalidStateError("metrics are defined on the LR basis only");
  }
  return rho;
}

Matrix4 spin_flip() {
  // sigma_y (x) sigma_y
  Matrix4 s = Matrix4::Zero();
  s(0, 3) = -1.0;
  s(1, 2) = 1.0;
  s(2, 1) = 1.0;
  s(3, 0) = -1.0;
  return s;
}

std::array<Eigen::Matrix2cd, 3> paulis() {
  const Complex i{0.0, 1.0};
  Eigen::Matrix2cd x, y, z;
  x << 0.0, 1.0, 1.0, 0.0;
  y << 0.0, -i, i, 0.0;
  z << 1.0, 0.0, 0.0, -1.0;
  return {x, y, z};
}

Matrix4 kron(const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b) {
  Matrix4 k;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) k.block<2, 2>(2 * r, 2 * c) = a(r, c) * b;
  return k;
}

}  // namespace

Matrix4 singlet_state() {
  Eigen::Vector4cd psi = Eigen::Vector4cd::Zero();
  psi(kUD) = 1.0 / std::sqrt(2.0);
  psi(kDU) = -1.0 / std::sqrt(2.0);
  return psi * psi.adjoint();
}

double concurrence(const Matrix4& rho) {
  validate_density_matrix(rho);
  const Matrix4 h = 0.5 * (rho + rho.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix4> es(h);

  // Negative rounding noise is clamped; small positive weights are kept, since
  // the concurrence depends on their square roots.
  Matrix4 w;
  for (int k = 0; k < 4; ++k) {
    w.col(k) = es.eigenvectors().col(k) *
               std::sqrt(std::max(0.0, es.eigenvalues()(k)));
  }
  const Matrix m = w.adjoint() * spin_flip() * w.conjugate();
  Eigen::JacobiSVD<Matrix> svd(m);
  std::array<double, 4> l{};
  for (int k = 0; k < svd.singularValues().size(); ++k) {
    l[k] = svd.singularValues()(k);
  }
  std::sort(l.begin(), l.end(), std::greater<>());
  return std::max(0.0, l[0] - l[1] - l[2] - l[3]);
}

double concurrence(const DensityOperator& rho) {
  return concurrence(Matrix4(require_lr(rho).matrix()));
}

double bell_max(const Matrix4& rho) {
  validate_density_matrix(rho);
  double off_x = 0.0;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      if (r == c) continue;
      if ((r == kUD && c == kDU) || (r == kDU && c == kUD)) continue;
      off_x = std::max(off_x, std::abs(rho(r, c)));
    }
  }
  const double imag = std::abs(rho(kUD, kDU).imag());
  if (off_x > kXShapeTol || imag > kXShapeTol) {
    throw NotXShapedError(fmt::format(
        "Horodecki shortcut inapplicable: off-X weight {:.3e}, imaginary "
        "coherence {:.3e}",
        off_x, imag));
  }
  const double p = rho(kUU, kUU).real() + rho(kDD, kDD).real() -
                   rho(kUD, kUD).real() - rho(kDU, kDU).real();
  const double q = 2.0 * rho(kUD, kDU).real();
  return 2.0 * std::sqrt(p * p + q * q);
}

double bell_max(const DensityOperator& rho) {
  return bell_max(Matrix4(require_lr(rho).matrix()));
}

double horodecki_bell_max(const Matrix4& rho) {
  validate_density_matrix(rho);
  const auto s = paulis();
  Eigen::Matrix3d t;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) t(i, j) = (rho * kron(s[i], s[j])).trace().real();
  Eigen::JacobiSVD<Eigen::Matrix3d> svd(t);
  const auto& sv = svd.singularValues();
  return 2.0 * std::sqrt(sv(0) * sv(0) + sv(1) * sv(1));
}

double singlet_fidelity(const Matrix4& rho) {
  validate_density_matrix(rho);
  // <Psi-|rho|Psi-> = (rho_ud,ud + rho_du,du)/2 - Re rho_ud,du
  const double f = 0.5 * (rho(kUD, kUD).real() + rho(kDU, kDU).real()) -
                   rho(kUD, kDU).real();
  return std::clamp(f, 0.0, 1.0);
}

double singlet_fidelity(const DensityOperator& rho) {
  return singlet_fidelity(Matrix4(require_lr(rho).matrix()));
}

MetricBundle evaluate_metrics(const DensityOperator& rho) {
  require_lr(rho);
  const Matrix4 m = rho.matrix();
  return {concurrence(m), bell_max(m), singlet_fidelity(m)};
}

}  // namespace idistill
