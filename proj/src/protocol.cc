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

#include "idistill/protocol.h"

#include <algorithm>
#include <cmath>

namespace idistill {

namespace {

// LR basis positions.
constexpr int kUU = 0;
constexpr int kUD = 1;
constexpr int kDU = 2;
constexpr int kDD = 3;

}  // namespace

Matrix4 CoefficientTable::to_matrix() const {
  Matrix4 m = Matrix4::Zero();
  m(kUU, kUU) = uu;
  m(kUD, kUD) = ud;
  m(kDU, kDU) = du;
  m(kDD, kDD) = dd;
  m(kUD, kDU) = coherence;
  m(kDU, kUD) = coherence;
  return m;
}

DensityOperator deformed_state(const DiagonalInput& input,
                               const DeformationParams& params,
                               Statistics statistics) {
  const TwoParticleSpace space = build_space(statistics);
  const DensityOperator initial = embed_lr(
      DensityOperator::make(BasisTag::kLR, input.to_matrix()), space);
  const Matrix u =
      lift_to_two_particles(single_particle_deformation(params), space);
  Matrix rho = u * initial.matrix() * u.adjoint();
  rho = 0.5 * (rho + rho.adjoint()).eval();
  return DensityOperator::unnormalized(full_space_tag(statistics),
                                       std::move(rho));
}

DistillationOutcome distill(const DiagonalInput& input,
                            const DeformationParams& params,
                            Statistics statistics) {
  const TwoParticleSpace space = build_space(statistics);
  const DensityOperator rho_d = deformed_state(input, params, statistics);
  const Matrix proj = slocc_projector(space);
  const Matrix projected = proj * rho_d.matrix() * proj;

  DistillationOutcome out;
  out.p_success = std::clamp(projected.trace().real(), 0.0, 1.0);
  if (out.p_success < kFailureThreshold) return out;

  const DensityOperator full = DensityOperator::make(
      full_space_tag(statistics), projected / out.p_success);
  out.rho_fin = restrict_lr(full, space);
  return out;
}

CoefficientTable table_from_outcome(const DistillationOutcome& outcome) {
  CoefficientTable t;
  t.p_success = outcome.p_success;
  if (outcome.failed()) {
    t.failed = true;
    return t;
  }
  const Matrix& m = outcome.rho_fin->matrix();
  t.uu = m(kUU, kUU).real();
  t.ud = m(kUD, kUD).real();
  t.du = m(kDU, kDU).real();
  t.dd = m(kDD, kDD).real();
  t.coherence = m(kUD, kDU).real();
  return t;
}

CoefficientTable closed_form_coefficients(const DiagonalInput& input,
                                          const DeformationParams& params,
                                          Statistics statistics) {
  const double theta = params.theta();
  const double c2 = std::pow(std::cos(theta / 2.0), 2);
  const double s2 = std::pow(std::sin(theta / 2.0), 2);
  const double sin2 = std::pow(std::sin(theta), 2);
  const double eta = exchange_sign(statistics);
  // Equal-spin pairs: fermions anti-bunch and stay put; bosons keep the
  // amplitude cos(theta) on |L s, R s>.
  const double same_spin =
      statistics == Statistics::kBoson ? std::pow(std::cos(theta), 2) : 1.0;
  const double opposite = input.ud() + input.du();

  CoefficientTable t;
  t.uu = input.uu() * same_spin;
  t.dd = input.dd() * same_spin;
  t.ud = input.ud() * c2 * c2 + input.du() * s2 * s2;
  t.du = input.du() * c2 * c2 + input.ud() * s2 * s2;
  t.coherence = -eta * sin2 * opposite / 4.0;

  // Same value as closed_form_success, summed so the normalized table has
  // unit trace to rounding even when the success probability is tiny.
  t.p_success = std::clamp(t.uu + t.ud + t.du + t.dd, 0.0, 1.0);

  if (t.p_success < kFailureThreshold) {
    return CoefficientTable{.p_success = t.p_success, .failed = true};
  }
  for (double* entry : {&t.uu, &t.ud, &t.du, &t.dd, &t.coherence}) {
    *entry /= t.p_success;
  }
  return t;
}

double closed_form_success(const DiagonalInput& input, double theta,
                           Statistics statistics) {
  const double sin2 = std::pow(std::sin(theta), 2);
  const double lost = statistics == Statistics::kBoson
                          ? 1.0 + input.uu() + input.dd()
                          : input.ud() + input.du();
  return std::clamp(1.0 - 0.5 * sin2 * lost, 0.0, 1.0);
}

double oracle_compare(const DiagonalInput& input,
                      const DeformationParams& params, Statistics statistics) {
  const DistillationOutcome outcome = distill(input, params, statistics);
  const CoefficientTable oracle = table_from_outcome(outcome);
  const CoefficientTable closed =
      closed_form_coefficients(input, params, statistics);

  double dev = std::abs(oracle.p_success - closed.p_success);
  if (oracle.failed || closed.failed) {
    return oracle.failed == closed.failed ? dev : 1.0;
  }
  // Entrywise over the whole 4x4 state, so the zero corners and the
  // imaginary part of the coherence are checked too.
  const Matrix4 diff = outcome.rho_fin->matrix() - closed.to_matrix();
  dev = std::max(dev, diff.cwiseAbs().maxCoeff());
  return dev;
}

}  // namespace idistill
