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

#include "idistill/optimizer.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "idistill/metrics.h"
#include "idistill/protocol.h"

namespace idistill {

std::string_view to_string(ConstraintKind kind) {
  switch (kind) {
    case ConstraintKind::kBellViolation:
      return "bell";
    case ConstraintKind::kFidelityThreshold:
      return "fidelity";
    case ConstraintKind::kPerfect:
      return "perfect";
  }
  return "?";
}

std::string_view to_string(Family family) {
  return family == Family::kThermal ? "thermal" : "werner";
}

Constraint::Constraint(ConstraintKind kind, double epsilon)
    : kind_(kind), epsilon_(epsilon) {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw std::invalid_argument("constraint epsilon must be > 0");
  }
}

double Constraint::margin(double metric) const {
  switch (kind_) {
    case ConstraintKind::kBellViolation:
      return metric - (2.0 + epsilon_);
    case ConstraintKind::kFidelityThreshold:
      return metric - (2.0 / 3.0 + epsilon_);
    case ConstraintKind::kPerfect:
      return metric - (1.0 - epsilon_);
  }
  return -1.0;
}

ThetaSample evaluate_theta(const DiagonalInput& input, Statistics statistics,
                           ConstraintKind kind, double theta,
                           Evaluator evaluator) {
  const DeformationParams params(theta);
  ThetaSample sample{.theta = theta};
  Matrix4 rho;
  if (evaluator == Evaluator::kClosedForm) {
    const CoefficientTable t = closed_form_coefficients(input, params, statistics);
    sample.p_success = t.p_success;
    sample.failed = t.failed;
    if (!t.failed) rho = t.to_matrix();
  } else {
    const DistillationOutcome out = distill(input, params, statistics);
    sample.p_success = out.p_success;
    sample.failed = out.failed();
    if (!out.failed()) rho = out.rho_fin->matrix();
  }
  if (sample.failed) return sample;
  sample.metric = kind == ConstraintKind::kBellViolation ? bell_max(rho)
                                                         : singlet_fidelity(rho);
  return sample;
}

GoldenSectionResult golden_section_maximize(
    const std::function<double(double)>& f, double a, double b, double tol) {
  if (b < a) std::swap(a, b);
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  GoldenSectionResult best{a, f(a)};
  auto consider = [&best](double x, double v) {
    if (v > best.value) best = {x, v};
  };
  consider(b, f(b));

  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = f(x1);
  double f2 = f(x2);
  consider(x1, f1);
  consider(x2, f2);
  while (b - a > tol) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = f(x2);
      consider(x2, f2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = f(x1);
      consider(x1, f1);
    }
  }
  return best;
}

namespace {

// Objective for the refinement step: the quantity being maximized when
// feasible, otherwise a value below every feasible one that still grows
// toward the feasible boundary.
double penalized(const ThetaSample& s, const Constraint& c) {
  if (s.failed) return -2.0;
  const double m = c.margin(s.metric);
  if (m < 0.0) return -1.0 + std::max(m, -1.0);
  return c.kind() == ConstraintKind::kPerfect ? s.metric : s.p_success;
}

// Grid-point preference: higher objective; for the perfect constraint ties in
// fidelity go to the larger success probability.
bool better(const ThetaSample& a, const ThetaSample& b, const Constraint& c) {
  const double pa = penalized(a, c);
  const double pb = penalized(b, c);
  if (pa != pb) return pa > pb;
  return a.p_success > b.p_success;
}

Optimum to_optimum(const ThetaSample& s, const Constraint& c) {
  Optimum o;
  o.theta_opt = s.theta;
  o.p_max = s.p_success;
  o.achieved_metric = s.metric;
  o.margin = s.failed ? -std::numeric_limits<double>::infinity()
                      : c.margin(s.metric);
  o.feasible = !s.failed && o.margin >= 0.0;
  return o;
}

}  // namespace

Optimum maximize_success(const DiagonalInput& input, Statistics statistics,
                         const Constraint& constraint,
                         const OptimizerOptions& options) {
  if (options.grid_points < 3) {
    throw std::invalid_argument("optimizer grid needs at least 3 points");
  }
  const double upper = std::numbers::pi / 2.0;
  const int n = options.grid_points;
  auto grid_theta = [&](int k) {
    return k == n - 1 ? upper : upper * static_cast<double>(k) / (n - 1);
  };
  auto sample_at = [&](double theta) {
    return evaluate_theta(input, statistics, constraint.kind(), theta,
                          options.evaluator);
  };

  ThetaSample best = sample_at(grid_theta(0));
  int best_k = 0;
  for (int k = 1; k < n; ++k) {
    const ThetaSample s = sample_at(grid_theta(k));
    if (better(s, best, constraint)) {
      best = s;
      best_k = k;
    }
  }
  if (constraint.margin(best.metric) < 0.0 || best.failed) {
    // Best-violating diagnostics: the grid point closest to feasibility.
    return to_optimum(best, constraint);
  }

  const double lo = grid_theta(std::max(best_k - 1, 0));
  const double hi = grid_theta(std::min(best_k + 1, n - 1));
  const double grid_value = penalized(best, constraint);
  const GoldenSectionResult refined = golden_section_maximize(
      [&](double theta) { return penalized(sample_at(theta), constraint); }, lo,
      hi, options.theta_tol);
  if (refined.value > grid_value) {
    const ThetaSample s = sample_at(refined.x);
    if (constraint.margin(s.metric) >= 0.0) best = s;
  }
  return to_optimum(best, constraint);
}

DiagonalInput family_input(Family family, double parameter) {
  if (family == Family::kThermal) {
    return thermal_input(ThermalSpec::from_temperatures(parameter, parameter));
  }
  return werner_input(WernerSpec{parameter});
}

std::vector<SweepPoint> sweep_optimum(Family family,
                                      std::span<const double> grid,
                                      const Constraint& constraint,
                                      Statistics statistics,
                                      const OptimizerOptions& options) {
  if (grid.empty()) throw std::invalid_argument("sweep grid is empty");
  std::vector<SweepPoint> out;
  out.reserve(grid.size());
  for (double parameter : grid) {
    out.push_back({parameter, maximize_success(family_input(family, parameter),
                                               statistics, constraint, options)});
  }
  return out;
}

}  // namespace idistill
