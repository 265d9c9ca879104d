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

#ifndef IDISTILL_OPTIMIZER_H_
#define IDISTILL_OPTIMIZER_H_

#include <functional>
#include <span>
#include <string_view>
#include <vector>

#include "idistill/fock.h"
#include "idistill/inputs.h"

namespace idistill {

enum class ConstraintKind {
  kBellViolation,      // bell_max > 2
  kFidelityThreshold,  // singlet fidelity > 2/3
  kPerfect,            // singlet fidelity = 1
};

std::string_view to_string(ConstraintKind kind);

/// Strict inequalities are enforced as metric >= threshold + epsilon; the
/// perfect constraint as fidelity >= 1 - epsilon.
class Constraint {
 public:
  static constexpr double kDefaultEpsilon = 1e-9;

  explicit Constraint(ConstraintKind kind, double epsilon = kDefaultEpsilon);

  ConstraintKind kind() const { return kind_; }
  double epsilon() const { return epsilon_; }

  /// Signed distance of `metric` from the feasible region (>= 0 iff feasible).
  double margin(double metric) const;

 private:
  ConstraintKind kind_;
  double epsilon_;
};

struct Optimum {
  double theta_opt = 0.0;
  double p_max = 0.0;
  bool feasible = false;
  /// Bell value or singlet fidelity at theta_opt, depending on the constraint.
  double achieved_metric = 0.0;
  double margin = 0.0;
};

enum class Evaluator {
  kClosedForm,  // coefficient table, oracle-validated
  kPipeline,    // full second-quantized distill()
};

struct OptimizerOptions {
  int grid_points = 10001;
  double theta_tol = 1e-10;
  Evaluator evaluator = Evaluator::kClosedForm;
};

/// Success probability and constrained metric at one deformation angle.
struct ThetaSample {
  double theta = 0.0;
  double p_success = 0.0;
  double metric = 0.0;
  bool failed = false;
};

ThetaSample evaluate_theta(const DiagonalInput& input, Statistics statistics,
                           ConstraintKind kind, double theta,
                           Evaluator evaluator = Evaluator::kClosedForm);

struct GoldenSectionResult {
  double x = 0.0;
  double value = 0.0;
};

/// Golden-section search for the maximum of a unimodal function on [a, b].
/// Returns the best point actually evaluated.
GoldenSectionResult golden_section_maximize(
    const std::function<double(double)>& f, double a, double b, double tol);

/// Maximizes the success probability over theta in [0, pi/2] subject to the
/// constraint: dense grid scan, then golden-section refinement of the best
/// feasible grid point. For kPerfect the fidelity itself is maximized and the
/// success probability reported at that angle.
Optimum maximize_success(const DiagonalInput& input, Statistics statistics,
                         const Constraint& constraint,
                         const OptimizerOptions& options = {});

enum class Family { kThermal, kWerner };

std::string_view to_string(Family family);

/// Equal-temperature thermal input for T/omega, or Werner input for p.
DiagonalInput family_input(Family family, double parameter);

struct SweepPoint {
  double parameter = 0.0;
  Optimum optimum;
};

/// maximize_success at every grid value, in input order. Infeasible points are
/// flagged, never thrown.
std::vector<SweepPoint> sweep_optimum(Family family,
                                      std::span<const double> grid,
                                      const Constraint& constraint,
                                      Statistics statistics = Statistics::kBoson,
                                      const OptimizerOptions& options = {});

}  // namespace idistill

#endif  // IDISTILL_OPTIMIZER_H_
