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

#include "gtest/gtest.h"
#include "idistill/analytic.h"
#include "test_util.h"

using namespace idistill;
using idistill::testutil::kPi;

namespace {

// 1 - 3/(3 + sqrt 2): boundary of 2 sqrt(P^2 + Q^2) = 2 for the maximally mixed input.
constexpr double kWernerBellMin = 0.3203772410170407;

Optimum werner_optimum(double p, ConstraintKind kind, OptimizerOptions options = {}) {
  return maximize_success(werner_input({p}), Statistics::kBoson, Constraint(kind), options);
}

}  // namespace

TEST(optimizer, constraint_margin) {
  EXPECT_EQ(to_string(ConstraintKind::kBellViolation), "bell");
  EXPECT_EQ(to_string(ConstraintKind::kFidelityThreshold), "fidelity");
  EXPECT_EQ(to_string(ConstraintKind::kPerfect), "perfect");
  EXPECT_GT(Constraint(ConstraintKind::kBellViolation).margin(2.1), 0.0);
  EXPECT_LT(Constraint(ConstraintKind::kBellViolation).margin(2.0), 0.0);
  EXPECT_GT(Constraint(ConstraintKind::kFidelityThreshold).margin(0.7), 0.0);
  EXPECT_LT(Constraint(ConstraintKind::kFidelityThreshold).margin(2.0 / 3.0), 0.0);
  EXPECT_GE(Constraint(ConstraintKind::kPerfect).margin(1.0), 0.0);
  EXPECT_LT(Constraint(ConstraintKind::kPerfect).margin(0.999), 0.0);
  EXPECT_THROW(Constraint(ConstraintKind::kPerfect, 0.0), std::invalid_argument);
}

TEST(optimizer, golden_section_finds_peak) {
  const auto r = golden_section_maximize([](double x) { return -(x - 0.3) * (x - 0.3); }, 0.0,
                                         1.0, 1e-10);
  EXPECT_NEAR(r.x, 0.3, 1e-8);
  EXPECT_NEAR(r.value, 0.0, 1e-15);
}

TEST(optimizer, werner_full_noise_bell) {
  const Optimum o = werner_optimum(1.0, ConstraintKind::kBellViolation);
  ASSERT_TRUE(o.feasible);
  EXPECT_NEAR(o.p_max, 0.32, 0.01);
  EXPECT_NEAR(o.p_max, kWernerBellMin, 1e-8);
  EXPECT_GT(o.achieved_metric, 2.0);
  EXPECT_GE(o.margin, 0.0);
}

TEST(optimizer, werner_full_noise_fidelity) {
  const Optimum o = werner_optimum(1.0, ConstraintKind::kFidelityThreshold);
  ASSERT_TRUE(o.feasible);
  EXPECT_NEAR(o.p_max, 0.37, 0.01);
  EXPECT_NEAR(o.p_max, 0.375, 1e-8);
  EXPECT_GT(o.achieved_metric, 2.0 / 3.0);
}

TEST(optimizer, werner_noiseless_perfect) {
  const Optimum o = werner_optimum(0.0, ConstraintKind::kPerfect);
  ASSERT_TRUE(o.feasible);
  EXPECT_NEAR(o.theta_opt, kPi / 2, 1e-9);
  EXPECT_NEAR(o.p_max, 0.5, 1e-12);
  EXPECT_NEAR(o.achieved_metric, 1.0, 1e-12);
}

TEST(optimizer, thermal_perfect_curve) {
  for (int k = 1; k <= 30; ++k) {
    const double t = 0.1 * k;
    const Optimum o = maximize_success(family_input(Family::kThermal, t), Statistics::kBoson,
                                       Constraint(ConstraintKind::kPerfect));
    ASSERT_TRUE(o.feasible) << t;
    EXPECT_NEAR(o.theta_opt, kPi / 2, 1e-9);
    EXPECT_NEAR(o.p_max, 1.0 / (2.0 + 2.0 * std::cosh(1.0 / t)), 1e-12) << t;
  }
}

TEST(optimizer, infinite_temperature_matches_full_noise) {
  const DiagonalInput hot = thermal_input(ThermalSpec::equal(0.0));
  for (ConstraintKind kind : {ConstraintKind::kBellViolation, ConstraintKind::kFidelityThreshold}) {
    const Optimum a = maximize_success(hot, Statistics::kBoson, Constraint(kind));
    const Optimum b = werner_optimum(1.0, kind);
    EXPECT_NEAR(a.p_max, b.p_max, 1e-9);
  }
  EXPECT_EQ(family_input(Family::kThermal, std::numeric_limits<double>::infinity()), hot);
}

TEST(optimizer, constraint_ordering) {
  // A perfect singlet also satisfies the Bell and fidelity constraints.
  for (double p : {0.0, 0.2, 0.5, 0.8, 1.0}) {
    const double bell = werner_optimum(p, ConstraintKind::kBellViolation).p_max;
    const double fid = werner_optimum(p, ConstraintKind::kFidelityThreshold).p_max;
    const double perfect = werner_optimum(p, ConstraintKind::kPerfect).p_max;
    EXPECT_GE(fid + 1e-12, perfect) << p;
    EXPECT_GE(bell + 1e-12, perfect) << p;
    EXPECT_LE(perfect, 0.5 + 1e-12);
  }
}

TEST(optimizer, werner_bell_nonincreasing_in_noise) {
  std::vector<double> grid;
  for (int k = 0; k <= 100; ++k) grid.push_back(0.01 * k);
  const auto sweep = sweep_optimum(Family::kWerner, grid, Constraint(ConstraintKind::kBellViolation));
  ASSERT_EQ(sweep.size(), grid.size());
  for (std::size_t k = 1; k < sweep.size(); ++k) {
    EXPECT_TRUE(sweep[k].optimum.feasible);
    EXPECT_LE(sweep[k].optimum.p_max, sweep[k - 1].optimum.p_max + 1e-9) << grid[k];
  }
}

TEST(optimizer, werner_optimum_is_perfect_at_half_pi) {
  // Perfect distillation always lands on theta = pi/2 with P = (2 - p)/4.
  for (double p : {0.1, 0.4, 0.9}) {
    const Optimum o = werner_optimum(p, ConstraintKind::kPerfect);
    EXPECT_NEAR(o.theta_opt, kPi / 2, 1e-9);
    EXPECT_NEAR(o.p_max, analytic::werner_success(p, kPi / 2), 1e-12);
  }
}

TEST(optimizer, infeasible_reports_diagnostics) {
  // Zero temperature: both qubits sit in the ground state, no singlet weight.
  const Optimum o = maximize_success(family_input(Family::kThermal, 0.0), Statistics::kBoson,
                                     Constraint(ConstraintKind::kPerfect));
  EXPECT_FALSE(o.feasible);
  EXPECT_LT(o.margin, 0.0);
}

TEST(optimizer, optimum_respects_constraint) {
  std::mt19937_64 rng(60);
  for (int k = 0; k < 20; ++k) {
    const DiagonalInput input = testutil::random_input(rng);
    for (ConstraintKind kind : {ConstraintKind::kBellViolation, ConstraintKind::kFidelityThreshold,
                                ConstraintKind::kPerfect}) {
      const Optimum o = maximize_success(input, Statistics::kBoson, Constraint(kind),
                                         {.grid_points = 2001});
      if (!o.feasible) continue;
      const ThetaSample s = evaluate_theta(input, Statistics::kBoson, kind, o.theta_opt);
      EXPECT_GE(Constraint(kind).margin(s.metric), 0.0);
      EXPECT_NEAR(s.p_success, o.p_max, 1e-15);
      EXPECT_GE(o.theta_opt, 0.0);
      EXPECT_LE(o.theta_opt, kPi / 2);
    }
  }
}

TEST(optimizer, pipeline_evaluator_agrees) {
  std::mt19937_64 rng(61);
  for (int k = 0; k < 5; ++k) {
    const DiagonalInput input = testutil::random_input(rng);
    for (ConstraintKind kind : {ConstraintKind::kBellViolation, ConstraintKind::kFidelityThreshold}) {
      const Optimum a = maximize_success(input, Statistics::kBoson, Constraint(kind),
                                         {.grid_points = 501});
      const Optimum b = maximize_success(input, Statistics::kBoson, Constraint(kind),
                                         {.grid_points = 501, .evaluator = Evaluator::kPipeline});
      EXPECT_EQ(a.feasible, b.feasible);
      if (a.feasible) EXPECT_NEAR(a.p_max, b.p_max, 1e-8);
    }
  }
}

TEST(optimizer, empty_sweep_throws) {
  EXPECT_THROW(sweep_optimum(Family::kWerner, {}, Constraint(ConstraintKind::kPerfect)),
               std::invalid_argument);
}
