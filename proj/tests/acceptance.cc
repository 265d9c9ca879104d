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


// Acceptance gate. Prints one PASS/FAIL line per criterion and exits nonzero
// if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "idistill/analytic.h"
#include "idistill/metrics.h"
#include "idistill/optimizer.h"
#include "idistill/protocol.h"

using namespace idistill;

namespace {

constexpr double kPi = std::numbers::pi;

struct Check {
  bool ok = true;
  std::string detail;
};

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

double theta_grid(int j) { return j * kPi / 100; }  // j = 0..50 covers [0, pi/2]

DiagonalInput random_input(std::mt19937_64& rng) {
  std::exponential_distribution<double> e(1.0);
  double w[4], sum = 0.0;
  for (double& x : w) sum += (x = e(rng));
  const double a = w[0] / sum, b = w[1] / sum, c = w[2] / sum;
  return DiagonalInput(a, b, c, std::max(0.0, 1.0 - a - b - c));
}

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

Check ac1() {
  std::mt19937_64 rng(101);
  double dev = 0.0;
  for (int k = 0; k < 200;) {
    const DiagonalInput in = random_input(rng);
    if (in.ud() + in.du() <= 0.01) continue;
    ++k;
    const auto o = distill(in, DeformationParams(kPi / 2), Statistics::kBoson);
    if (o.failed()) return {false, "unexpected failed outcome"};
    dev = std::max({dev, std::abs(singlet_fidelity(*o.rho_fin) - 1.0),
                    std::abs(o.p_success - (in.ud() + in.du()) / 2)});
  }
  return {dev < 1e-10, "max deviation " + sci(dev)};
}

Check ac2() {
  double dev = 0.0;
  for (int i = 0; i <= 20; ++i) {
    const double beta = 0.25 * i;
    const DiagonalInput in = thermal_input(ThermalSpec::equal(beta));
    for (int j = 0; j <= 50; ++j) {
      const auto o = distill(in, DeformationParams(theta_grid(j)), Statistics::kBoson);
      const auto cf = analytic::thermal(beta, theta_grid(j));
      dev = std::max({dev, std::abs(cf.concurrence - concurrence(*o.rho_fin)),
                      std::abs(cf.p_success - o.p_success),
                      std::abs(cf.fidelity - singlet_fidelity(*o.rho_fin))});
    }
  }
  return {dev < 1e-10, "max deviation " + sci(dev)};
}

Check ac3() {
  double worst = 0.0;
  for (int i = 0; i <= 20; ++i) {
    const DiagonalInput in = thermal_input(ThermalSpec::equal(0.25 * i));
    for (int j = 0; j <= 50; ++j) {
      const auto o = distill(in, DeformationParams(theta_grid(j)), Statistics::kFermion);
      worst = std::max(worst, concurrence(*o.rho_fin));
    }
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "max concurrence %.3e", worst);
  return {worst < 1e-12, buf};
}

Check ac4() {
  double dev = 0.0;
  for (int i = 0; i <= 20; ++i) {
    const double p = 0.05 * i;
    const DiagonalInput in = werner_input({p});
    for (int j = 0; j <= 50; ++j) {
      const double theta = theta_grid(j);
      const auto o = distill(in, DeformationParams(theta), Statistics::kBoson);
      const double formula = (6 - p + (p + 2) * std::cos(2 * theta)) / 8;
      dev = std::max({dev, std::abs(formula - o.p_success),
                      std::abs(analytic::werner_success(p, theta) - o.p_success),
                      std::abs(analytic::werner_fidelity(p, theta) - singlet_fidelity(*o.rho_fin))});
    }
  }
  return {dev < 1e-10, "max deviation " + sci(dev)};
}

Check ac5() {
  const Constraint bell(ConstraintKind::kBellViolation);
  const Constraint fid(ConstraintKind::kFidelityThreshold);
  const auto w_bell = maximize_success(werner_input({1.0}), Statistics::kBoson, bell);
  const auto w_fid = maximize_success(werner_input({1.0}), Statistics::kBoson, fid);
  const auto t_bell = maximize_success(thermal_input(ThermalSpec::equal(0)), Statistics::kBoson, bell);
  const auto t_fid = maximize_success(thermal_input(ThermalSpec::equal(0)), Statistics::kBoson, fid);
  const bool ok = w_bell.feasible && w_fid.feasible && std::abs(w_bell.p_max - 0.32) <= 0.01 &&
                  std::abs(w_fid.p_max - 0.37) <= 0.01 &&
                  std::abs(t_bell.p_max - w_bell.p_max) < 1e-9 &&
                  std::abs(t_fid.p_max - w_fid.p_max) < 1e-9;
  char buf[160];
  std::snprintf(buf, sizeof buf, "werner bell %.6f fidelity %.6f; thermal beta=0 bell %.6f fidelity %.6f",
                w_bell.p_max, w_fid.p_max, t_bell.p_max, t_fid.p_max);
  return {ok, buf};
}

Check ac6() {
  std::mt19937_64 rng(606);
  double worst = 0.0;
  for (int k = 0; k < 1000; ++k) {
    const Statistics s = k % 2 ? Statistics::kFermion : Statistics::kBoson;
    const DiagonalInput in = random_input(rng);
    const DeformationParams params(uniform(rng, 0, kPi), uniform(rng, 0, 2 * kPi));
    worst = std::max(worst, oracle_compare(in, params, s));
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "max deviation %.3e over 1000 triples", worst);
  return {worst < 1e-10, buf};
}

Check ac7() {
  std::mt19937_64 rng(707);
  double worst = 0.0;
  for (int k = 0; k < 100; ++k) {
    const Statistics s = k % 2 ? Statistics::kFermion : Statistics::kBoson;
    const DiagonalInput in = random_input(rng);
    const double theta = uniform(rng, 0, kPi);
    const auto ref = distill(in, DeformationParams(theta, 0.0), s);
    for (int j = 1; j < 8; ++j) {
      const auto o = distill(in, DeformationParams(theta, j * kPi / 4), s);
      if (o.failed() != ref.failed()) return {false, "failure flag depends on phi"};
      worst = std::max(worst, std::abs(o.p_success - ref.p_success));
      if (!o.failed()) {
        worst = std::max(worst,
                         (o.rho_fin->matrix() - ref.rho_fin->matrix()).cwiseAbs().maxCoeff());
      }
    }
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "max deviation %.3e", worst);
  return {worst < 1e-12, buf};
}

Check ac8() {
  const double tsirelson = 2 * std::sqrt(2.0) + 1e-12;
  int points = 0;
  std::string bad;
  auto visit = [&](const DiagonalInput& in, double theta, Statistics s) {
    const auto o = distill(in, DeformationParams(theta), s);
    ++points;
    if (o.p_success < 0 || o.p_success > 1) bad = "p_success out of range";
    if (o.failed()) return;
    if (bell_max(*o.rho_fin) > tsirelson) bad = "bell_max above 2 sqrt 2";
  };
  for (Statistics s : {Statistics::kBoson, Statistics::kFermion}) {
    for (int j = 0; j <= 100; ++j) {
      for (int i = 0; i <= 20; ++i) {
        visit(thermal_input(ThermalSpec::equal(0.25 * i)), theta_grid(j), s);
        visit(werner_input({0.05 * i}), theta_grid(j), s);
      }
      for (double tl = 0; tl <= 3.0; tl += 0.25)
        for (double tr = 0; tr <= 3.0; tr += 0.25)
          visit(thermal_input(ThermalSpec::from_temperatures(tl, tr)), theta_grid(j), s);
    }
  }
  const Constraint perfect(ConstraintKind::kPerfect);
  double worst_perfect = 0.0;
  std::vector<double> grid;
  for (int k = 0; k <= 100; ++k) grid.push_back(0.01 * k);
  for (const auto& pt : sweep_optimum(Family::kWerner, grid, perfect))
    if (pt.optimum.feasible) worst_perfect = std::max(worst_perfect, pt.optimum.p_max);
  std::vector<double> temps;
  for (int k = 0; k <= 150; ++k) temps.push_back(0.02 * k);
  for (const auto& pt : sweep_optimum(Family::kThermal, temps, perfect))
    if (pt.optimum.feasible) worst_perfect = std::max(worst_perfect, pt.optimum.p_max);
  std::mt19937_64 rng(808);
  for (int k = 0; k < 100; ++k) {
    const auto o = maximize_success(random_input(rng), Statistics::kBoson, perfect,
                                    {.grid_points = 1001});
    if (o.feasible) worst_perfect = std::max(worst_perfect, o.p_max);
  }
  if (worst_perfect > 0.5 + 1e-12) bad = "perfect distillation above 1/2";
  char buf[128];
  std::snprintf(buf, sizeof buf, "%d sweep points, max perfect p_success %.12f%s%s", points,
                worst_perfect, bad.empty() ? "" : "; ", bad.c_str());
  return {bad.empty(), buf};
}

double pipeline_concurrence(const DiagonalInput& in, double theta) {
  const auto o = distill(in, DeformationParams(theta), Statistics::kBoson);
  return o.failed() ? 0.0 : concurrence(*o.rho_fin);
}

Check ac9() {
  const double thetas[] = {kPi / 2, 0.4 * kPi, kPi / 3, kPi / 4};
  std::string bad;
  for (double theta : thetas) {
    double prev = -1.0;
    for (int k = 0; k <= 150; ++k) {
      const double c = pipeline_concurrence(
          thermal_input(ThermalSpec::from_temperatures(0.02 * k, 0.02 * k)), theta);
      if (c < prev - 1e-12) bad = "thermal concurrence decreases with T";
      prev = c;
    }
    prev = 2.0;
    for (int k = 0; k <= 100; ++k) {
      const double c = pipeline_concurrence(werner_input({0.01 * k}), theta);
      if (c > prev + 1e-12) bad = "Werner concurrence increases with p";
      prev = c;
    }
  }
  std::mt19937_64 rng(909);
  for (int k = 0; k < 50; ++k) {
    const DiagonalInput in = random_input(rng);
    for (Statistics s : {Statistics::kBoson, Statistics::kFermion}) {
      double prev = 2.0;
      for (int j = 0; j <= 50; ++j) {
        const double p = distill(in, DeformationParams(theta_grid(j)), s).p_success;
        if (p > prev + 1e-12) bad = "success increases with theta";
        prev = p;
      }
    }
  }
  const double asym = pipeline_concurrence(
      thermal_input(ThermalSpec::from_temperatures(2.5, 0.5)), 0.4 * kPi);
  const double sym = pipeline_concurrence(
      thermal_input(ThermalSpec::from_temperatures(1.5, 1.5)), 0.4 * kPi);
  if (!(asym > sym)) bad = "contour asymmetry check failed";
  char buf[160];
  std::snprintf(buf, sizeof buf, "C(2.5,0.5)=%.6f > C(1.5,1.5)=%.6f%s%s", asym, sym,
                bad.empty() ? "" : "; ", bad.c_str());
  return {bad.empty(), buf};
}

struct Criterion {
  const char* name;
  const char* title;
  double time_limit_s;  // <= 0: no individual limit
  std::function<Check()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"AC1", "singlet anchor", 1.0, ac1},
      {"AC2", "thermal closed forms vs pipeline", 10.0, ac2},
      {"AC3", "fermion thermal concurrence vanishes", 0, ac3},
      {"AC4", "Werner closed forms vs pipeline", 0, ac4},
      {"AC5", "optimizer endpoints", 0, ac5},
      {"AC6", "closed-form coefficients vs Fock oracle", 0, ac6},
      {"AC7", "phase independence", 0, ac7},
      {"AC8", "structural bounds", 0, ac8},
      {"AC9", "figure monotonicity", 0, ac9},
  };
  using Clock = std::chrono::steady_clock;
  const auto suite_start = Clock::now();
  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = Clock::now();
    Check result;
    try {
      result = c.run();
    } catch (const std::exception& e) {
      result = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (c.time_limit_s > 0 && secs >= c.time_limit_s) {
      result.ok = false;
      result.detail += " (runtime limit exceeded)";
    }
    failures += !result.ok;
    std::printf("[%s] %s %s: %s (%.2f s)\n", result.ok ? "PASS" : "FAIL", c.name, c.title,
                result.detail.c_str(), secs);
  }
  const double total = std::chrono::duration<double>(Clock::now() - suite_start).count();
  const bool fast = total < 60.0;
  std::printf("[%s] suite runtime %.2f s (limit 60 s)\n", fast ? "PASS" : "FAIL", total);
  failures += !fast;
  std::printf("%d failure(s)\n", failures);
  return failures == 0 ? 0 : 1;
}
