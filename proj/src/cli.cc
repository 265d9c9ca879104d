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

#include "idistill/cli.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "json.hpp"
#include "idistill/metrics.h"
#include "idistill/protocol.h"

namespace idistill::cli {

namespace {

constexpr std::string_view kDefaultThetaPresets =
    "0.5,0.4,0.3333333333333333,0.25";
constexpr std::size_t kMaxGridPoints = 1'000'000;

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

double parse_number(std::string_view token, bool allow_inf) {
  token = trim(token);
  const std::string text(token);
  double value = 0.0;
  std::size_t used = 0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    throw ConfigError(fmt::format("not a number: '{}'", text));
  }
  if (used != text.size()) {
    throw ConfigError(fmt::format("not a number: '{}'", text));
  }
  if (std::isnan(value) || (std::isinf(value) && !allow_inf)) {
    throw ConfigError(fmt::format("value must be finite: '{}'", text));
  }
  return value;
}

std::string format_number(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return fmt::format("{:.15g}", v);
}

std::string statistics_name(Statistics s) { return std::string(to_string(s)); }

std::vector<Cell> outcome_cells(const DistillationOutcome& out) {
  if (out.failed()) return {Cell{}, out.p_success, Cell{}, Cell{}};
  const MetricBundle m = evaluate_metrics(*out.rho_fin);
  return {m.concurrence, out.p_success, m.singlet_fidelity, m.bell_max};
}

void check_theta_over_pi(const std::vector<double>& thetas) {
  for (double t : thetas) {
    if (t < 0.0 || t > 1.0) {
      throw ConfigError(
          fmt::format("theta must lie in [0, 1] (units of pi), got {}", t));
    }
  }
}

std::vector<double> thetas_or(const RunConfig& c, std::string_view fallback) {
  auto thetas = parse_values(c.thetas.empty() ? fallback : c.thetas);
  check_theta_over_pi(thetas);
  return thetas;
}

std::vector<double> temperatures(std::string_view spec) {
  auto ts = parse_values(spec, /*allow_inf=*/true);
  for (double t : ts) {
    if (t < 0.0) throw ConfigError(fmt::format("temperature must be >= 0, got {}", t));
  }
  return ts;
}

std::vector<double> noise_weights(std::string_view spec) {
  auto ps = parse_values(spec);
  for (double p : ps) {
    if (p < 0.0 || p > 1.0) {
      throw ConfigError(fmt::format("Werner p must lie in [0, 1], got {}", p));
    }
  }
  return ps;
}

const std::vector<std::string> kMetricColumns = {"concurrence", "p_success",
                                                 "fidelity", "bell_max"};

Table base_table(std::string_view command, const RunConfig& c) {
  Table t;
  t.meta.push_back(fmt::format("idistill {}", kToolVersion));
  t.meta.push_back(fmt::format("command: {}", command));
  t.meta.push_back(fmt::format("statistics: {}", statistics_name(c.statistics)));
  return t;
}

Table thermal_sweep(const RunConfig& c) {
  const auto ts = temperatures(c.temperatures);
  const auto thetas = thetas_or(c, kDefaultThetaPresets);
  Table t = base_table("thermal-sweep", c);
  t.meta.push_back(fmt::format("T_over_omega: {}", c.temperatures));
  t.meta.push_back(fmt::format("theta_over_pi: {}",
                               c.thetas.empty() ? kDefaultThetaPresets : c.thetas));
  t.meta.push_back(fmt::format("T=0 evaluated at beta*omega={}", kZeroTemperatureBeta));
  t.columns = {"T_over_omega", "theta_over_pi"};
  t.columns.insert(t.columns.end(), kMetricColumns.begin(), kMetricColumns.end());
  for (double theta : thetas) {
    const DeformationParams params(theta * std::numbers::pi);
    for (double temp : ts) {
      const auto input = thermal_input(ThermalSpec::from_temperatures(temp, temp));
      std::vector<Cell> row{temp, theta};
      auto cells = outcome_cells(distill(input, params, c.statistics));
      row.insert(row.end(), cells.begin(), cells.end());
      t.rows.push_back(std::move(row));
    }
  }
  return t;
}

Table thermal_contour(const RunConfig& c) {
  const auto tls = temperatures(c.t_left);
  const auto trs = temperatures(c.t_right);
  const auto thetas = thetas_or(c, "0.4");
  Table t = base_table("thermal-contour", c);
  t.meta.push_back(fmt::format("T_L_over_omega: {}", c.t_left));
  t.meta.push_back(fmt::format("T_R_over_omega: {}", c.t_right));
  t.meta.push_back(fmt::format("theta_over_pi: {}", c.thetas.empty() ? "0.4" : c.thetas));
  t.meta.push_back(fmt::format("T=0 evaluated at beta*omega={}", kZeroTemperatureBeta));
  t.columns = {"T_L_over_omega", "T_R_over_omega", "theta_over_pi"};
  t.columns.insert(t.columns.end(), kMetricColumns.begin(), kMetricColumns.end());
  for (double theta : thetas) {
    const DeformationParams params(theta * std::numbers::pi);
    for (double tl : tls) {
      for (double tr : trs) {
        const auto input = thermal_input(ThermalSpec::from_temperatures(tl, tr));
        std::vector<Cell> row{tl, tr, theta};
        auto cells = outcome_cells(distill(input, params, c.statistics));
        row.insert(row.end(), cells.begin(), cells.end());
        t.rows.push_back(std::move(row));
      }
    }
  }
  return t;
}

Table werner_sweep(const RunConfig& c) {
  const auto ps = noise_weights(c.p_values);
  const auto thetas = thetas_or(c, kDefaultThetaPresets);
  Table t = base_table("werner-sweep", c);
  t.meta.push_back(fmt::format("p: {}", c.p_values));
  t.meta.push_back(fmt::format("theta_over_pi: {}",
                               c.thetas.empty() ? kDefaultThetaPresets : c.thetas));
  t.columns = {"p", "theta_over_pi"};
  t.columns.insert(t.columns.end(), kMetricColumns.begin(), kMetricColumns.end());
  for (double theta : thetas) {
    const DeformationParams params(theta * std::numbers::pi);
    for (double p : ps) {
      std::vector<Cell> row{p, theta};
      auto cells = outcome_cells(distill(werner_input({p}), params, c.statistics));
      row.insert(row.end(), cells.begin(), cells.end());
      t.rows.push_back(std::move(row));
    }
  }
  return t;
}

Table optimize(const RunConfig& c) {
  const bool thermal = c.family == Family::kThermal;
  const std::string& spec = thermal ? c.temperatures : c.p_values;
  const auto grid = thermal ? temperatures(spec) : noise_weights(spec);
  std::vector<ConstraintKind> kinds;
  if (c.constraint) {
    kinds = {*c.constraint};
  } else {
    kinds = {ConstraintKind::kPerfect, ConstraintKind::kBellViolation,
             ConstraintKind::kFidelityThreshold};
  }
  Table t = base_table("optimize", c);
  t.meta.push_back(fmt::format("family: {}", to_string(c.family)));
  t.meta.push_back(fmt::format("{}: {}", thermal ? "T_over_omega" : "p", spec));
  t.meta.push_back(fmt::format("constraint epsilon: {}", Constraint::kDefaultEpsilon));
  t.meta.push_back("theta range: [0, pi/2], 10001-point grid + golden-section refinement");
  t.columns = {thermal ? "T_over_omega" : "p", "constraint", "theta_opt",
               "theta_opt_over_pi", "p_max", "feasible", "achieved_metric"};
  for (ConstraintKind kind : kinds) {
    const auto sweep = sweep_optimum(c.family, grid, Constraint(kind), c.statistics);
    for (const SweepPoint& sp : sweep) {
      const Optimum& o = sp.optimum;
      t.rows.push_back({sp.parameter, std::string(to_string(kind)), o.theta_opt,
                        o.theta_opt / std::numbers::pi, o.p_max,
                        o.feasible ? 1.0 : 0.0, o.achieved_metric});
    }
  }
  return t;
}

Table figure(const RunConfig& c) {
  RunConfig preset = c;
  preset.statistics = Statistics::kBoson;
  preset.thetas.clear();
  Table t;
  const std::string legend_note =
      "theta presets (units of pi): 1/2 and 2/5 exact; 1/3 and 1/4 approximate "
      "legend values";
  if (c.figure == "fig2") {
    preset.temperatures = "0:3:0.02";
    t = thermal_sweep(preset);
    t.meta.push_back(legend_note);
  } else if (c.figure == "fig3") {
    preset.t_left = "0:3:0.05";
    preset.t_right = "0:3:0.05";
    preset.thetas = "0.4";
    t = thermal_contour(preset);
  } else if (c.figure == "fig4") {
    preset.family = Family::kThermal;
    preset.constraint.reset();
    preset.temperatures = "0:3:0.02";
    t = optimize(preset);
  } else if (c.figure == "fig5") {
    preset.p_values = "0:1:0.01";
    t = werner_sweep(preset);
    t.meta.push_back(legend_note);
  } else if (c.figure == "fig6") {
    preset.family = Family::kWerner;
    preset.constraint.reset();
    preset.p_values = "0:1:0.01";
    t = optimize(preset);
  } else {
    throw ConfigError(fmt::format(
        "unknown figure '{}' (expected fig2, fig3, fig4, fig5 or fig6)", c.figure));
  }
  t.meta.insert(t.meta.begin() + 1, fmt::format("figure: {}", c.figure));
  return t;
}

void write_error(std::ostream& err, std::string_view kind, std::string_view message) {
  nlohmann::json line = {{"error", kind}, {"message", message}};
  err << line.dump() << '\n';
}

}  // namespace

std::vector<double> parse_values(std::string_view spec, bool allow_inf) {
  spec = trim(spec);
  if (spec.empty()) throw ConfigError("empty parameter list");
  std::vector<double> values;
  if (spec.find(':') != std::string_view::npos) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
      const std::size_t pos = spec.find(':', start);
      parts.push_back(spec.substr(start, pos - start));
      if (pos == std::string_view::npos) break;
      start = pos + 1;
    }
    if (parts.size() != 3) {
      throw ConfigError(fmt::format("range must be start:stop:step, got '{}'", spec));
    }
    const double lo = parse_number(parts[0], false);
    const double hi = parse_number(parts[1], false);
    const double step = parse_number(parts[2], false);
    if (!(step > 0.0)) {
      throw ConfigError(fmt::format("range step must be > 0, got {}", step));
    }
    if (hi < lo) {
      throw ConfigError(fmt::format("range stop {} is below start {}", hi, lo));
    }
    const double count = std::floor((hi - lo) / step + 1e-9) + 1.0;
    if (count > static_cast<double>(kMaxGridPoints)) {
      throw ConfigError("range has too many points");
    }
    const auto n = static_cast<std::size_t>(count);
    values.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
      // Snap the last point to `stop` when the range lands on it.
      double v = lo + static_cast<double>(k) * step;
      if (k + 1 == n && std::abs(v - hi) <= 1e-9 * std::max(1.0, std::abs(hi))) v = hi;
      values.push_back(v);
    }
    return values;
  }
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = spec.find(',', start);
    values.push_back(parse_number(spec.substr(start, pos - start), allow_inf));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return values;
}

Table build_table(const RunConfig& config) {
  switch (config.command) {
    case Command::kThermalSweep:
      return thermal_sweep(config);
    case Command::kThermalContour:
      return thermal_contour(config);
    case Command::kWernerSweep:
      return werner_sweep(config);
    case Command::kOptimize:
      return optimize(config);
    case Command::kFigure:
      return figure(config);
    case Command::kValidate:
      break;
  }
  throw ConfigError("validate does not produce a table");
}

std::string render_csv(const Table& table) {
  std::ostringstream os;
  for (const auto& line : table.meta) os << "# " << line << '\n';
  for (std::size_t k = 0; k < table.columns.size(); ++k) {
    os << (k ? "," : "") << table.columns[k];
  }
  os << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (k) os << ',';
      if (const double* d = std::get_if<double>(&row[k])) {
        os << format_number(*d);
      } else if (const std::string* s = std::get_if<std::string>(&row[k])) {
        os << *s;
      }
    }
    os << '\n';
  }
  return os.str();
}

std::string render_json(const Table& table) {
  nlohmann::json doc;
  doc["meta"] = table.meta;
  doc["columns"] = table.columns;
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : table.rows) {
    nlohmann::json r = nlohmann::json::array();
    for (const Cell& cell : row) {
      if (const double* d = std::get_if<double>(&cell)) {
        if (std::isfinite(*d)) {
          r.push_back(*d);
        } else {
          r.push_back(format_number(*d));
        }
      } else if (const std::string* s = std::get_if<std::string>(&cell)) {
        r.push_back(*s);
      } else {
        r.push_back(nullptr);
      }
    }
    rows.push_back(std::move(r));
  }
  doc["rows"] = std::move(rows);
  return doc.dump(1) + "\n";
}

std::optional<std::string> check_ranges(const Table& table) {
  const double bell_cap = 2.0 * std::numbers::sqrt2 + 1e-12;
  for (std::size_t k = 0; k < table.columns.size(); ++k) {
    const std::string& name = table.columns[k];
    double lo = 0.0;
    double hi = 0.0;
    if (name == "concurrence" || name == "p_success" || name == "fidelity" ||
        name == "p_max") {
      hi = 1.0;
    } else if (name == "bell_max") {
      hi = bell_cap;
    } else {
      continue;
    }
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
      const double* d = std::get_if<double>(&table.rows[r][k]);
      if (d && !(*d >= lo && *d <= hi)) {
        return fmt::format("{} = {} out of range [{}, {}] in row {}", name,
                           format_number(*d), lo, hi, r);
      }
    }
  }
  return std::nullopt;
}

DiagonalInput random_diagonal_input(std::mt19937_64& rng) {
  std::exponential_distribution<double> exp1(1.0);
  std::array<double, 4> w{};
  double sum = 0.0;
  for (double& x : w) {
    x = exp1(rng);
    sum += x;
  }
  for (double& x : w) x /= sum;
  w[3] = std::max(0.0, 1.0 - w[0] - w[1] - w[2]);
  return DiagonalInput(w[0], w[1], w[2], w[3]);
}

ValidationReport run_validation(std::uint64_t seed, int samples) {
  if (samples <= 0) throw ConfigError("samples must be positive");
  ValidationReport report;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> theta_dist(0.0, std::numbers::pi);
  std::uniform_real_distribution<double> phi_dist(0.0, 2.0 * std::numbers::pi);
  auto record = [&report](bool ok, std::string_view name, std::string detail) {
    report.passed = report.passed && ok;
    report.lines.push_back(fmt::format("{} {} {}", ok ? "PASS" : "FAIL", name, detail));
  };

  double oracle_dev = 0.0;
  for (int k = 0; k < samples; ++k) {
    const Statistics stat = k % 2 ? Statistics::kFermion : Statistics::kBoson;
    const DiagonalInput input = random_diagonal_input(rng);
    const DeformationParams params(theta_dist(rng), phi_dist(rng));
    oracle_dev = std::max(oracle_dev, oracle_compare(input, params, stat));
  }
  record(oracle_dev < 1e-10, "oracle_compare",
         fmt::format("samples={} max_deviation={:.3e} tol=1e-10", samples, oracle_dev));

  double phi_dev = 0.0;
  for (int k = 0; k < 100; ++k) {
    const Statistics stat = k % 2 ? Statistics::kFermion : Statistics::kBoson;
    const DiagonalInput input = random_diagonal_input(rng);
    const double theta = theta_dist(rng);
    const DistillationOutcome ref = distill(input, DeformationParams(theta), stat);
    for (int j = 1; j < 8; ++j) {
      const DistillationOutcome o = distill(
          input, DeformationParams(theta, j * std::numbers::pi / 4.0), stat);
      phi_dev = std::max(phi_dev, std::abs(o.p_success - ref.p_success));
      if (!o.failed() && !ref.failed()) {
        phi_dev = std::max(phi_dev, (o.rho_fin->matrix() - ref.rho_fin->matrix())
                                        .cwiseAbs()
                                        .maxCoeff());
      }
    }
  }
  record(phi_dev < 1e-12, "phi_independence",
         fmt::format("configs=100 max_deviation={:.3e} tol=1e-12", phi_dev));

  double singlet_dev = 0.0;
  for (int k = 0; k < 200;) {
    const DiagonalInput input = random_diagonal_input(rng);
    if (input.ud() + input.du() <= 0.01) continue;
    ++k;
    const DistillationOutcome o = distill(
        input, DeformationParams(std::numbers::pi / 2.0), Statistics::kBoson);
    singlet_dev = std::max({singlet_dev, std::abs(singlet_fidelity(*o.rho_fin) - 1.0),
                            std::abs(o.p_success - (input.ud() + input.du()) / 2.0)});
  }
  record(singlet_dev < 1e-10, "boson_singlet_anchor",
         fmt::format("inputs=200 max_deviation={:.3e} tol=1e-10", singlet_dev));

  double fermion_c = 0.0;
  std::uniform_real_distribution<double> beta_dist(0.0, 5.0);
  for (int k = 0; k < 200; ++k) {
    // Single shared bath; unequal temperatures can leave fermions entangled.
    const double beta = beta_dist(rng);
    const DiagonalInput input = thermal_input(ThermalSpec{beta, beta});
    const DistillationOutcome o =
        distill(input, DeformationParams(theta_dist(rng)), Statistics::kFermion);
    fermion_c = std::max(fermion_c, concurrence(*o.rho_fin));
  }
  record(fermion_c < 1e-12, "fermion_thermal_separable",
         fmt::format("inputs=200 max_concurrence={:.3e} tol=1e-12", fermion_c));
  return report;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  std::string payload;
  bool validation_failed = false;
  try {
    if (config.command == Command::kValidate) {
      const ValidationReport report = run_validation(config.seed, config.samples);
      std::ostringstream os;
      os << "# idistill " << kToolVersion << " validate seed=" << config.seed << '\n';
      for (const auto& line : report.lines) os << line << '\n';
      os << (report.passed ? "validation passed" : "validation FAILED") << '\n';
      payload = os.str();
      validation_failed = !report.passed;
    } else {
      const Table table = build_table(config);
      if (auto problem = check_ranges(table)) {
        write_error(err, "validation", *problem);
        return kExitValidationFailure;
      }
      payload = config.format == Format::kCsv ? render_csv(table) : render_json(table);
    }
  } catch (const ConfigError& e) {
    write_error(err, "config", e.what());
    return kExitConfigError;
  } catch (const std::invalid_argument& e) {
    write_error(err, "config", e.what());
    return kExitConfigError;
  }

  if (config.output_path.empty()) {
    out << payload;
  } else {
    std::ofstream file(config.output_path, std::ios::binary | std::ios::trunc);
    file << payload;
    file.close();
    if (!file) {
      write_error(err, "io", fmt::format("cannot write '{}'", config.output_path));
      return kExitIoError;
    }
  }
  if (validation_failed) {
    write_error(err, "validation", "validation suite failed");
    return kExitValidationFailure;
  }
  return kExitOk;
}

int main_entry(int argc, const char* const* argv, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"Indistinguishability-assisted entanglement distillation of two "
               "identical qubits: sweeps, optimization, figure data, validation."};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string statistics = "boson";
  std::string format = "csv";
  std::string constraint = "all";
  std::string family;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--statistics", statistics, "boson or fermion")
        ->check(CLI::IsMember({"boson", "fermion"}));
    sub->add_option("-o,--output", cfg.output_path, "output file (default stdout)");
    sub->add_option("--format", format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
  };
  const char* theta_help = "deformation angles in units of pi (list or start:stop:step)";

  CLI::App* thermal_sweep_cmd =
      app.add_subcommand("thermal-sweep", "metrics vs T/omega at equal bath temperatures");
  add_common(thermal_sweep_cmd);
  thermal_sweep_cmd->add_option("--T", cfg.temperatures, "T/omega values");
  thermal_sweep_cmd->add_option("--theta", cfg.thetas, theta_help);

  CLI::App* contour_cmd =
      app.add_subcommand("thermal-contour", "metrics on a (T_L, T_R) grid");
  add_common(contour_cmd);
  contour_cmd->add_option("--TL", cfg.t_left, "T_L/omega values");
  contour_cmd->add_option("--TR", cfg.t_right, "T_R/omega values");
  contour_cmd->add_option("--theta", cfg.thetas, theta_help);

  CLI::App* werner_cmd = app.add_subcommand("werner-sweep", "metrics vs Werner noise p");
  add_common(werner_cmd);
  werner_cmd->add_option("--p", cfg.p_values, "noise weights");
  werner_cmd->add_option("--theta", cfg.thetas, theta_help);

  CLI::App* optimize_cmd =
      app.add_subcommand("optimize", "maximize success probability over theta");
  add_common(optimize_cmd);
  optimize_cmd->add_option("--family", family, "thermal or werner")
      ->required()
      ->check(CLI::IsMember({"thermal", "werner"}));
  optimize_cmd->add_option("--constraint", constraint, "bell, fidelity, perfect or all")
      ->check(CLI::IsMember({"bell", "fidelity", "perfect", "all"}));
  optimize_cmd->add_option("--p", cfg.p_values, "noise weights (werner)");
  optimize_cmd->add_option("--T", cfg.temperatures, "T/omega values (thermal, 'inf' allowed)");

  CLI::App* figure_cmd = app.add_subcommand("figure", "regenerate figure data");
  add_common(figure_cmd);
  figure_cmd->add_option("name", cfg.figure, "fig2, fig3, fig4, fig5 or fig6")->required();

  CLI::App* validate_cmd =
      app.add_subcommand("validate", "oracle and invariant suites");
  validate_cmd->add_option("--seed", cfg.seed, "generator seed");
  validate_cmd->add_option("--samples", cfg.samples, "oracle comparisons");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    write_error(err, "config", e.what());
    return kExitConfigError;
  }

  if (*thermal_sweep_cmd) cfg.command = Command::kThermalSweep;
  if (*contour_cmd) cfg.command = Command::kThermalContour;
  if (*werner_cmd) cfg.command = Command::kWernerSweep;
  if (*optimize_cmd) cfg.command = Command::kOptimize;
  if (*figure_cmd) cfg.command = Command::kFigure;
  if (*validate_cmd) cfg.command = Command::kValidate;

  cfg.statistics = statistics == "boson" ? Statistics::kBoson : Statistics::kFermion;
  cfg.format = format == "json" ? Format::kJson : Format::kCsv;
  cfg.family = family == "thermal" ? Family::kThermal : Family::kWerner;
  if (constraint == "bell") cfg.constraint = ConstraintKind::kBellViolation;
  if (constraint == "fidelity") cfg.constraint = ConstraintKind::kFidelityThreshold;
  if (constraint == "perfect") cfg.constraint = ConstraintKind::kPerfect;
  return run(cfg, out, err);
}

}  // namespace idistill::cli
