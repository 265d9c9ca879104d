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

#ifndef IDISTILL_CLI_H_
#define IDISTILL_CLI_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "idistill/fock.h"
#include "idistill/inputs.h"
#include "idistill/optimizer.h"

namespace idistill::cli {

inline constexpr std::string_view kToolVersion = "0.1.0";

enum ExitCode : int {
  kExitOk = 0,
  kExitConfigError = 1,
  kExitValidationFailure = 2,
  kExitIoError = 3,
};

enum class Command {
  kThermalSweep,
  kThermalContour,
  kWernerSweep,
  kOptimize,
  kFigure,
  kValidate,
};

enum class Format { kCsv, kJson };

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parameter lists are kept as the user wrote them ("start:stop:step" or a
/// comma list) and parsed by run(). Angles are in units of pi.
struct RunConfig {
  Command command = Command::kValidate;
  Statistics statistics = Statistics::kBoson;
  std::string temperatures = "0:3:0.05";
  std::string t_left = "0:3:0.1";
  std::string t_right = "0:3:0.1";
  std::string p_values = "0:1:0.05";
  std::string thetas;  // empty: command default
  std::optional<ConstraintKind> constraint;  // empty: all three
  Family family = Family::kWerner;
  std::string figure;
  std::string output_path;  // empty: stdout
  Format format = Format::kCsv;
  std::uint64_t seed = 7;
  int samples = 1000;
};

/// "a:b:step" (inclusive, step > 0) or "x,y,z". List entries may be "inf"
/// only when `allow_inf`. Throws ConfigError.
std::vector<double> parse_values(std::string_view spec, bool allow_inf = false);

using Cell = std::variant<std::monostate, double, std::string>;

struct Table {
  std::vector<std::string> meta;  // rendered as "# " lines in CSV
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

/// Builds the output table for every command except kValidate.
Table build_table(const RunConfig& config);

std::string render_csv(const Table& table);
std::string render_json(const Table& table);

/// Checks the [0, 1] and [0, 2 sqrt 2] ranges of known columns. Returns an
/// error description, or nothing when the table is in range.
std::optional<std::string> check_ranges(const Table& table);

/// Uniform sample from the simplex of diagonal inputs.
DiagonalInput random_diagonal_input(std::mt19937_64& rng);

struct ValidationReport {
  bool passed = true;
  std::vector<std::string> lines;
};

/// Oracle-vs-closed-form and invariant checks with a seeded generator.
ValidationReport run_validation(std::uint64_t seed, int samples);

/// Runs a parsed config. Writes tables to config.output_path (or `out`),
/// errors as one JSON line to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// argv front end (CLI11).
int main_entry(int argc, const char* const* argv, std::ostream& out,
               std::ostream& err);

}  // namespace idistill::cli

#endif  // IDISTILL_CLI_H_
