// Copyright (c) 2026 The qwire Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0.txt
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "qwire/materials.hpp"
#include "qwire/model.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace qwire {

  enum class Command { levels, binding, absorb, dielectric, compare, sweep };

  Command parse_command(const std::string &name);
  std::string to_string(Command c);

  struct GridSpec {
    double min  = 0.0;    ///< meV
    double max  = 1200.0; ///< meV
    double step = 1.0;    ///< meV

    [[nodiscard]] std::vector<double> points() const;
  };

  struct RunConfig {
    int schema      = 1;
    Command command = Command::levels;
    Geometry geometry{}; ///< core_radius is overridden per entry of `radii`
    std::vector<double> radii{3.0, 4.0};
    std::vector<double> temperatures{300.0}; ///< sweep only
    MaterialRegistry materials{};
    int max_n = 2;
    ModelOptions model{};
    GridSpec grid{};
    std::filesystem::path output_dir = "out";
  };

  inline constexpr int config_schema_version = 1;

  /// INI-style text: top-level `schema = 1`, sections [geometry], [material:NAME],
  /// [solver], [thermal], [response], [spectrum], [sweep]. Throws ConfigError
  /// naming the line or section.key at fault.
  RunConfig parse_config(const std::string &text);
  RunConfig load_config(const std::filesystem::path &path);

  /// Checks the RunConfig invariants (materials resolvable, grids monotone, ...).
  void validate(const RunConfig &cfg);

  /// Canonical text of every setting that influences output bytes.
  std::string canonical_form(const RunConfig &cfg);
  /// SHA-256 of canonical_form, hex.
  std::string config_hash(const RunConfig &cfg);

  std::string library_version();

  struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
  };

  /// 12 significant digits, fixed notation for 1e-4 <= |v| < 1e12,
  /// scientific otherwise; "nan"/"inf" for non-finite values.
  std::string format_number(double v);

  enum class EmitStatus { ok, empty };

  /// Writes `table` as CSV (LF endings, header row) to `path`. Throws IoError
  /// naming the path. An empty table produces a header-only file.
  EmitStatus emit_csv(const Table &table, const std::filesystem::path &path);

  /// Writes `<path>.meta.json` for a CSV produced under `cfg`.
  void emit_metadata(const RunConfig &cfg, const std::filesystem::path &csv_path, const std::string &extra_json = "{}");

  struct RunResult {
    std::vector<std::filesystem::path> files;
    std::vector<std::string> warnings;
  };

  /// Executes cfg.command; outputs are deterministic functions of cfg.
  /// Independent radii run on QWIRE_WORKERS threads (default: hardware
  /// concurrency) and are written in config order.
  RunResult run(const RunConfig &cfg);

  /// The tables behind each command, without touching the filesystem.
  Table levels_table(const RunConfig &cfg);
  Table binding_table(const RunConfig &cfg);
  Table absorb_table(const RunConfig &cfg, double radius);
  Table dielectric_table(const RunConfig &cfg, double radius);
  Table compare_table(const RunConfig &cfg);
  Table sweep_table(const RunConfig &cfg);

} // namespace qwire
