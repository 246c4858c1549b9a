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

#include "qwire/errors.hpp"
#include "qwire/runner.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <string>

namespace {

  struct Overrides {
    std::optional<std::string> config;
    std::optional<std::string> out;
    std::optional<std::string> mode;
    std::optional<std::string> matching;
    std::optional<double> background_eps;
    std::optional<double> gamma;
    std::optional<double> temperature;
    std::optional<double> fermi_offset;
  };

  int exit_code(const std::string &kind) {
    if (kind == "config" || kind == "cli") return 2;
    if (kind == "io") return 4;
    return 3;
  }

  int report(const std::string &kind, const std::string &message) {
    nlohmann::ordered_json rec{{"status", "error"}, {"kind", kind}, {"message", message}};
    std::cerr << rec.dump() << '\n';
    return exit_code(kind);
  }

  qwire::RunConfig build(qwire::Command cmd, const Overrides &o) {
    qwire::RunConfig cfg = o.config ? qwire::load_config(*o.config) : qwire::RunConfig{};
    cfg.command = cmd;
    if (o.out) cfg.output_dir = *o.out;
    if (o.mode) {
      if (*o.mode == "detuning") cfg.model.mode = qwire::LineshapeMode::detuning;
      else if (*o.mode == "amplitude") cfg.model.mode = qwire::LineshapeMode::amplitude;
      else throw qwire::ConfigError("--mode: expected detuning or amplitude, got '" + *o.mode + "'");
    }
    if (o.matching) {
      if (*o.matching == "mass_weighted") cfg.model.matching = qwire::Matching::mass_weighted;
      else if (*o.matching == "plain") cfg.model.matching = qwire::Matching::plain;
      else throw qwire::ConfigError("--matching: expected mass_weighted or plain, got '" + *o.matching + "'");
    }
    if (o.background_eps) cfg.model.background_eps = *o.background_eps;
    if (o.gamma) cfg.model.gamma = *o.gamma;
    if (o.temperature) {
      cfg.model.thermal.temperature = *o.temperature;
      if (cmd != qwire::Command::sweep) cfg.temperatures = {*o.temperature};
    }
    if (o.fermi_offset) cfg.model.thermal.fermi_offset = *o.fermi_offset;
    qwire::validate(cfg);
    return cfg;
  }

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Subband, donor and intersubband optics for GaN/AlN core/shell wires and dots"};
  app.require_subcommand(1);
  app.set_version_flag("--version", qwire::library_version());

  Overrides o;
  const std::pair<const char *, const char *> commands[] = {
     {"levels", "subband and dot levels vs radius"},
     {"binding", "donor energies and binding energies vs radius"},
     {"absorb", "wire and dot absorption spectra per radius"},
     {"dielectric", "complex dielectric function per radius"},
     {"compare", "joined wire/dot line parameters vs radius"},
     {"sweep", "compare table over radii x temperatures"}};
  for (const auto &[name, help] : commands) {
    auto *sub = app.add_subcommand(name, help);
    sub->add_option("--config", o.config, "INI config file")->check(CLI::ExistingFile);
    sub->add_option("--out", o.out, "output directory");
    sub->add_option("--mode", o.mode, "wire lineshape: detuning | amplitude");
    sub->add_option("--matching", o.matching, "interface condition: mass_weighted | plain");
    sub->add_option("--background-eps", o.background_eps, "background dielectric constant");
    sub->add_option("--gamma-mev", o.gamma, "damping hbar*gamma in meV");
    sub->add_option("--temperature-k", o.temperature, "temperature in K");
    sub->add_option("--fermi-offset-mev", o.fermi_offset, "Fermi level above the ground subband, meV");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    return report("cli", e.what());
  }

  try {
    const auto cmd    = qwire::parse_command(app.get_subcommands().front()->get_name());
    const auto cfg    = build(cmd, o);
    const auto result = qwire::run(cfg);
    for (const auto &w : result.warnings) std::cerr << "warning: " << w << '\n';
    for (const auto &f : result.files) std::cout << f.string() << '\n';
    return 0;
  } catch (const qwire::Error &e) {
    return report(e.kind(), e.what());
  } catch (const std::exception &e) {
    return report("internal", e.what());
  }
}
