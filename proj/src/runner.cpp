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

#include "qwire/runner.hpp"

#include "qwire/donor.hpp"
#include "qwire/errors.hpp"
#include "qwire/qd.hpp"
#include "qwire/subband.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <nlohmann/json.hpp>
#include <openssl/evp.h>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>
#include <thread>

#ifndef QWIRE_VERSION
#define QWIRE_VERSION "0.0.0"
#endif

namespace qwire {

  namespace {

    namespace pt = boost::property_tree;
    constexpr double nan = std::numeric_limits<double>::quiet_NaN();

    // ---- config parsing helpers -------------------------------------------

    std::string trim(std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
    }

    double to_double(const std::string &text, const std::string &where) {
      const std::string s = trim(text);
      std::size_t used    = 0;
      double v            = 0.0;
      try {
        v = std::stod(s, &used);
      } catch (const std::exception &) { used = 0; }
      if (used == 0 || used != s.size()) throw ConfigError(where + ": expected a number, got '" + s + "'");
      return v;
    }

    std::vector<double> to_list(const std::string &text, const std::string &where) {
      std::vector<double> out;
      std::stringstream ss(text);
      std::string item;
      while (std::getline(ss, item, ',')) out.push_back(to_double(item, where));
      if (out.empty()) throw ConfigError(where + ": empty list");
      return out;
    }

    bool to_bool(const std::string &text, const std::string &where) {
      const std::string s = trim(text);
      if (s == "true" || s == "1" || s == "yes") return true;
      if (s == "false" || s == "0" || s == "no") return false;
      throw ConfigError(where + ": expected true/false, got '" + s + "'");
    }

    Matching to_matching(const std::string &s, const std::string &where) {
      if (s == "mass_weighted") return Matching::mass_weighted;
      if (s == "plain") return Matching::plain;
      throw ConfigError(where + ": matching must be mass_weighted or plain, got '" + s + "'");
    }

    LineshapeMode to_mode(const std::string &s, const std::string &where) {
      if (s == "detuning") return LineshapeMode::detuning;
      if (s == "amplitude") return LineshapeMode::amplitude;
      throw ConfigError(where + ": mode must be detuning or amplitude, got '" + s + "'");
    }

    const char *name(Matching m) { return m == Matching::plain ? "plain" : "mass_weighted"; }
    const char *name(LineshapeMode m) { return m == LineshapeMode::amplitude ? "amplitude" : "detuning"; }

    // Walks one section, dispatching each key; unknown keys are errors.
    template <class Handler> void each_key(const pt::ptree &section, const std::string &name, Handler &&h) {
      for (const auto &[key, node] : section) {
        const std::string where = "[" + name + "] " + key;
        if (!h(key, node.data(), where)) throw ConfigError(where + ": unknown key");
      }
    }

    // ---- tables ---------------------------------------------------------------

    Geometry at_radius(const RunConfig &cfg, double r) {
      Geometry g    = cfg.geometry;
      g.core_radius = r;
      return g;
    }

    std::string level_label(int n, int l) { return "E" + std::to_string(n) + std::to_string(l); }

    std::string radius_tag(double r) {
      std::ostringstream os;
      os << std::setprecision(6) << r;
      return os.str();
    }

    unsigned worker_count() {
      if (const char *env = std::getenv("QWIRE_WORKERS")) {
        const int n = std::atoi(env);
        if (n > 0) return static_cast<unsigned>(n);
      }
      return std::max(1u, std::thread::hardware_concurrency());
    }

    // Evaluates fn(i) for i in [0, n) on a small pool; results keep index order.
    template <class Fn> auto parallel_map(std::size_t n, Fn &&fn) {
      using R = decltype(fn(std::size_t{}));
      std::vector<R> out(n);
      std::vector<std::exception_ptr> errors(n);
      std::atomic<std::size_t> next{0};
      auto worker = [&] {
        for (std::size_t i = next++; i < n; i = next++) {
          try {
            out[i] = fn(i);
          } catch (...) { errors[i] = std::current_exception(); }
        }
      };
      const unsigned count = std::min<unsigned>(worker_count(), static_cast<unsigned>(std::max<std::size_t>(n, 1)));
      std::vector<std::thread> pool;
      for (unsigned t = 1; t < count; ++t) pool.emplace_back(worker);
      worker();
      for (auto &t : pool) t.join();
      for (auto &e : errors)
        if (e) std::rethrow_exception(e);
      return out;
    }

    template <class F> auto with_context(const std::string &context, F &&f) -> decltype(f()) {
      try {
        return f();
      } catch (const AccuracyError &e) {
        throw AccuracyError(context + ": " + e.what(), e.achieved());
      } catch (const Error &e) { throw Error(e.kind(), context + ": " + e.what()); }
    }

    struct LinePair {
      LineModel wire;
      LineModel dot;
    };

    LinePair lines_at(const RunConfig &cfg, double r, const ModelOptions &opt) {
      const auto g = at_radius(cfg, r);
      return {wire_line(g, cfg.materials, opt), dot_line(g, cfg.materials, opt)};
    }

    std::vector<double> compare_row(const RunConfig &cfg, double r, const ModelOptions &opt) {
      const auto lines = lines_at(cfg, r, opt);
      const auto grid  = cfg.grid.points();
      const auto qwr   = qwr_absorption(grid, lines.wire.transition, opt.gamma, opt.thermal, opt.mode,
                                        lines.wire.mass_ratio, r);
      const auto qd    = qd_absorption(grid, lines.dot.transition, opt.gamma, r);
      const double eps_wire = lines.wire.response.background_eps +
                              resonant_susceptibility(0.0, lines.wire.transition, lines.wire.response).real();
      const double eps_dot = lines.dot.response.background_eps +
                             resonant_susceptibility(0.0, lines.dot.transition, lines.dot.response).real();
      return {lines.wire.transition.energy_gap,
              lines.dot.transition.energy_gap,
              lines.wire.transition.dipole_moment,
              lines.dot.transition.dipole_moment,
              qwr.peak_energy(),
              qd.peak_energy(),
              qwr.fwhm(),
              qd.fwhm(),
              qd.peak_value() > 0.0 ? qwr.peak_value() / qd.peak_value() : nan,
              lines.wire.sheet.value,
              lines.wire.volume_norm,
              lines.dot.volume_norm,
              eps_wire,
              eps_dot};
    }

    const std::vector<std::string> compare_columns{
       "E21_qwr_mev",    "E21_qd_mev",     "dipole_qwr_enm", "dipole_qd_enm",   "peak_qwr_mev",
       "peak_qd_mev",    "fwhm_qwr_mev",   "fwhm_qd_mev",    "peak_ratio_qwr_qd", "sheet_density_nm3",
       "volume_qwr_nm3", "volume_qd_nm3",  "re_eps0_qwr",    "re_eps0_qd"};

    std::string sha256_hex(const std::string &data) {
      unsigned char digest[EVP_MAX_MD_SIZE];
      unsigned int len = 0;
      EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr);
      std::ostringstream os;
      for (unsigned i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
      return os.str();
    }

    std::string output_name(Command c, double radius) {
      return to_string(c) + "_r" + radius_tag(radius) + "nm.csv";
    }

  } // namespace

  // ---- commands ---------------------------------------------------------------

  Command parse_command(const std::string &s) {
    if (s == "levels") return Command::levels;
    if (s == "binding") return Command::binding;
    if (s == "absorb") return Command::absorb;
    if (s == "dielectric") return Command::dielectric;
    if (s == "compare") return Command::compare;
    if (s == "sweep") return Command::sweep;
    throw ConfigError("unknown command '" + s + "'");
  }

  std::string to_string(Command c) {
    switch (c) {
    case Command::levels: return "levels";
    case Command::binding: return "binding";
    case Command::absorb: return "absorb";
    case Command::dielectric: return "dielectric";
    case Command::compare: return "compare";
    case Command::sweep: return "sweep";
    }
    return "unknown";
  }

  std::vector<double> GridSpec::points() const {
    if (!(step > 0.0) || !(max >= min)) throw ConfigError("[spectrum] grid must satisfy step > 0 and max >= min");
    const auto n = static_cast<std::size_t>(std::floor((max - min) / step + 1e-9)) + 1;
    std::vector<double> p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = min + static_cast<double>(i) * step;
    return p;
  }

  // ---- configuration ----------------------------------------------------------

  RunConfig parse_config(const std::string &text) {
    pt::ptree tree;
    std::istringstream in(text);
    try {
      pt::read_ini(in, tree);
    } catch (const pt::ini_parser_error &e) {
      throw ConfigError("line " + std::to_string(e.line()) + ": " + e.message());
    }

    RunConfig cfg;
    bool schema_seen = false;
    for (const auto &[key, node] : tree) {
      if (node.empty()) {
        // top-level key
        const std::string where = key;
        if (key == "schema") {
          const double v = to_double(node.get_value<std::string>(), where);
          if (v != config_schema_version)
            throw ConfigError("schema: unsupported version " + node.get_value<std::string>());
          schema_seen = true;
        } else if (key == "command") {
          cfg.command = parse_command(trim(node.get_value<std::string>()));
        } else if (key == "output_dir") {
          cfg.output_dir = trim(node.get_value<std::string>());
        } else {
          throw ConfigError(where + ": unknown top-level key");
        }
        continue;
      }

      const std::string section = key;
      if (section == "geometry") {
        each_key(node, section, [&](const std::string &k, const std::string &v, const std::string &w) {
          if (k == "well") cfg.geometry.well = trim(v);
          else if (k == "barrier") cfg.geometry.barrier = trim(v);
          else if (k == "offset_ratio") cfg.geometry.offset_ratio = to_double(v, w);
          else if (k == "radii_nm") cfg.radii = to_list(v, w);
          else return false;
          return true;
        });
      } else if (section.rfind("material:", 0) == 0) {
        const std::string id = section.substr(9);
        MaterialParams p{0.0, 0.0, 0.0, std::nullopt};
        bool gap = false, mass = false, eps = false;
        each_key(node, section, [&](const std::string &k, const std::string &v, const std::string &w) {
          if (k == "band_gap_mev") p.band_gap = to_double(v, w), gap = true;
          else if (k == "effective_mass") p.effective_mass = to_double(v, w), mass = true;
          else if (k == "eps_static") p.eps_static = to_double(v, w), eps = true;
          else if (k == "eps_infinity") p.eps_infinity = to_double(v, w);
          else return false;
          return true;
        });
        if (!(gap && mass && eps))
          throw ConfigError("[" + section + "]: band_gap_mev, effective_mass and eps_static are required");
        try {
          cfg.materials.add(id, p);
        } catch (const DomainError &e) { throw ConfigError("[" + section + "]: " + e.what()); }
      } else if (section == "solver") {
        each_key(node, section, [&](const std::string &k, const std::string &v, const std::string &w) {
          if (k == "matching") cfg.model.matching = to_matching(trim(v), w);
          else if (k == "max_n") cfg.max_n = static_cast<int>(to_double(v, w));
          else if (k == "doped") cfg.model.doped = to_bool(v, w);
          else return false;
          return true;
        });
      } else if (section == "thermal") {
        each_key(node, section, [&](const std::string &k, const std::string &v, const std::string &w) {
          if (k == "temperature_k") cfg.model.thermal.temperature = to_double(v, w);
          else if (k == "fermi_offset_mev") cfg.model.thermal.fermi_offset = to_double(v, w);
          else if (k == "area_nm2") cfg.model.thermal.area = to_double(v, w);
          else return false;
          return true;
        });
      } else if (section == "response") {
        each_key(node, section, [&](const std::string &k, const std::string &v, const std::string &w) {
          if (k == "gamma_mev") cfg.model.gamma = to_double(v, w);
          else if (k == "field_v_per_nm") cfg.model.field = to_double(v, w);
          else if (k == "background_eps") cfg.model.background_eps = to_double(v, w);
          else if (k == "wire_volume_scale") cfg.model.wire_volume_scale = to_double(v, w);
          else if (k == "dot_volume_scale") cfg.model.dot_volume_scale = to_double(v, w);
          else if (k == "volume_norm_nm3") cfg.model.volume_override = to_double(v, w);
          else return false;
          return true;
        });
      } else if (section == "spectrum") {
        each_key(node, section, [&](const std::string &k, const std::string &v, const std::string &w) {
          if (k == "min_mev") cfg.grid.min = to_double(v, w);
          else if (k == "max_mev") cfg.grid.max = to_double(v, w);
          else if (k == "step_mev") cfg.grid.step = to_double(v, w);
          else if (k == "qwr_mode") cfg.model.mode = to_mode(trim(v), w);
          else return false;
          return true;
        });
      } else if (section == "sweep") {
        each_key(node, section, [&](const std::string &k, const std::string &v, const std::string &w) {
          if (k == "temperatures_k") cfg.temperatures = to_list(v, w);
          else return false;
          return true;
        });
      } else {
        throw ConfigError("[" + section + "]: unknown section");
      }
    }
    if (!schema_seen) throw ConfigError("schema: missing 'schema = 1' line");
    validate(cfg);
    return cfg;
  }

  RunConfig load_config(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot read config '" + path.string() + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    try {
      return parse_config(ss.str());
    } catch (const ConfigError &e) { throw ConfigError(path.string() + ": " + e.what()); }
  }

  void validate(const RunConfig &cfg) {
    try {
      for (double r : cfg.radii) resolve(at_radius(cfg, r), cfg.materials);
    } catch (const Error &e) { throw ConfigError(std::string("[geometry] ") + e.what()); }
    if (cfg.radii.empty()) throw ConfigError("[geometry] radii_nm: empty");
    if (!std::is_sorted(cfg.radii.begin(), cfg.radii.end()) ||
        std::adjacent_find(cfg.radii.begin(), cfg.radii.end()) != cfg.radii.end())
      throw ConfigError("[geometry] radii_nm: must be strictly increasing");
    if (cfg.max_n < 1) throw ConfigError("[solver] max_n: must be >= 1");
    if (!(cfg.model.gamma > 0.0)) throw ConfigError("[response] gamma_mev: must be positive");
    if (cfg.model.background_eps && !(*cfg.model.background_eps >= 1.0))
      throw ConfigError("[response] background_eps: must be >= 1");
    if (!(cfg.model.wire_volume_scale > 0.0) || !(cfg.model.dot_volume_scale > 0.0))
      throw ConfigError("[response] volume scales must be positive");
    if (cfg.model.volume_override && !(*cfg.model.volume_override > 0.0))
      throw ConfigError("[response] volume_norm_nm3: must be positive");
    if (!(cfg.model.thermal.temperature > 0.0)) throw ConfigError("[thermal] temperature_k: must be positive");
    if (!(cfg.model.thermal.area > 0.0)) throw ConfigError("[thermal] area_nm2: must be positive");
    for (double t : cfg.temperatures)
      if (!(t > 0.0)) throw ConfigError("[sweep] temperatures_k: must be positive");
    (void)cfg.grid.points();
  }

  std::string canonical_form(const RunConfig &cfg) {
    nlohmann::ordered_json j;
    j["schema"]  = cfg.schema;
    j["command"] = to_string(cfg.command);
    j["geometry"] = {{"well", cfg.geometry.well},
                     {"barrier", cfg.geometry.barrier},
                     {"offset_ratio", cfg.geometry.offset_ratio},
                     {"radii_nm", cfg.radii}};
    for (const auto &[id, p] : cfg.materials.entries())
      j["materials"][id] = {{"band_gap_mev", p.band_gap},
                            {"effective_mass", p.effective_mass},
                            {"eps_static", p.eps_static},
                            {"eps_infinity", p.eps_infinity ? nlohmann::json(*p.eps_infinity) : nlohmann::json()}};
    const auto &m = cfg.model;
    j["solver"]   = {{"matching", name(m.matching)}, {"max_n", cfg.max_n}, {"doped", m.doped}};
    j["thermal"]  = {{"temperature_k", m.thermal.temperature},
                     {"fermi_offset_mev", m.thermal.fermi_offset},
                     {"area_nm2", m.thermal.area}};
    j["response"] = {{"gamma_mev", m.gamma},
                     {"field_v_per_nm", m.field},
                     {"background_eps", m.background_eps ? nlohmann::json(*m.background_eps) : nlohmann::json("well")},
                     {"wire_volume_scale", m.wire_volume_scale},
                     {"dot_volume_scale", m.dot_volume_scale},
                     {"volume_norm_nm3", m.volume_override ? nlohmann::json(*m.volume_override) : nlohmann::json()}};
    j["spectrum"] = {{"min_mev", cfg.grid.min},
                     {"max_mev", cfg.grid.max},
                     {"step_mev", cfg.grid.step},
                     {"qwr_mode", name(m.mode)}};
    j["sweep"]    = {{"temperatures_k", cfg.temperatures}};
    return j.dump();
  }

  std::string config_hash(const RunConfig &cfg) { return sha256_hex(canonical_form(cfg)); }

  std::string library_version() { return QWIRE_VERSION; }

  // ---- CSV --------------------------------------------------------------------

  std::string format_number(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    const double a = std::abs(v);
    if (v == 0.0) {
      std::snprintf(buf, sizeof buf, "%.11f", 0.0);
    } else if (a >= 1e-4 && a < 1e12) {
      const int magnitude = static_cast<int>(std::floor(std::log10(a)));
      int decimals        = std::max(0, 11 - magnitude);
      std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
      // rounding can carry into a new digit (9.99..95 -> 10.00..0)
      const std::string s(buf);
      const double rounded = std::abs(std::stod(s));
      if (rounded > 0.0 && static_cast<int>(std::floor(std::log10(rounded))) > magnitude && decimals > 0)
        std::snprintf(buf, sizeof buf, "%.*f", decimals - 1, v);
    } else {
      std::snprintf(buf, sizeof buf, "%.11e", v);
    }
    return buf;
  }

  EmitStatus emit_csv(const Table &table, const std::filesystem::path &path) {
    for (const auto &row : table.rows)
      if (row.size() != table.columns.size())
        throw DomainError("table is not rectangular (" + std::to_string(row.size()) + " values for " +
                          std::to_string(table.columns.size()) + " columns)");
    if (path.has_parent_path()) {
      std::error_code ec;
      std::filesystem::create_directories(path.parent_path(), ec);
      if (ec) throw IoError("cannot create directory '" + path.parent_path().string() + "': " + ec.message());
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
    for (std::size_t c = 0; c < table.columns.size(); ++c) out << (c ? "," : "") << table.columns[c];
    out << '\n';
    for (const auto &row : table.rows) {
      for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << format_number(row[c]);
      out << '\n';
    }
    out.flush();
    if (!out) throw IoError("write failed for '" + path.string() + "'");
    return table.rows.empty() ? EmitStatus::empty : EmitStatus::ok;
  }

  void emit_metadata(const RunConfig &cfg, const std::filesystem::path &csv_path, const std::string &extra_json) {
    nlohmann::ordered_json j;
    j["version"]     = library_version();
    j["config_hash"] = config_hash(cfg);
    j["command"]     = to_string(cfg.command);
    j["file"]        = csv_path.filename().string();
    j["switches"]    = {{"matching", name(cfg.model.matching)},
                        {"qwr_mode", name(cfg.model.mode)},
                        {"doped", cfg.model.doped},
                        {"sheet_density_order_for_volume", "initial_minus_final"},
                        {"background_eps", cfg.model.background_eps ? nlohmann::json(*cfg.model.background_eps)
                                                                    : nlohmann::json("well eps_static")},
                        {"offset_ratio", cfg.geometry.offset_ratio},
                        {"wire_volume_scale", cfg.model.wire_volume_scale},
                        {"dot_volume_scale", cfg.model.dot_volume_scale},
                        {"fermi_cutoff_kT", fermi_cutoff_kT},
                        {"radius_unit", "nm (core radius, not diameter)"}};
    j["config"]      = nlohmann::json::parse(canonical_form(cfg));
    j["extra"]       = nlohmann::json::parse(extra_json);
    const auto path  = csv_path.string() + ".meta.json";
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out << j.dump(2) << '\n';
    if (!out) throw IoError("write failed for '" + path + "'");
  }

  // ---- tables -----------------------------------------------------------------

  Table levels_table(const RunConfig &cfg) {
    Table t;
    t.columns.push_back("radius_nm");
    for (const char *kind : {"qwr", "qd"})
      for (int l = 0; l <= 1; ++l)
        for (int n = 1; n <= cfg.max_n; ++n) t.columns.push_back(level_label(n, l) + "_" + kind + "_mev");

    t.rows = parallel_map(cfg.radii.size(), [&](std::size_t i) {
      const double r = cfg.radii[i];
      return with_context("levels, radius " + radius_tag(r) + " nm", [&] {
        std::vector<double> row{r};
        Geometry g = at_radius(cfg, r);
        g.shape    = Shape::cylinder;
        const auto cyl = resolve(g, cfg.materials);
        g.shape        = Shape::sphere;
        const auto sph = resolve(g, cfg.materials);
        for (int l = 0; l <= 1; ++l) {
          const auto lv = find_levels(l, cyl, cfg.max_n, cfg.model.matching);
          for (int n = 0; n < cfg.max_n; ++n) row.push_back(n < static_cast<int>(lv.size()) ? lv[n].energy : nan);
        }
        for (int l = 0; l <= 1; ++l) {
          const auto lv = qd_find_levels(l, sph, cfg.max_n, cfg.model.matching);
          for (int n = 0; n < cfg.max_n; ++n) row.push_back(n < static_cast<int>(lv.size()) ? lv[n].energy : nan);
        }
        return row;
      });
    });
    return t;
  }

  Table binding_table(const RunConfig &cfg) {
    Table t;
    t.columns = {"radius_nm",     "E10_mev",     "E10_donor_mev", "binding10_mev", "a10_nm2",      "E11_mev",
                 "E11_donor_mev", "binding11_mev", "a11_nm2",     "boundary_flag"};
    const auto jobs = cfg.radii.size() * 2;
    const auto donors = parallel_map(jobs, [&](std::size_t k) {
      const double r = cfg.radii[k / 2];
      const int l    = static_cast<int>(k % 2);
      return with_context("binding, radius " + radius_tag(r) + " nm, l = " + std::to_string(l), [&] {
        Geometry g = at_radius(cfg, r);
        g.shape    = Shape::cylinder;
        const auto levels = find_levels(l, resolve(g, cfg.materials), 1, cfg.model.matching);
        if (levels.empty()) throw DomainError("no bound state");
        return minimize_energy(levels.front());
      });
    });
    for (std::size_t i = 0; i < cfg.radii.size(); ++i) {
      const auto &d0 = donors[2 * i], &d1 = donors[2 * i + 1];
      t.rows.push_back({cfg.radii[i], d0.base.energy, d0.energy, d0.binding_energy, d0.a_opt, d1.base.energy,
                        d1.energy, d1.binding_energy, d1.a_opt,
                        (d0.at_boundary || d1.at_boundary) ? 1.0 : 0.0});
    }
    return t;
  }

  Table absorb_table(const RunConfig &cfg, double radius) {
    return with_context("absorb, radius " + radius_tag(radius) + " nm", [&] {
      const auto lines = lines_at(cfg, radius, cfg.model);
      const auto grid  = cfg.grid.points();
      const auto qwr   = qwr_absorption(grid, lines.wire.transition, cfg.model.gamma, cfg.model.thermal,
                                        cfg.model.mode, lines.wire.mass_ratio, radius);
      const auto qd    = qd_absorption(grid, lines.dot.transition, cfg.model.gamma, radius);
      const auto qwr_n = qwr.normalized(), qd_n = qd.normalized();
      const double shared = qd.peak_value();
      Table t;
      t.columns = {"hbar_omega_mev", "qwr_rate", "qd_rate", "qwr_normalized", "qd_normalized", "qwr_shared_norm"};
      for (std::size_t i = 0; i < grid.size(); ++i)
        t.rows.push_back({grid[i], qwr.values[i], qd.values[i], qwr_n.values[i], qd_n.values[i],
                          shared > 0.0 ? qwr.values[i] / shared : nan});
      return t;
    });
  }

  Table dielectric_table(const RunConfig &cfg, double radius) {
    return with_context("dielectric, radius " + radius_tag(radius) + " nm", [&] {
      const auto lines = lines_at(cfg, radius, cfg.model);
      const auto grid  = cfg.grid.points();
      const auto wire  = dielectric_function(grid, lines.wire.transition, lines.wire.response);
      const auto dot   = dielectric_function(grid, lines.dot.transition, lines.dot.response);
      Table t;
      t.columns = {"hbar_omega_mev", "re_eps_qwr", "im_eps_qwr", "re_eps_qd", "im_eps_qd"};
      for (std::size_t i = 0; i < grid.size(); ++i)
        t.rows.push_back({grid[i], wire.eps[i].real(), wire.eps[i].imag(), dot.eps[i].real(), dot.eps[i].imag()});
      return t;
    });
  }

  Table compare_table(const RunConfig &cfg) {
    Table t;
    t.columns = {"radius_nm"};
    t.columns.insert(t.columns.end(), compare_columns.begin(), compare_columns.end());
    t.rows = parallel_map(cfg.radii.size(), [&](std::size_t i) {
      const double r = cfg.radii[i];
      return with_context("compare, radius " + radius_tag(r) + " nm", [&] {
        auto row = compare_row(cfg, r, cfg.model);
        row.insert(row.begin(), r);
        return row;
      });
    });
    return t;
  }

  Table sweep_table(const RunConfig &cfg) {
    Table t;
    t.columns = {"radius_nm", "temperature_k"};
    t.columns.insert(t.columns.end(), compare_columns.begin(), compare_columns.end());
    const auto nt = cfg.temperatures.size();
    t.rows = parallel_map(cfg.radii.size() * nt, [&](std::size_t k) {
      const double r = cfg.radii[k / nt], temp = cfg.temperatures[k % nt];
      return with_context("sweep, radius " + radius_tag(r) + " nm, T = " + radius_tag(temp) + " K", [&] {
        ModelOptions opt       = cfg.model;
        opt.thermal.temperature = temp;
        auto row = compare_row(cfg, r, opt);
        row.insert(row.begin(), {r, temp});
        return row;
      });
    });
    return t;
  }

  // ---- run ----------------------------------------------------------------------

  RunResult run(const RunConfig &cfg) {
    validate(cfg);
    RunResult result;
    auto write = [&](const Table &t, const std::string &file, const std::string &extra = "{}") {
      const auto path = cfg.output_dir / file;
      if (emit_csv(t, path) == EmitStatus::empty) result.warnings.push_back(path.string() + ": empty table");
      emit_metadata(cfg, path, extra);
      result.files.push_back(path);
    };

    switch (cfg.command) {
    case Command::levels: write(levels_table(cfg), "levels.csv"); break;
    case Command::binding: {
      const auto t = binding_table(cfg);
      for (const auto &row : t.rows)
        if (row.back() != 0.0)
          result.warnings.push_back("radius " + radius_tag(row.front()) + " nm: variational minimum at the a-interval edge");
      write(t, "binding.csv");
      break;
    }
    case Command::absorb:
    case Command::dielectric: {
      const auto tables = parallel_map(cfg.radii.size(), [&](std::size_t i) {
        return cfg.command == Command::absorb ? absorb_table(cfg, cfg.radii[i]) : dielectric_table(cfg, cfg.radii[i]);
      });
      for (std::size_t i = 0; i < tables.size(); ++i) {
        std::string extra = "{}";
        if (cfg.command == Command::absorb) {
          double qwr_peak = 0.0, qd_peak = 0.0;
          for (const auto &row : tables[i].rows) qwr_peak = std::max(qwr_peak, row[1]), qd_peak = std::max(qd_peak, row[2]);
          nlohmann::ordered_json e{{"radius_nm", cfg.radii[i]},
                                   {"qwr_peak_rate", qwr_peak},
                                   {"qd_peak_rate", qd_peak},
                                   {"rate_units", "hbar*omega*|M|^2/meV^2 (qd), times states/(meV nm) (qwr)"}};
          extra = e.dump();
        }
        write(tables[i], output_name(cfg.command, cfg.radii[i]), extra);
      }
      break;
    }
    case Command::compare: write(compare_table(cfg), "compare.csv"); break;
    case Command::sweep: write(sweep_table(cfg), "sweep.csv"); break;
    }
    return result;
  }

} // namespace qwire
