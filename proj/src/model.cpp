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

#include "qwire/model.hpp"

#include "qwire/donor.hpp"
#include "qwire/errors.hpp"
#include "qwire/qd.hpp"

#include <cmath>
#include <numbers>

namespace qwire {

  namespace {

    template <class State> const State &first_level(const std::vector<State> &levels, int l) {
      if (levels.empty()) throw DomainError("no bound state with l = " + std::to_string(l));
      return levels.front();
    }

    ResponseConfig response_for(const ModelOptions &opt, const WellProfile &well, double volume) {
      ResponseConfig r;
      r.gamma          = opt.gamma;
      r.field          = opt.field;
      r.volume_norm    = volume;
      r.background_eps = opt.background_eps.value_or(well.eps_well);
      validate(r);
      return r;
    }

  } // namespace

  LineModel wire_line(const Geometry &g, const MaterialRegistry &reg, const ModelOptions &opt) {
    Geometry cyl = g;
    cyl.shape    = Shape::cylinder;
    const auto well = resolve(cyl, reg);
    const auto s10  = first_level(find_levels(0, well, 1, opt.matching), 0);
    const auto s11  = first_level(find_levels(1, well, 1, opt.matching), 1);

    LineModel m;
    m.mass_ratio = well.well_mass;
    if (opt.doped) {
      m.transition = make_transition(minimize_energy(s10), minimize_energy(s11));
    } else {
      m.transition = make_transition(s10, s11);
    }
    const double edge_i = m.transition.initial.energy, edge_f = m.transition.final_level.energy;
    m.sheet = sheet_density(edge_i, edge_f, well.well_mass, opt.thermal, SheetOrder::final_minus_initial);
    const auto population = sheet_density(edge_i, edge_f, well.well_mass, opt.thermal, SheetOrder::initial_minus_final);
    if (!(population.value > 0.0)) throw DomainError("empty initial subband; wire volume undefined");
    m.derived_volume = 1.0 / population.value;
    m.volume_norm    = opt.volume_override.value_or(m.derived_volume * opt.wire_volume_scale);
    m.response       = response_for(opt, well, m.volume_norm);
    return m;
  }

  LineModel dot_line(const Geometry &g, const MaterialRegistry &reg, const ModelOptions &opt) {
    Geometry sph = g;
    sph.shape    = Shape::sphere;
    const auto well = resolve(sph, reg);
    const auto d10  = first_level(qd_find_levels(0, well, 1, opt.matching), 0);
    const auto d11  = first_level(qd_find_levels(1, well, 1, opt.matching), 1);

    LineModel m;
    m.mass_ratio     = well.well_mass;
    m.transition     = make_transition(d10, d11);
    m.derived_volume = 4.0 / 3.0 * std::numbers::pi * std::pow(well.core_radius, 3);
    m.volume_norm    = opt.volume_override.value_or(m.derived_volume * opt.dot_volume_scale);
    m.response       = response_for(opt, well, m.volume_norm);
    return m;
  }

} // namespace qwire
