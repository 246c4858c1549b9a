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

#include "qwire/materials.hpp"

#include "qwire/errors.hpp"

namespace qwire {

  void validate(const MaterialParams &p, std::string_view name) {
    const std::string id(name);
    if (!(p.band_gap > 0.0)) throw DomainError("material '" + id + "': band gap must be positive");
    if (!(p.effective_mass > 0.0 && p.effective_mass < 1.0))
      throw DomainError("material '" + id + "': effective mass ratio must lie in (0, 1)");
    if (!(p.eps_static > 0.0)) throw DomainError("material '" + id + "': static permittivity must be positive");
    if (p.eps_infinity && *p.eps_infinity > p.eps_static)
      throw DomainError("material '" + id + "': eps_infinity exceeds eps_static");
  }

  MaterialRegistry::MaterialRegistry() {
    // zinc-blende nitrides
    table_.emplace("GaN", MaterialParams{3200.0, 0.13, 9.56, 5.3});
    table_.emplace("AlN", MaterialParams{5300.0, 0.19, 8.35, std::nullopt});
  }

  void MaterialRegistry::add(std::string name, const MaterialParams &params) {
    validate(params, name);
    table_.insert_or_assign(std::move(name), params);
  }

  const MaterialParams &MaterialRegistry::lookup(std::string_view name) const {
    auto it = table_.find(name);
    if (it == table_.end()) throw LookupError("unknown material '" + std::string(name) + "'");
    return it->second;
  }

  bool MaterialRegistry::contains(std::string_view name) const { return table_.find(name) != table_.end(); }

  MaterialParams material_lookup(std::string_view name) {
    static const MaterialRegistry builtin;
    return builtin.lookup(name);
  }

  double conduction_offset(const Geometry &g, const MaterialRegistry &reg) {
    const auto &well    = reg.lookup(g.well);
    const auto &barrier = reg.lookup(g.barrier);
    if (!(g.offset_ratio > 0.0 && g.offset_ratio <= 1.0)) throw DomainError("offset ratio must lie in (0, 1]");
    const double gap_difference = barrier.band_gap - well.band_gap;
    if (!(gap_difference > 0.0))
      throw InvalidHeterojunction("barrier '" + g.barrier + "' does not have a wider gap than well '" + g.well + "'");
    return g.offset_ratio * gap_difference;
  }

  WellProfile resolve(const Geometry &g, const MaterialRegistry &reg) {
    if (!(g.core_radius > 0.0)) throw DomainError("core radius must be positive");
    const auto &well    = reg.lookup(g.well);
    const auto &barrier = reg.lookup(g.barrier);
    return WellProfile{g.core_radius, conduction_offset(g, reg), well.effective_mass, barrier.effective_mass,
                       well.eps_static, g.shape};
  }

} // namespace qwire
