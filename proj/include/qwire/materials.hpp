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

#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace qwire {

  struct MaterialParams {
    double band_gap;                     ///< meV
    double effective_mass;               ///< m*/m0
    double eps_static;                   ///< relative static permittivity
    std::optional<double> eps_infinity;  ///< relative high-frequency permittivity, if known

    friend bool operator==(const MaterialParams &, const MaterialParams &) = default;
  };

  /// Throws DomainError unless band_gap > 0, 0 < m* < 1 and eps_static >= eps_infinity.
  void validate(const MaterialParams &p, std::string_view name);

  /// Name -> bulk parameters. Starts with zinc-blende GaN and AlN; more
  /// materials may be registered (e.g. from a run config) before use.
  class MaterialRegistry {
    public:
    MaterialRegistry();

    void add(std::string name, const MaterialParams &params);
    [[nodiscard]] const MaterialParams &lookup(std::string_view name) const;
    [[nodiscard]] bool contains(std::string_view name) const;
    [[nodiscard]] const std::map<std::string, MaterialParams, std::less<>> &entries() const { return table_; }

    private:
    std::map<std::string, MaterialParams, std::less<>> table_;
  };

  /// Lookup in the built-in registry.
  MaterialParams material_lookup(std::string_view name);

  enum class Shape { cylinder, sphere };

  struct Geometry {
    double core_radius  = 4.0; ///< nm
    std::string well    = "GaN";
    std::string barrier = "AlN";
    double offset_ratio = 0.76;
    Shape shape         = Shape::cylinder;
  };

  /// offset_ratio * (Eg_barrier - Eg_well), meV.
  double conduction_offset(const Geometry &g, const MaterialRegistry &reg = MaterialRegistry{});

  /// The numbers a radial solver needs, resolved from a Geometry and registry.
  struct WellProfile {
    double core_radius;    ///< nm
    double barrier_height; ///< meV
    double well_mass;      ///< m*/m0 inside the core
    double barrier_mass;   ///< m*/m0 in the shell
    double eps_well;       ///< static permittivity screening the donor
    Shape shape = Shape::cylinder;

    [[nodiscard]] double mass_at(double r) const { return r < core_radius ? well_mass : barrier_mass; }
    [[nodiscard]] double potential_at(double r) const { return r < core_radius ? 0.0 : barrier_height; }
  };

  WellProfile resolve(const Geometry &g, const MaterialRegistry &reg = MaterialRegistry{});

} // namespace qwire
