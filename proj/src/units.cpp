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

#include "qwire/units.hpp"

#include <numbers>

namespace qwire {

  namespace {

    // CODATA 2018 (exact where the SI defines them).
    constexpr double hbar_si     = 1.054571817e-34; // J s
    constexpr double m0_si       = 9.1093837015e-31; // kg
    constexpr double e_si        = 1.602176634e-19;  // C
    constexpr double eps0_si     = 8.8541878128e-12; // F/m
    constexpr double kB_si       = 1.380649e-23;     // J/K
    constexpr double joule_to_mev = 1.0 / e_si * 1e3;
    constexpr double nm2         = 1e-18;

    PhysicalConstants build() {
      PhysicalConstants c{};
      c.hbar2_over_2m0 = hbar_si * hbar_si / (2.0 * m0_si) * joule_to_mev / nm2;
      c.coulomb_factor = e_si * e_si / (4.0 * std::numbers::pi * eps0_si) * joule_to_mev / 1e-9;
      c.kB             = kB_si * joule_to_mev;
      c.hbar           = hbar_si * joule_to_mev / 1e-12;
      return c;
    }

  } // namespace

  const PhysicalConstants &constants() noexcept {
    static const PhysicalConstants c = build();
    return c;
  }

} // namespace qwire
