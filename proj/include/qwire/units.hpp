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

namespace qwire {

  // Internal unit system: energies in meV, lengths in nm, temperatures in K.
  // Dipole moments are expressed in e*nm, fields in V/nm.

  struct PhysicalConstants {
    double hbar2_over_2m0; ///< hbar^2 / (2 m0)  [meV nm^2]
    double coulomb_factor; ///< e^2 / (4 pi eps0) [meV nm]
    double kB;             ///< Boltzmann constant [meV/K]
    double hbar;           ///< reduced Planck constant [meV ps]
  };

  /// CODATA 2018 values converted to (meV, nm, K, ps).
  const PhysicalConstants &constants() noexcept;

  /// One e*nm times one V/nm, in meV.
  inline constexpr double field_energy_mev = 1000.0;

} // namespace qwire
