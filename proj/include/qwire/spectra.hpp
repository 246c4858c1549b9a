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

#include "qwire/coupling.hpp"

#include <span>
#include <vector>

namespace qwire {

  struct ThermalConfig {
    double temperature  = 300.0; ///< K
    double fermi_offset = 10.0;  ///< E_F - E_ground, meV
    double area         = 16.0;  ///< L_w normalisation area, nm^2
  };

  void validate(const ThermalConfig &cfg);

  /// How the 1D density of states enters the wire lineshape.
  enum class LineshapeMode {
    /// Lorentzian scaled by the occupied line density int D f dE.
    amplitude,
    /// Lorentzian convolved with the occupied DOS, D(E_i + e) f(E_i + e),
    /// over the free-motion energy e; gives the asymmetric high-energy tail.
    detuning
  };

  enum class StructureKind { wire, dot };

  struct Spectrum {
    std::vector<double> photon_energy; ///< meV, strictly increasing
    std::vector<double> values;        ///< rate, arbitrary units
    StructureKind kind = StructureKind::wire;
    double radius      = 0.0;
    double gamma       = 0.0;
    double temperature = 0.0;

    [[nodiscard]] std::size_t peak_index() const;
    [[nodiscard]] double peak_energy() const { return photon_energy.at(peak_index()); }
    [[nodiscard]] double peak_value() const { return values.at(peak_index()); }
    /// Full width at half maximum, linearly interpolated between grid points.
    [[nodiscard]] double fwhm() const;
    /// Copy scaled so that the peak equals 1 (unchanged if all zero).
    [[nodiscard]] Spectrum normalized() const;
  };

  /// 1/(1 + exp((E - E_F)/kT)), evaluated without overflow.
  double fermi_dirac(double energy, double fermi_level, double temperature);

  /// sqrt(m*)/(pi hbar sqrt(E - E_i)) in states per meV per nm; E > E_i.
  double dos_1d(double energy, double subband_edge, double mass_ratio);

  /// int_{E_i}^{E_cut} D(E, E_i) f(E) dE with E = E_i + u^2 to remove the
  /// edge singularity; per nm. Zero when E_cut <= E_i.
  double occupied_line_density(double subband_edge, double fermi_level, double temperature, double mass_ratio,
                               double cutoff);

  /// hw |M|^2 / ((E21 - hw)^2 + (hg)^2)
  double lorentzian_rate(double photon_energy, const TransitionData &t, double gamma);

  Spectrum qd_absorption(std::span<const double> grid, const TransitionData &t, double gamma, double radius = 0.0);

  /// DOS-weighted wire spectrum. The initial subband edge is t.initial.energy,
  /// E_F = edge + thermal.fermi_offset and Fermi integrals stop at E_F + 40 kT.
  Spectrum qwr_absorption(std::span<const double> grid, const TransitionData &t, double gamma,
                          const ThermalConfig &thermal, LineshapeMode mode, double mass_ratio, double radius = 0.0);

  /// Which way round the two subband occupancies are subtracted.
  enum class SheetOrder {
    final_minus_initial, ///< as written for 1/V; negative for a filled ground subband
    initial_minus_final  ///< population difference, positive
  };

  struct SheetDensity {
    double value;  ///< nm^-3
    bool negative; ///< diagnostic: value < 0
  };

  /// (1/L_w) [int D(E,E_f) f dE - int D(E,E_i) f dE] (order per `order`),
  /// with E_F = E_i + fermi_offset.
  SheetDensity sheet_density(double initial_edge, double final_edge, double mass_ratio, const ThermalConfig &thermal,
                             SheetOrder order = SheetOrder::final_minus_initial);
  SheetDensity sheet_density(const SubbandState &initial, const SubbandState &final_state, const ThermalConfig &thermal,
                             SheetOrder order = SheetOrder::final_minus_initial);

  inline constexpr double fermi_cutoff_kT = 40.0;

} // namespace qwire
