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

#include "qwire/spectra.hpp"

#include "numerics.hpp"
#include "qwire/errors.hpp"
#include "qwire/units.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace qwire {

  namespace {

    // sqrt(m* m0)/hbar in sqrt(meV)^-1 nm^-1
    double dos_scale(double mass_ratio) { return std::sqrt(mass_ratio / (2.0 * constants().hbar2_over_2m0)); }

    void check_grid(std::span<const double> grid) {
      if (grid.empty()) throw DomainError("empty photon-energy grid");
      if (std::adjacent_find(grid.begin(), grid.end(), std::greater_equal<>()) != grid.end())
        throw DomainError("photon-energy grid must be strictly increasing");
    }

  } // namespace

  void validate(const ThermalConfig &cfg) {
    if (!(cfg.temperature > 0.0)) throw DomainError("temperature must be positive");
    if (!(cfg.area > 0.0)) throw DomainError("normalisation area must be positive");
  }

  std::size_t Spectrum::peak_index() const {
    if (values.empty()) throw DomainError("empty spectrum");
    return static_cast<std::size_t>(std::max_element(values.begin(), values.end()) - values.begin());
  }

  double Spectrum::fwhm() const {
    const std::size_t p = peak_index();
    const double half   = 0.5 * values[p];
    auto crossing = [&](std::size_t inside, std::size_t outside) {
      const double t = (values[inside] - half) / (values[inside] - values[outside]);
      return photon_energy[inside] + t * (photon_energy[outside] - photon_energy[inside]);
    };
    std::size_t lo = p;
    while (lo > 0 && values[lo - 1] >= half) --lo;
    std::size_t hi = p;
    while (hi + 1 < values.size() && values[hi + 1] >= half) ++hi;
    const double left  = lo > 0 ? crossing(lo, lo - 1) : photon_energy.front();
    const double right = hi + 1 < values.size() ? crossing(hi, hi + 1) : photon_energy.back();
    return right - left;
  }

  Spectrum Spectrum::normalized() const {
    Spectrum out = *this;
    const double peak = values.empty() ? 0.0 : peak_value();
    if (peak > 0.0)
      for (double &v : out.values) v /= peak;
    return out;
  }

  double fermi_dirac(double energy, double fermi_level, double temperature) {
    if (!(temperature > 0.0)) throw DomainError("temperature must be positive");
    const double x = (energy - fermi_level) / (constants().kB * temperature);
    if (x > 0.0) {
      const double e = std::exp(-x);
      return e / (1.0 + e);
    }
    return 1.0 / (1.0 + std::exp(x));
  }

  double dos_1d(double energy, double edge, double mass_ratio) {
    if (!(energy > edge)) throw DomainError("dos_1d requires E > E_i");
    return dos_scale(mass_ratio) / (std::numbers::pi * std::sqrt(energy - edge));
  }

  double occupied_line_density(double edge, double fermi_level, double temperature, double mass_ratio, double cutoff) {
    if (!(cutoff > edge)) return 0.0;
    // D dE = (scale/pi) (1/u) 2u du
    auto f = [&](double u) { return fermi_dirac(edge + u * u, fermi_level, temperature); };
    const double integral = detail::integrate(f, 0.0, std::sqrt(cutoff - edge), 1e-12).value;
    return 2.0 * dos_scale(mass_ratio) / std::numbers::pi * integral;
  }

  double lorentzian_rate(double hw, const TransitionData &t, double gamma) {
    if (!(gamma > 0.0)) throw DomainError("damping gamma must be positive");
    const double detuning = t.energy_gap - hw;
    return hw * t.dipole_moment * t.dipole_moment / (detuning * detuning + gamma * gamma);
  }

  Spectrum qd_absorption(std::span<const double> grid, const TransitionData &t, double gamma, double radius) {
    check_grid(grid);
    Spectrum s;
    s.kind   = StructureKind::dot;
    s.radius = radius;
    s.gamma  = gamma;
    s.photon_energy.assign(grid.begin(), grid.end());
    s.values.reserve(grid.size());
    for (double hw : grid) s.values.push_back(lorentzian_rate(hw, t, gamma));
    return s;
  }

  Spectrum qwr_absorption(std::span<const double> grid, const TransitionData &t, double gamma,
                          const ThermalConfig &thermal, LineshapeMode mode, double mass_ratio, double radius) {
    check_grid(grid);
    validate(thermal);
    if (!(gamma > 0.0)) throw DomainError("damping gamma must be positive");
    const double edge   = t.initial.energy;
    const double fermi  = edge + thermal.fermi_offset;
    const double cutoff = fermi + fermi_cutoff_kT * constants().kB * thermal.temperature;

    Spectrum s;
    s.kind        = StructureKind::wire;
    s.radius      = radius;
    s.gamma       = gamma;
    s.temperature = thermal.temperature;
    s.photon_energy.assign(grid.begin(), grid.end());
    s.values.reserve(grid.size());

    if (mode == LineshapeMode::amplitude) {
      const double line = occupied_line_density(edge, fermi, thermal.temperature, mass_ratio, cutoff);
      for (double hw : grid) s.values.push_back(lorentzian_rate(hw, t, gamma) * line);
      return s;
    }

    const double umax  = cutoff > edge ? std::sqrt(cutoff - edge) : 0.0;
    const double scale = 2.0 * dos_scale(mass_ratio) / std::numbers::pi;
    const double m2    = t.dipole_moment * t.dipole_moment;
    for (double hw : grid) {
      const double excess = hw - t.energy_gap;
      auto f = [&](double u) {
        const double d = excess - u * u;
        return fermi_dirac(edge + u * u, fermi, thermal.temperature) / (d * d + gamma * gamma);
      };
      double integral = 0.0;
      const double u0 = excess > 0.0 ? std::sqrt(excess) : 0.0;
      if (u0 > 0.0 && u0 < umax)
        integral = detail::integrate(f, 0.0, u0, 1e-11).value + detail::integrate(f, u0, umax, 1e-11).value;
      else
        integral = detail::integrate(f, 0.0, umax, 1e-11).value;
      s.values.push_back(hw * m2 * scale * integral);
    }
    return s;
  }

  SheetDensity sheet_density(double initial_edge, double final_edge, double mass_ratio, const ThermalConfig &thermal,
                             SheetOrder order) {
    validate(thermal);
    const double fermi  = initial_edge + thermal.fermi_offset;
    const double cutoff = fermi + fermi_cutoff_kT * constants().kB * thermal.temperature;
    const double n_i = occupied_line_density(initial_edge, fermi, thermal.temperature, mass_ratio, cutoff);
    const double n_f = occupied_line_density(final_edge, fermi, thermal.temperature, mass_ratio, cutoff);
    const double v   = (order == SheetOrder::final_minus_initial ? n_f - n_i : n_i - n_f) / thermal.area;
    return {v, v < 0.0};
  }

  SheetDensity sheet_density(const SubbandState &i, const SubbandState &f, const ThermalConfig &thermal,
                             SheetOrder order) {
    return sheet_density(i.energy, f.energy, i.profile.well_mass, thermal, order);
  }

} // namespace qwire
