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

#include "qwire/response.hpp"

#include "qwire/errors.hpp"
#include "qwire/units.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace qwire {

  namespace {

    using namespace std::complex_literals;

    cplx checked_inverse(cplx d, const char *what) {
      if (d == cplx{0.0, 0.0}) throw SingularityError(std::string(what) + " denominator vanishes");
      return 1.0 / d;
    }

    // |M|^2/(eps0 V) in units where energies are meV
    double prefactor(const TransitionData &t, double volume) {
      return 4.0 * std::numbers::pi * constants().coulomb_factor * t.dipole_moment * t.dipole_moment / volume;
    }

  } // namespace

  void validate(const ResponseConfig &cfg) {
    if (!(cfg.gamma > 0.0)) throw DomainError("damping gamma must be positive");
    if (!(cfg.volume_norm > 0.0)) throw DomainError("volume_norm must be positive");
    if (!(cfg.background_eps >= 1.0)) throw DomainError("background_eps must be >= 1");
  }

  DensityMatrix stationary_density_matrix(double hw, const TransitionData &t, const ResponseConfig &cfg) {
    constexpr double population = 1.0;
    const double e0    = cfg.field * field_energy_mev; // meV per e*nm
    const double m_e0  = t.dipole_moment * e0;
    const double shift = t.delta_diag * e0;

    DensityMatrix rho{};
    rho.rho21 = population * m_e0 * checked_inverse(t.energy_gap - hw + shift - 1i * cfg.gamma, "rho21");
    rho.rho12 = population * m_e0 * checked_inverse(t.energy_gap + hw + shift + 1i * cfg.gamma, "rho12");
    if (m_e0 == 0.0) return rho;
    const cplx slow = checked_inverse(hw + 1i * cfg.gamma, "rho11");
    rho.rho11 = (t.dipole_moment * rho.rho12 - t.dipole_moment * rho.rho21) * e0 * slow;
    rho.rho22 = -rho.rho11;
    return rho;
  }

  cplx resonant_susceptibility(double hw, const TransitionData &t, const ResponseConfig &cfg) {
    validate(cfg);
    const double shift = t.delta_diag * cfg.field * field_energy_mev;
    const cplx inv_minus = 1.0 / (t.energy_gap - hw + shift - 1i * cfg.gamma);
    const cplx inv_plus  = 1.0 / (t.energy_gap + hw + shift + 1i * cfg.gamma);
    cplx bracket = inv_plus + inv_minus;
    if (shift != 0.0) bracket += shift / (hw + 1i * cfg.gamma) * (inv_plus - inv_minus);
    return prefactor(t, cfg.volume_norm) * bracket;
  }

  ComplexResponse dielectric_function(std::span<const double> grid, const TransitionData &t, const ResponseConfig &cfg) {
    if (!std::is_sorted(grid.begin(), grid.end())) throw DomainError("photon-energy grid must be ascending");
    ComplexResponse out;
    out.photon_energy.assign(grid.begin(), grid.end());
    out.chi_res.reserve(grid.size());
    out.eps.reserve(grid.size());
    for (double hw : grid) {
      const cplx chi = resonant_susceptibility(hw, t, cfg);
      out.chi_res.push_back(chi);
      out.eps.push_back(cfg.background_eps + chi);
    }
    return out;
  }

  double calibrate_volume_norm(double target, const TransitionData &t, const ResponseConfig &cfg) {
    ResponseConfig unit = cfg;
    unit.volume_norm    = 1.0;
    const double chi_unit = resonant_susceptibility(0.0, t, unit).real();
    const double excess   = target - cfg.background_eps;
    if (!(excess != 0.0) || chi_unit / excess <= 0.0)
      throw DomainError("target static permittivity not reachable with a positive volume");
    return chi_unit / excess;
  }

} // namespace qwire
