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

#include <complex>
#include <span>
#include <vector>

namespace qwire {

  using cplx = std::complex<double>;

  struct ResponseConfig {
    double gamma          = 10.0;  ///< hbar*gamma damping, meV
    double field          = 0.0;   ///< optical field amplitude E0, V/nm
    double volume_norm    = 1.0;   ///< V of the 1/V prefactor, nm^3
    double background_eps = 9.56;  ///< 1 + chi^(1) of the host
  };

  /// Throws DomainError unless gamma > 0, volume_norm > 0, background_eps >= 1.
  void validate(const ResponseConfig &cfg);

  /// Stationary amplitudes of the driven two-level density matrix for the
  /// e^{-i omega t} component, with rho11^(0) - rho22^(0) = 1 (ground state
  /// filled, excited state empty):
  ///   rho21 = M21 E0 / (E21 - hw + dM E0 - i hg)
  ///   rho12 = M12 E0 / (E21 + hw + dM E0 + i hg)
  ///   rho11 = (M21 rho12 - M12 rho21) E0 / (hw + i hg),  rho22 = -rho11
  struct DensityMatrix {
    cplx rho11, rho12, rho21, rho22;
  };

  /// gamma may be zero here; a vanishing denominator throws SingularityError.
  DensityMatrix stationary_density_matrix(double photon_energy, const TransitionData &t, const ResponseConfig &cfg);

  /// chi_res = |M12|^2/(eps0 V) [1/E+ + 1/E- + (dM E0/(hw + i hg)) (1/E+ - 1/E-)]
  /// with E-/+ = E21 -/+ hw + dM E0 -/+ i hg. Absorption shows up as Im chi > 0.
  cplx resonant_susceptibility(double photon_energy, const TransitionData &t, const ResponseConfig &cfg);

  struct ComplexResponse {
    std::vector<double> photon_energy; ///< meV
    std::vector<cplx> chi_res;
    std::vector<cplx> eps;
  };

  /// eps(w) = background_eps + chi_res(w) on an ascending grid.
  ComplexResponse dielectric_function(std::span<const double> grid, const TransitionData &t, const ResponseConfig &cfg);

  /// The volume_norm for which Re eps(0) equals `target`.
  double calibrate_volume_norm(double target, const TransitionData &t, const ResponseConfig &cfg);

} // namespace qwire
