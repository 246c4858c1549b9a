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

#include "qwire/subband.hpp"

namespace qwire {

  /// Controls the radial quadrature of the trial-function integrals.
  ///
  /// The axial (wire-axis) integrals of the Gaussian envelope are done in
  /// closed form, including the Coulomb kernel:
  /// int exp(-2 a y^2) / sqrt(r^2 + y^2) dy = exp(a r^2) K_0(a r^2).
  struct QuadratureSpec {
    double radial_extent = 8.0;  ///< radial cutoff in units of r0 ...
    double gaussian_sigmas = 6.0; ///< ... or this many 1/sqrt(a), whichever is larger
    double rel_tolerance = 1e-10; ///< adaptive Gauss-Kronrod target
    double required      = 1e-4;  ///< max estimated relative error on the norm integral
  };

  enum class Coulomb { on, off };

  /// Donor on the wire axis, Gaussian-envelope trial on top of `base`:
  /// Psi = R(r) e^{i l theta} exp(-a (r^2 + y^2)).
  struct DonorState {
    SubbandState base;
    double a_opt          = 0.0; ///< nm^-2
    double energy         = 0.0; ///< meV, same origin as base.energy
    double binding_energy = 0.0; ///< meV
    bool at_boundary      = false; ///< minimum sat on the edge of the a-interval
  };

  /// Rayleigh quotient <Psi|H|Psi>/<Psi|Psi> for envelope parameter a (nm^-2).
  /// Kinetic energy is taken in gradient form with m*(r) inside the integral.
  /// Throws DomainError for a <= 0 and AccuracyError if the norm integral
  /// misses `quad.required`.
  double energy_expectation(double a, const SubbandState &state, const QuadratureSpec &quad = {},
                            Coulomb coulomb = Coulomb::on);

  /// Golden-section minimisation over log a in [1e-5, 10] nm^-2, started from
  /// the best point of a 40-point logarithmic scan.
  DonorState minimize_energy(const SubbandState &state, const QuadratureSpec &quad = {},
                             Coulomb coulomb = Coulomb::on);

  /// base.energy - donor.energy
  double binding_energy(const DonorState &donor);

  /// N such that the trial function N R e^{i l theta} e^{-a(r^2+y^2)} has unit norm.
  double trial_normalization(const SubbandState &state, double a, const QuadratureSpec &quad = {});

  inline constexpr double min_trial_parameter = 1e-5;
  inline constexpr double max_trial_parameter = 10.0;

} // namespace qwire
