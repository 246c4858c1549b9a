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

#include "qwire/materials.hpp"

#include <vector>

namespace qwire {

  /// Interface condition joining the core and shell radial solutions.
  enum class Matching {
    mass_weighted, ///< R and (1/m*) dR/dr continuous (BenDaniel-Duke)
    plain          ///< R and dR/dr continuous
  };

  /// Bound state of the cylindrical finite well without impurity.
  ///
  /// R(r) = interior_amp * J_l(kappa_w r) for r < r0 and
  /// exterior_amp * K_l(kappa_b r) otherwise, normalised so that
  /// 2 pi * int_0^inf R^2 r dr = 1 (the angular factor e^{i l theta} is
  /// left unnormalised). Energy is measured from the core band edge.
  struct SubbandState {
    int n = 0;
    int l = 0;
    double energy       = 0.0; ///< meV
    double kappa_w      = 0.0; ///< nm^-1
    double kappa_b      = 0.0; ///< nm^-1
    double interior_amp = 0.0;
    double exterior_amp = 0.0;
    WellProfile profile{};
    Matching matching = Matching::mass_weighted;
  };

  struct MatchingResidual {
    double value;
    bool pole; ///< J_l(kappa_w r0) vanished; value is meaningless
  };

  /// (kappa_w/m_w) J'/J - (kappa_b/m_b) K'/K at r0; zero at bound-state energies.
  /// Throws DomainError outside 0 < energy < barrier height.
  MatchingResidual matching_residual(double energy, int l, const WellProfile &well,
                                     Matching matching = Matching::mass_weighted);

  /// All bound levels with angular number l, lowest first, at most max_n of them.
  ///
  /// The scan uses the residual multiplied by J_l K_l, which has the same
  /// roots but no poles, on a grid uniform in kappa_w r0 (at least 2000
  /// points, phase step <= 0.02); brackets are refined to 1e-7 meV. +l and -l
  /// give the same levels.
  std::vector<SubbandState> find_levels(int l, const WellProfile &well, int max_n,
                                        Matching matching = Matching::mass_weighted);

  /// Builds the normalised state for a known root. Used by find_levels.
  SubbandState make_subband_state(int n, int l, double energy, const WellProfile &well, Matching matching);

  double radial_wavefunction(const SubbandState &state, double r);
  double radial_derivative(const SubbandState &state, double r);

  /// 2 pi * int R^2 r dr in closed form; 1 for states from find_levels.
  double radial_norm(const SubbandState &state);

} // namespace qwire
