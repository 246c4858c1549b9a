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
#include "qwire/subband.hpp"

#include <vector>

namespace qwire {

  /// Bound state of the spherical core/shell finite well (the quantum-dot
  /// reference). R(r) = interior_amp j_l(kappa_w r) inside the core and
  /// exterior_amp k_l(kappa_b r) outside, with 4 pi int R^2 r^2 dr = 1.
  struct QdState {
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

  /// Bound levels with angular momentum l >= 0, lowest first. Same scan and
  /// refinement policy as find_levels; the interface condition is applied
  /// to R itself, i.e. (1/m) R'/R continuous.
  std::vector<QdState> qd_find_levels(int l, const WellProfile &well, int max_n,
                                      Matching matching = Matching::mass_weighted);

  double qd_radial_wavefunction(const QdState &state, double r);

  /// 4 pi int R^2 r^2 dr by quadrature.
  double qd_radial_norm(const QdState &state);

  /// |<i|z|f>| for m = 0 states, in e*nm. The angular factor is
  /// l_> / sqrt((2 l_< + 1)(2 l_> + 1)); for 0 -> 1 it equals the
  /// m-summed x-polarised strength 1/sqrt(3). Zero unless |l_i - l_f| = 1.
  double qd_dipole(const QdState &initial, const QdState &final_state);

} // namespace qwire
