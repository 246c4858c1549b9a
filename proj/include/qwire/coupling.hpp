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

#include "qwire/donor.hpp"
#include "qwire/qd.hpp"
#include "qwire/subband.hpp"

namespace qwire {

  /// In-plane polarisation; light polarised along the wire axis is not absorbed.
  enum class Polarization { x, z };

  struct TransitionLevel {
    int n       = 0;
    int l       = 0;
    double energy = 0.0; ///< meV
  };

  /// Everything the response and spectra modules need about one i -> f line.
  struct TransitionData {
    TransitionLevel initial;
    TransitionLevel final_level;
    double dipole_moment = 0.0; ///< |M_12|, e*nm
    double energy_gap    = 0.0; ///< E_2 - E_1, meV
    double delta_diag    = 0.0; ///< M_11 - M_22, e*nm
  };

  /// |l_f - l_i| == 1
  bool selection_allowed(int l_initial, int l_final) noexcept;

  /// |<i| r cos(theta) |f>| in e*nm. The angular integral of
  /// e^{-i l_i theta} cos(theta) e^{i l_f theta} is pi for |dl| = 1 and 0
  /// otherwise; z = r sin(theta) differs only by a phase. Throws
  /// ContractViolation if either state is not normalised to 1e-6.
  double dipole_element(const SubbandState &initial, const SubbandState &final_state,
                        Polarization pol = Polarization::x);

  /// Same for the donor trial functions (each normalised with its own a).
  double dipole_element(const DonorState &initial, const DonorState &final_state,
                        Polarization pol = Polarization::x);

  /// M_11 - M_22. Exactly zero for l eigenstates, which is every state this
  /// library produces; the angular factor <l|cos|l> vanishes.
  double diagonal_dipole_difference(const SubbandState &initial, const SubbandState &final_state);
  double diagonal_dipole_difference(const DonorState &initial, const DonorState &final_state);

  TransitionData make_transition(const SubbandState &initial, const SubbandState &final_state);
  TransitionData make_transition(const DonorState &initial, const DonorState &final_state);
  TransitionData make_transition(const QdState &initial, const QdState &final_state);

} // namespace qwire
