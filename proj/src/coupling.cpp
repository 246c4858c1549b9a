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

#include "qwire/coupling.hpp"

#include "numerics.hpp"
#include "qwire/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace qwire {

  namespace {

    constexpr double norm_tolerance = 1e-6;
    constexpr double tail_lengths   = 40.0;

    void require_normalized(const SubbandState &s, const char *which) {
      const double norm = radial_norm(s);
      if (std::abs(norm - 1.0) > norm_tolerance)
        throw ContractViolation(std::string(which) + " state is not normalised (norm " + std::to_string(norm) + ")");
    }

    // Angular factor int_0^{2pi} e^{-i l_i t} cos(t) e^{i l_f t} dt.
    double angular_factor(int li, int lf) { return selection_allowed(li, lf) ? std::numbers::pi : 0.0; }

    // int R_i R_f exp(-w r^2) r^2 dr over [0, inf)
    double radial_overlap(const SubbandState &i, const SubbandState &f, double w) {
      const double r0   = i.profile.core_radius;
      const double tail = r0 + tail_lengths / std::min(i.kappa_b, f.kappa_b);
      auto g = [&](double r) { return radial_wavefunction(i, r) * radial_wavefunction(f, r) * std::exp(-w * r * r) * r * r; };
      return detail::integrate(g, 0.0, r0, 1e-12).value + detail::integrate(g, r0, tail, 1e-12).value;
    }

  } // namespace

  bool selection_allowed(int l_initial, int l_final) noexcept { return std::abs(l_final - l_initial) == 1; }

  double dipole_element(const SubbandState &i, const SubbandState &f, Polarization) {
    require_normalized(i, "initial");
    require_normalized(f, "final");
    if (!selection_allowed(i.l, f.l)) return 0.0;
    return std::abs(angular_factor(i.l, f.l) * radial_overlap(i, f, 0.0));
  }

  double dipole_element(const DonorState &i, const DonorState &f, Polarization) {
    if (!selection_allowed(i.base.l, f.base.l)) return 0.0;
    const double w      = i.a_opt + f.a_opt;
    const double axial  = std::sqrt(std::numbers::pi / w);
    const double ni     = trial_normalization(i.base, i.a_opt);
    const double nf     = trial_normalization(f.base, f.a_opt);
    return std::abs(ni * nf * angular_factor(i.base.l, f.base.l) * radial_overlap(i.base, f.base, w) * axial);
  }

  double diagonal_dipole_difference(const SubbandState &i, const SubbandState &f) {
    // <l|cos|l> = 0 for both diagonal elements
    return angular_factor(i.l, i.l) - angular_factor(f.l, f.l);
  }

  double diagonal_dipole_difference(const DonorState &i, const DonorState &f) {
    return angular_factor(i.base.l, i.base.l) - angular_factor(f.base.l, f.base.l);
  }

  TransitionData make_transition(const SubbandState &i, const SubbandState &f) {
    return {{i.n, i.l, i.energy}, {f.n, f.l, f.energy}, dipole_element(i, f), f.energy - i.energy,
            diagonal_dipole_difference(i, f)};
  }

  TransitionData make_transition(const DonorState &i, const DonorState &f) {
    return {{i.base.n, i.base.l, i.energy}, {f.base.n, f.base.l, f.energy}, dipole_element(i, f),
            f.energy - i.energy, diagonal_dipole_difference(i, f)};
  }

  TransitionData make_transition(const QdState &i, const QdState &f) {
    return {{i.n, i.l, i.energy}, {f.n, f.l, f.energy}, qd_dipole(i, f), f.energy - i.energy, 0.0};
  }

} // namespace qwire
