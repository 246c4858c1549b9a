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

#include "qwire/qd.hpp"

#include "numerics.hpp"
#include "qwire/errors.hpp"
#include "qwire/special_functions.hpp"
#include "qwire/units.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace qwire {

  namespace {

    constexpr double root_tol_mev = 1e-7;
    constexpr double tail_lengths = 40.0; // exterior integrals stop at r0 + 40/kappa_b

    double kappa_inside(double e, const WellProfile &w) {
      return std::sqrt(e * w.well_mass / constants().hbar2_over_2m0);
    }
    double kappa_outside(double e, const WellProfile &w) {
      return std::sqrt((w.barrier_height - e) * w.barrier_mass / constants().hbar2_over_2m0);
    }

    double radial_moment(const QdState &a, const QdState &b, int power) {
      const double r0 = a.profile.core_radius;
      auto f = [&](double r) { return qd_radial_wavefunction(a, r) * qd_radial_wavefunction(b, r) * std::pow(r, power); };
      const double tail = r0 + tail_lengths / std::min(a.kappa_b, b.kappa_b);
      return detail::integrate(f, 0.0, r0, 1e-12).value + detail::integrate(f, r0, tail, 1e-12).value;
    }

    QdState make_state(int n, int l, double e, const WellProfile &w, Matching m) {
      QdState s;
      s.n        = n;
      s.l        = l;
      s.energy   = e;
      s.kappa_w  = kappa_inside(e, w);
      s.kappa_b  = kappa_outside(e, w);
      s.profile  = w;
      s.matching = m;
      const double ratio =
         spherical_bessel_j(l, s.kappa_w * w.core_radius).value / spherical_k_mod(l, s.kappa_b * w.core_radius).value;
      s.interior_amp = 1.0;
      s.exterior_amp = ratio;
      const double norm = qd_radial_norm(s);
      s.interior_amp /= std::sqrt(norm);
      s.exterior_amp /= std::sqrt(norm);
      return s;
    }

  } // namespace

  std::vector<QdState> qd_find_levels(int l, const WellProfile &well, int max_n, Matching matching) {
    if (max_n < 1) throw DomainError("qd_find_levels requires max_n >= 1");
    if (l < 0) throw DomainError("spherical angular momentum must be non-negative");
    const double r0   = well.core_radius;
    const double wi   = matching == Matching::plain ? 1.0 : 1.0 / well.well_mass;
    const double wo   = matching == Matching::plain ? 1.0 : 1.0 / well.barrier_mass;

    auto product_form = [&](double e) {
      const double ki = kappa_inside(e, well), ko = kappa_outside(e, well);
      const auto j = spherical_bessel_j(l, ki * r0);
      const auto k = spherical_k_mod(l, ko * r0);
      return wi * ki * j.derivative * k.value - wo * ko * k.derivative * j.value;
    };

    const auto grid  = detail::bound_state_grid(well.barrier_height, well.well_mass, r0, constants().hbar2_over_2m0);
    const auto roots = detail::scan_roots(product_form, grid, root_tol_mev, static_cast<std::size_t>(max_n));
    std::vector<QdState> out;
    for (std::size_t i = 0; i < roots.size(); ++i)
      out.push_back(make_state(static_cast<int>(i) + 1, l, roots[i], well, matching));
    return out;
  }

  double qd_radial_wavefunction(const QdState &s, double r) {
    if (r < s.profile.core_radius) return s.interior_amp * spherical_bessel_j(s.l, s.kappa_w * r).value;
    return s.exterior_amp * spherical_k_mod(s.l, s.kappa_b * r).value;
  }

  double qd_radial_norm(const QdState &s) { return 4.0 * std::numbers::pi * radial_moment(s, s, 2); }

  double qd_dipole(const QdState &i, const QdState &f) {
    if (std::abs(i.l - f.l) != 1) return 0.0;
    const int lo = std::min(i.l, f.l), hi = std::max(i.l, f.l);
    const double angular = hi / std::sqrt((2.0 * lo + 1.0) * (2.0 * hi + 1.0));
    return std::abs(4.0 * std::numbers::pi * radial_moment(i, f, 3) * angular);
  }

} // namespace qwire
