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

#include "qwire/subband.hpp"

#include "numerics.hpp"
#include "qwire/errors.hpp"
#include "qwire/special_functions.hpp"
#include "qwire/units.hpp"

#include <cmath>
#include <numbers>

namespace qwire {

  namespace {

    constexpr double root_tol_mev  = 1e-7;

    struct Wavevectors {
      double inside;
      double outside;
    };

    Wavevectors wavevectors(double energy, const WellProfile &w) {
      const double c = constants().hbar2_over_2m0;
      return {std::sqrt(energy * w.well_mass / c), std::sqrt((w.barrier_height - energy) * w.barrier_mass / c)};
    }

    struct Weights {
      double inside;
      double outside;
    };

    Weights weights(const WellProfile &w, Matching m) {
      if (m == Matching::plain) return {1.0, 1.0};
      return {1.0 / w.well_mass, 1.0 / w.barrier_mass};
    }

    void check_energy(double energy, const WellProfile &w) {
      if (!(energy > 0.0 && energy < w.barrier_height))
        throw DomainError("energy " + std::to_string(energy) + " meV outside (0, U_c)");
    }

    // int_0^x0 x J_l(x)^2 dx
    double interior_moment(int l, double x0) {
      const auto j = bessel_j(l, x0);
      return 0.5 * x0 * x0 * (j.derivative * j.derivative + (1.0 - l * l / (x0 * x0)) * j.value * j.value);
    }

    // int_y0^inf y K_l(y)^2 dy
    double exterior_moment(int l, double y0) {
      const auto k = bessel_k_mod(l, y0);
      return 0.5 * y0 * y0 * (k.derivative * k.derivative - (1.0 + l * l / (y0 * y0)) * k.value * k.value);
    }

  } // namespace

  MatchingResidual matching_residual(double energy, int l, const WellProfile &well, Matching matching) {
    check_energy(energy, well);
    const auto kv = wavevectors(energy, well);
    const auto wt = weights(well, matching);
    const auto j  = bessel_j(l, kv.inside * well.core_radius);
    const auto k  = bessel_k_mod(l, kv.outside * well.core_radius);
    const double outside = wt.outside * kv.outside * k.derivative / k.value;
    if (std::abs(j.value) <= 1e-14 * (std::abs(j.derivative) + 1e-300)) return {0.0, true};
    return {wt.inside * kv.inside * j.derivative / j.value - outside, false};
  }

  SubbandState make_subband_state(int n, int l, double energy, const WellProfile &well, Matching matching) {
    check_energy(energy, well);
    const auto kv = wavevectors(energy, well);
    const double x0 = kv.inside * well.core_radius;
    const double y0 = kv.outside * well.core_radius;
    const double ratio = bessel_j(l, x0).value / bessel_k_mod(l, y0).value;

    const double inside  = interior_moment(l, x0) / (kv.inside * kv.inside);
    const double outside = exterior_moment(l, y0) / (kv.outside * kv.outside);
    const double amp     = 1.0 / std::sqrt(2.0 * std::numbers::pi * (inside + ratio * ratio * outside));

    SubbandState s;
    s.n            = n;
    s.l            = l;
    s.energy       = energy;
    s.kappa_w      = kv.inside;
    s.kappa_b      = kv.outside;
    s.interior_amp = amp;
    s.exterior_amp = amp * ratio;
    s.profile      = well;
    s.matching     = matching;
    return s;
  }

  std::vector<SubbandState> find_levels(int l, const WellProfile &well, int max_n, Matching matching) {
    if (max_n < 1) throw DomainError("find_levels requires max_n >= 1");
    if (!(well.barrier_height > 0.0)) throw DomainError("barrier height must be positive");
    const auto wt     = weights(well, matching);

    auto product_form = [&](double e) {
      const auto kv = wavevectors(e, well);
      const auto j  = bessel_j(l, kv.inside * well.core_radius);
      const auto k  = bessel_k_mod(l, kv.outside * well.core_radius);
      return wt.inside * kv.inside * j.derivative * k.value - wt.outside * kv.outside * k.derivative * j.value;
    };

    const auto grid  = detail::bound_state_grid(well.barrier_height, well.well_mass, well.core_radius,
                                                      constants().hbar2_over_2m0);
    const auto roots = detail::scan_roots(product_form, grid, root_tol_mev, static_cast<std::size_t>(max_n));
    std::vector<SubbandState> out;
    out.reserve(roots.size());
    for (std::size_t i = 0; i < roots.size(); ++i)
      out.push_back(make_subband_state(static_cast<int>(i) + 1, l, roots[i], well, matching));
    return out;
  }

  double radial_wavefunction(const SubbandState &s, double r) {
    if (r < s.profile.core_radius) return s.interior_amp * bessel_j(s.l, s.kappa_w * r).value;
    return s.exterior_amp * bessel_k_mod(s.l, s.kappa_b * r).value;
  }

  double radial_derivative(const SubbandState &s, double r) {
    if (r < s.profile.core_radius) return s.interior_amp * s.kappa_w * bessel_j(s.l, s.kappa_w * r).derivative;
    return s.exterior_amp * s.kappa_b * bessel_k_mod(s.l, s.kappa_b * r).derivative;
  }

  double radial_norm(const SubbandState &s) {
    const double r0 = s.profile.core_radius;
    const double a  = s.interior_amp * s.interior_amp * interior_moment(s.l, s.kappa_w * r0) / (s.kappa_w * s.kappa_w);
    const double b  = s.exterior_amp * s.exterior_amp * exterior_moment(s.l, s.kappa_b * r0) / (s.kappa_b * s.kappa_b);
    return 2.0 * std::numbers::pi * (a + b);
  }

} // namespace qwire
