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

#include "qwire/donor.hpp"

#include "numerics.hpp"
#include "qwire/errors.hpp"
#include "qwire/units.hpp"

#include <boost/math/special_functions/bessel.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

namespace qwire {

  namespace {

    constexpr int scan_points        = 40;
    constexpr double energy_spread   = 1e-4; // meV
    constexpr int max_golden_steps   = 200;

    double radial_cutoff(const SubbandState &s, double a, const QuadratureSpec &q) {
      return std::max(q.radial_extent * s.profile.core_radius, q.gaussian_sigmas / std::sqrt(a));
    }

    double axial_norm(double a) { return std::sqrt(std::numbers::pi / (2.0 * a)); }

    // exp(-x) K_0(x); the product underflows long before K_0 does.
    double damped_k0(double x) { return x > 700.0 ? 0.0 : std::exp(-x) * boost::math::cyl_bessel_k(0, x); }

    // int_0^rmax f(r) dr split at the interface kink.
    template <class F> double split_integral(F &&f, const SubbandState &s, double rmax, double tol) {
      const double r0 = s.profile.core_radius;
      return detail::integrate(f, 0.0, r0, tol).value + detail::integrate(f, r0, rmax, tol).value;
    }

    double norm_integral(const SubbandState &s, double a, const QuadratureSpec &q) {
      const double r0   = s.profile.core_radius;
      const double rmax = radial_cutoff(s, a, q);
      auto f = [&](double r) {
        const double R = radial_wavefunction(s, r);
        return R * R * std::exp(-2.0 * a * r * r) * r;
      };
      return detail::integrate_checked(f, 0.0, r0, q.rel_tolerance, q.required, "trial norm (core)") +
             detail::integrate_checked(f, r0, rmax, q.rel_tolerance, q.required, "trial norm (shell)");
    }

  } // namespace

  double trial_normalization(const SubbandState &state, double a, const QuadratureSpec &quad) {
    if (!(a > 0.0)) throw DomainError("trial parameter a must be positive");
    return 1.0 / std::sqrt(2.0 * std::numbers::pi * axial_norm(a) * norm_integral(state, a, quad));
  }

  double energy_expectation(double a, const SubbandState &s, const QuadratureSpec &q, Coulomb coulomb) {
    if (!(a > 0.0)) throw DomainError("trial parameter a must be positive");
    const auto &pc    = constants();
    const auto &well  = s.profile;
    const double l2   = static_cast<double>(s.l) * s.l;
    const double rmax = radial_cutoff(s, a, q);

    const double norm = norm_integral(s, a, q);

    // kinetic (radial + centrifugal + axial) and barrier potential
    auto kinetic_potential = [&](double r) {
      const double R  = radial_wavefunction(s, r);
      const double dR = radial_derivative(s, r) - 2.0 * a * r * R;
      const double centrifugal = l2 == 0.0 ? 0.0 : l2 * R * R / (r * r);
      const double kin = pc.hbar2_over_2m0 / well.mass_at(r) * (dR * dR + centrifugal + a * R * R);
      return (kin + well.potential_at(r) * R * R) * std::exp(-2.0 * a * r * r) * r;
    };
    double energy = split_integral(kinetic_potential, s, rmax, q.rel_tolerance) / norm;

    if (coulomb == Coulomb::on) {
      auto kernel = [&](double r) {
        const double R = radial_wavefunction(s, r);
        return R * R * damped_k0(a * r * r) * r;
      };
      const double binding = split_integral(kernel, s, rmax, q.rel_tolerance);
      energy -= pc.coulomb_factor / well.eps_well * binding / (axial_norm(a) * norm);
    }
    return energy;
  }

  DonorState minimize_energy(const SubbandState &state, const QuadratureSpec &quad, Coulomb coulomb) {
    const double lo = std::log(min_trial_parameter);
    const double hi = std::log(max_trial_parameter);
    auto energy_at  = [&](double log_a) { return energy_expectation(std::exp(log_a), state, quad, coulomb); };

    std::array<double, scan_points> grid{}, values{};
    for (int i = 0; i < scan_points; ++i) {
      grid[i]   = lo + (hi - lo) * i / (scan_points - 1);
      values[i] = energy_at(grid[i]);
    }
    const auto best = static_cast<int>(std::min_element(values.begin(), values.end()) - values.begin());

    // golden-section inside the neighbouring scan cells
    double a = grid[std::max(best - 1, 0)];
    double b = grid[std::min(best + 1, scan_points - 1)];
    double fa = values[std::max(best - 1, 0)];
    double fb = values[std::min(best + 1, scan_points - 1)];
    const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - invphi * (b - a), d = a + invphi * (b - a);
    double fc = energy_at(c), fd = energy_at(d);
    for (int it = 0; it < max_golden_steps; ++it) {
      const double fmin = std::min(fc, fd);
      if (std::max(fa, fb) - fmin <= energy_spread) break;
      if (fc < fd) {
        b = d, fb = fd;
        d = c, fd = fc;
        c = b - invphi * (b - a), fc = energy_at(c);
      } else {
        a = c, fa = fc;
        c = d, fc = fd;
        d = a + invphi * (b - a), fd = energy_at(d);
      }
    }

    // lowest point seen in the final bracket
    std::array<std::pair<double, double>, 5> candidates{
       {{fa, a}, {fb, b}, {fc, c}, {fd, d}, {values[best], grid[best]}}};
    const auto [e_min, log_a] = *std::min_element(candidates.begin(), candidates.end());

    DonorState out;
    out.base           = state;
    out.a_opt          = std::exp(log_a);
    out.energy         = e_min;
    out.binding_energy = state.energy - e_min;
    out.at_boundary    = best == 0 || best == scan_points - 1;
    return out;
  }

  double binding_energy(const DonorState &donor) { return donor.base.energy - donor.energy; }

} // namespace qwire
