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

// Brute-force <H> of the trial function R(r) e^{-a(r^2 + y^2)} e^{i l theta}
// on a dense midpoint grid in (r, y). Uses the <cmath> Bessel functions, the
// plain 1/sqrt(r^2 + y^2) Coulomb kernel and analytic gradients; nothing is
// shared with the library's closed-form axial integrals.

#include <cmath>

namespace oracle {

  struct TrialProblem {
    int l;
    double energy;  // subband energy of R, meV
    double radius, barrier, well_mass, barrier_mass, c;
    double coulomb_over_eps; // 0 switches the donor off
    double a;                // nm^-2
    int nr = 600;
    int ny = 1200;
  };

  inline double tensor_grid_expectation(const TrialProblem &p) {
    const double kw = std::sqrt(p.energy * p.well_mass / p.c);
    const double kb = std::sqrt((p.barrier - p.energy) * p.barrier_mass / p.c);
    const double x0 = kw * p.radius, y0 = kb * p.radius;
    const unsigned n = static_cast<unsigned>(std::abs(p.l));
    const double ratio = std::cyl_bessel_j(n, x0) / std::cyl_bessel_k(n, y0);
    auto jp = [&](double x) {
      return n == 0 ? -std::cyl_bessel_j(1u, x) : 0.5 * (std::cyl_bessel_j(n - 1, x) - std::cyl_bessel_j(n + 1, x));
    };
    auto kp = [&](double x) {
      return n == 0 ? -std::cyl_bessel_k(1u, x) : -0.5 * (std::cyl_bessel_k(n - 1, x) + std::cyl_bessel_k(n + 1, x));
    };

    // r0 on a cell face; extent 8 r0
    const double hr = 8.0 * p.radius / p.nr;
    const double y_max = std::sqrt(40.0 / p.a);
    const double hy    = y_max / p.ny;

    double norm = 0.0, energy = 0.0;
    for (int i = 0; i < p.nr; ++i) {
      const double r = (i + 0.5) * hr;
      const bool in  = r < p.radius;
      const double R  = in ? std::cyl_bessel_j(n, kw * r) : ratio * std::cyl_bessel_k(n, kb * r);
      const double dR = in ? kw * jp(kw * r) : ratio * kb * kp(kb * r);
      const double m  = in ? p.well_mass : p.barrier_mass;
      const double V  = in ? 0.0 : p.barrier;
      const double radial_grad = dR - 2.0 * p.a * r * R;
      for (int j = 0; j < p.ny; ++j) {
        const double y   = (j + 0.5) * hy;
        const double g   = std::exp(-2.0 * p.a * (r * r + y * y));
        const double psi2 = R * R * g;
        const double grad2 = (radial_grad * radial_grad + p.l * p.l * R * R / (r * r) +
                              4.0 * p.a * p.a * y * y * R * R) * g;
        norm += psi2 * r;
        energy += (p.c / m * grad2 + (V - p.coulomb_over_eps / std::sqrt(r * r + y * y)) * psi2) * r;
      }
    }
    return energy / norm;
  }

} // namespace oracle
