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

// Internal numerical helpers shared by the solvers. Not installed.

#include "qwire/errors.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/tools/roots.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

namespace qwire::detail {

  struct Integral {
    double value;
    double error;
  };

  /// Adaptive 31-point Gauss-Kronrod on [a, b]. Endpoints are never sampled,
  /// so integrable endpoint singularities are tolerated.
  template <class F> Integral integrate(F &&f, double a, double b, double rel_tol = 1e-12, unsigned max_depth = 18) {
    if (!(b > a)) return {0.0, 0.0};
    double error = 0.0;
    const double v =
       boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, a, b, max_depth, rel_tol, &error);
    return {v, error};
  }

  /// As integrate(), but throws AccuracyError when the estimate misses `required`.
  template <class F>
  double integrate_checked(F &&f, double a, double b, double rel_tol, double required, const char *what) {
    const auto r = integrate(f, a, b, rel_tol);
    const double scale = std::max(std::abs(r.value), 1e-300);
    if (!std::isfinite(r.value) || r.error > required * scale)
      throw AccuracyError(std::string(what) + ": quadrature missed tolerance (estimate " +
                             std::to_string(r.error / scale) + ")",
                          r.error / scale);
    return r.value;
  }

  /// Energies E_k = U (k/N)^2, k = 1..N-1: uniform in the interior wavevector,
  /// so the spacing in kappa_w r0 stays below `phase_step` however deep the well.
  inline std::vector<double> bound_state_grid(double barrier, double well_mass, double radius, double c,
                                              int min_steps = 2000, double phase_step = 0.02) {
    const double x_max = std::sqrt(barrier * well_mass / c) * radius;
    const int n        = std::max(min_steps, static_cast<int>(std::ceil(x_max / phase_step)));
    std::vector<double> grid;
    grid.reserve(static_cast<std::size_t>(n));
    for (int k = 1; k < n; ++k) {
      const double t = static_cast<double>(k) / n;
      grid.push_back(barrier * t * t);
    }
    return grid;
  }

  /// Roots of a continuous function sampled on an increasing grid; each
  /// sign change is refined with TOMS 748 to a bracket of width <= tol.
  template <class F>
  std::vector<double> scan_roots(F &&g, const std::vector<double> &grid, double tol, std::size_t max_roots) {
    std::vector<double> roots;
    if (grid.empty()) return roots;
    double x0 = grid.front();
    double g0 = g(x0);
    for (std::size_t k = 1; k < grid.size() && roots.size() < max_roots; ++k) {
      const double x1 = grid[k];
      const double g1 = g(x1);
      if (g0 == 0.0) {
        roots.push_back(x0);
      } else if (g0 * g1 < 0.0) {
        std::uintmax_t iterations = 200;
        auto stop                 = [tol](double a, double b) { return std::abs(b - a) <= tol; };
        const auto [a, b]         = boost::math::tools::toms748_solve(g, x0, x1, g0, g1, stop, iterations);
        roots.push_back(0.5 * (a + b));
      }
      x0 = x1;
      g0 = g1;
    }
    return roots;
  }

} // namespace qwire::detail
