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

// Ground state of the on-axis donor problem for l = 0 on a cell-centred
// (r, y) grid: -c div((1/m) grad) + V(r) - q/(eps sqrt(r^2 + y^2)), even in y.
// The weighted operator is symmetrised and its lowest eigenvalue found by
// bisection on the inertia of sparse LDL^T factorisations. The variational
// energy must lie above this value up to the O(h^2) discretisation error.

#include <Eigen/Sparse>
#include <Eigen/SparseCholesky>

#include <cmath>
#include <vector>

namespace oracle {

  struct DonorGrid {
    double radius, barrier, well_mass, barrier_mass, c, coulomb_over_eps;
    double h      = 0.1;
    double r_max  = 20.0;
    double y_max  = 30.0;
  };

  inline double donor_ground_state(const DonorGrid &g) {
    const int nr = static_cast<int>(std::round(g.r_max / g.h));
    const int ny = static_cast<int>(std::round(g.y_max / g.h));
    const double h = g.h;
    auto idx  = [&](int i, int j) { return i * ny + j; };
    auto mass = [&](double r) { return r < g.radius ? g.well_mass : g.barrier_mass; };

    std::vector<Eigen::Triplet<double>> trip;
    trip.reserve(static_cast<std::size_t>(nr) * ny * 5);
    std::vector<double> w(static_cast<std::size_t>(nr) * ny);
    for (int i = 0; i < nr; ++i)
      for (int j = 0; j < ny; ++j) w[idx(i, j)] = (i + 0.5) * h;

    for (int i = 0; i < nr; ++i) {
      const double r  = (i + 0.5) * h;
      const double m  = mass(r);
      const double pot = r < g.radius ? 0.0 : g.barrier;
      // radial face conductances (times face radius), series combination across the interface
      const double right = i + 1 < nr ? g.c * (i + 1) * h / (0.5 * h * m + 0.5 * h * mass(r + h)) / h : 0.0;
      const double left  = i > 0 ? g.c * i * h / (0.5 * h * m + 0.5 * h * mass(r - h)) / h : 0.0;
      const double edge  = i + 1 == nr ? g.c * nr * h / (h * m) / h * 2.0 : 0.0; // Dirichlet
      for (int j = 0; j < ny; ++j) {
        const double y   = (j + 0.5) * h;
        const double ax  = g.c * r / m / (h * h);
        const double up  = j + 1 < ny ? ax : 2.0 * ax; // Dirichlet at y_max
        const double dn  = j > 0 ? ax : 0.0;           // mirror symmetry at y = 0
        const double diag = left + right + edge + up + dn + r * (pot - g.coulomb_over_eps / std::sqrt(r * r + y * y));
        const int k = idx(i, j);
        trip.emplace_back(k, k, diag / w[k]);
        if (i + 1 < nr) trip.emplace_back(k, idx(i + 1, j), -right / std::sqrt(w[k] * w[idx(i + 1, j)]));
        if (i > 0) trip.emplace_back(k, idx(i - 1, j), -left / std::sqrt(w[k] * w[idx(i - 1, j)]));
        if (j + 1 < ny) trip.emplace_back(k, idx(i, j + 1), -ax / std::sqrt(w[k] * w[idx(i, j + 1)]));
        if (j > 0) trip.emplace_back(k, idx(i, j - 1), -ax / std::sqrt(w[k] * w[idx(i, j - 1)]));
      }
    }
    const int n = nr * ny;
    Eigen::SparseMatrix<double> a(n, n);
    a.setFromTriplets(trip.begin(), trip.end());

    // Sylvester inertia: the number of negative pivots of A - x I counts the
    // eigenvalues below x. Bisect on that count.
    Eigen::SparseMatrix<double> eye(n, n);
    eye.setIdentity();
    Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> solver;
    solver.analyzePattern(a);
    auto below = [&](double x) {
      Eigen::SparseMatrix<double> shifted = a - x * eye;
      solver.factorize(shifted);
      return static_cast<int>((solver.vectorD().array() < 0.0).count());
    };
    double lo = -g.coulomb_over_eps / (0.5 * h) - 1.0, hi = g.barrier;
    while (hi - lo > 1e-6) {
      const double mid = 0.5 * (lo + hi);
      (below(mid) >= 1 ? hi : lo) = mid;
    }
    const double lambda = 0.5 * (lo + hi);
    return lambda;
  }

} // namespace oracle
