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

// Extended-precision reference Bessel functions, written from the defining
// series and integral representations rather than library routines.
//   J_n, j_n : power series in 50-digit binary floats
//   K_n      : quad-precision trapezoid rule on int_0^inf exp(-x cosh t) cosh(n t) dt
//              for K_0, K_1, then the stable upward recurrence
//   k_n      : finite closed form e^{-x}/x sum_k (n+k)!/(k!(n-k)!) (2x)^{-k}
// Derivatives follow from the standard three-term identities.

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/float128.hpp>

#include <array>
#include <utility>
#include <vector>

#include <cmath>
#include <cstdlib>

namespace oracle {

  using mp = boost::multiprecision::cpp_bin_float_50;
  using qp = boost::multiprecision::float128;

  struct Pair {
    double value;
    double derivative;
  };

  // J_n(x) for n >= 0
  inline mp cyl_j_series(int n, const mp &x) {
    const mp q = -x * x / 4;
    mp term    = 1;
    for (int k = 1; k <= n; ++k) term *= x / 2 / k;
    mp sum = term;
    for (int k = 1; k < 400; ++k) {
      term *= q / (k * mp(n + k));
      sum += term;
      if (abs(term) < abs(sum) * mp("1e-45") && k > 5) break;
    }
    return sum;
  }

  inline mp cyl_j_signed(int n, const mp &x) {
    const mp v = cyl_j_series(std::abs(n), x);
    return (n < 0 && (n % 2 != 0)) ? mp(-v) : v;
  }

  inline Pair bessel_j(int n, double xd) {
    const mp x = xd;
    const mp v = cyl_j_signed(n, x);
    const mp d = (cyl_j_signed(n - 1, x) - cyl_j_signed(n + 1, x)) / 2;
    return {static_cast<double>(v), static_cast<double>(d)};
  }

  // K_0 and K_1 by the trapezoid rule in quad precision
  inline std::pair<qp, qp> cyl_k01(const qp &x) {
    // analytic in the strip |Im t| < pi/2, so the trapezoid error falls like exp(-2 pi d / h)
    const qp h = qp(1) / 16;
    qp s0 = exp(-x) / 2, s1 = s0;
    for (long i = 1;; ++i) {
      const qp t = h * i;
      const qp e = exp(-x * cosh(t));
      s0 += e;
      s1 += e * cosh(t);
      if (e * cosh(t) < s1 * qp(1e-36) && x * cosh(t) > t) break;
    }
    return {s0 * h, s1 * h};
  }

  // K_{n-1}, K_n, K_{n+1} for n >= 0 by upward recurrence
  inline std::array<qp, 3> cyl_k_triple(int n, const qp &x) {
    auto [k0, k1] = cyl_k01(x);
    std::vector<qp> k{k0, k1};
    for (int m = 1; m <= n; ++m) k.push_back(k[m - 1] + 2 * m / x * k[m]);
    return {n == 0 ? k[1] : k[n - 1], k[n], k[n + 1]};
  }

  inline Pair bessel_k(int n, double xd) {
    const auto k = cyl_k_triple(std::abs(n), qp(xd));
    return {static_cast<double>(k[1]), static_cast<double>(-(k[0] + k[2]) / 2)};
  }

  // j_n(x), n >= 0
  inline mp sph_j_series(int n, const mp &x) {
    mp term = 1;
    for (int k = 1; k <= n; ++k) term *= x / (2 * k + 1);
    const mp q = -x * x / 2;
    mp sum     = term;
    for (int k = 1; k < 400; ++k) {
      term *= q / (k * mp(2 * n + 2 * k + 1));
      sum += term;
      if (abs(term) < abs(sum) * mp("1e-45") && k > 5) break;
    }
    return sum;
  }

  inline Pair spherical_j(int n, double xd) {
    const mp x = xd;
    const mp v = sph_j_series(n, x);
    const mp d = n == 0 ? mp(-sph_j_series(1, x)) : mp(sph_j_series(n - 1, x) - (n + 1) / x * v);
    return {static_cast<double>(v), static_cast<double>(d)};
  }

  // k_n(x) with k_0 = e^{-x}/x
  inline qp sph_k_closed(int n, const qp &x) {
    qp sum = 0, coeff = 1; // (n+k)!/(k!(n-k)!)
    qp inv = 1;
    for (int k = 0; k <= n; ++k) {
      if (k > 0) {
        coeff *= qp(n + k) * (n - k + 1) / k;
        inv /= 2 * x;
      }
      sum += coeff * inv;
    }
    return exp(-x) / x * sum;
  }

  inline Pair spherical_k(int n, double xd) {
    const qp x = xd;
    const qp v = sph_k_closed(n, x);
    const qp d = n == 0 ? qp(-sph_k_closed(1, x)) : qp(-sph_k_closed(n - 1, x) - (n + 1) / x * v);
    return {static_cast<double>(v), static_cast<double>(d)};
  }

} // namespace oracle
