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

#include "qwire/special_functions.hpp"

#include "qwire/errors.hpp"

#include <boost/math/special_functions/bessel.hpp>
#include <boost/math/special_functions/bessel_prime.hpp>

#include <cmath>
#include <string>

namespace qwire {

  namespace {

    void check_order(int order) {
      if (order > max_bessel_order || order < -max_bessel_order)
        throw UnsupportedOrder("Bessel order " + std::to_string(order) + " outside [-20, 20]");
    }

    void check_non_negative_order(int order) {
      check_order(order);
      if (order < 0) throw UnsupportedOrder("spherical Bessel order must be non-negative");
    }

    // Upward recurrence for k_n is stable (k_n grows with n).
    void spherical_k_pair(int order, double x, double &kn, double &kn_minus) {
      const double e = std::exp(-x);
      double km  = e / x;                       // k_0
      double k   = e * (1.0 + x) / (x * x);     // k_1
      if (order == 0) {
        kn       = km;
        kn_minus = k; // k_1, since k_0' = -k_1
        return;
      }
      for (int n = 1; n < order; ++n) {
        const double next = km + (2.0 * n + 1.0) / x * k;
        km                = k;
        k                 = next;
      }
      kn       = k;
      kn_minus = km;
    }

  } // namespace

  BesselEval bessel_j(int order, double x) {
    check_order(order);
    if (!(x >= 0.0)) throw DomainError("bessel_j requires x >= 0");
    const int n       = order < 0 ? -order : order;
    const double sign = (order < 0 && (n % 2) == 1) ? -1.0 : 1.0;
    const double v    = boost::math::cyl_bessel_j(n, x);
    const double d    = boost::math::cyl_bessel_j_prime(n, x);
    return {sign * v, sign * d};
  }

  BesselEval bessel_k_mod(int order, double x) {
    check_order(order);
    if (!(x > 0.0)) throw DomainError("bessel_k_mod requires x > 0");
    const int n = order < 0 ? -order : order;
    return {boost::math::cyl_bessel_k(n, x), boost::math::cyl_bessel_k_prime(n, x)};
  }

  BesselEval spherical_bessel_j(int order, double x) {
    check_non_negative_order(order);
    if (!(x >= 0.0)) throw DomainError("spherical_bessel_j requires x >= 0");
    const auto n = static_cast<unsigned>(order);
    if (x == 0.0) return {order == 0 ? 1.0 : 0.0, order == 1 ? 1.0 / 3.0 : 0.0};
    return {boost::math::sph_bessel(n, x), boost::math::sph_bessel_prime(n, x)};
  }

  BesselEval spherical_k_mod(int order, double x) {
    check_non_negative_order(order);
    if (!(x > 0.0)) throw DomainError("spherical_k_mod requires x > 0");
    double kn = 0.0, km = 0.0;
    spherical_k_pair(order, x, kn, km);
    if (order == 0) return {kn, -km};
    return {kn, -km - (order + 1.0) / x * kn};
  }

} // namespace qwire
