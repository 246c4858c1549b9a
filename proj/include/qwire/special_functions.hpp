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

namespace qwire {

  /// A function value together with its derivative d/dx at the same point.
  struct BesselEval {
    double value;
    double derivative;
  };

  /// Largest |order| accepted by the kernels below.
  inline constexpr int max_bessel_order = 20;

  // Integer orders only. Negative orders are mapped through
  // J_{-n} = (-1)^n J_n, K_{-n} = K_n (and likewise for the spherical forms
  // via their cylindrical definitions), so callers may pass signed angular
  // momenta directly.

  /// J_n(x), x >= 0.
  BesselEval bessel_j(int order, double x);

  /// K_n(x), x > 0.
  BesselEval bessel_k_mod(int order, double x);

  /// j_n(x) = sqrt(pi/2x) J_{n+1/2}(x), x >= 0. Requires order >= 0.
  BesselEval spherical_bessel_j(int order, double x);

  /// k_n(x) normalised so that k_0(x) = exp(-x)/x, x > 0. Requires order >= 0.
  BesselEval spherical_k_mod(int order, double x);

} // namespace qwire
