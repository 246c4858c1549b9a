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

#include "qwire/materials.hpp"
#include "qwire/qd.hpp"
#include "qwire/subband.hpp"
#include "qwire/units.hpp"

#include <cmath>

namespace testing {

  inline qwire::WellProfile wire(double radius, double scale_barrier = 1.0) {
    qwire::Geometry g;
    g.core_radius = radius;
    auto w        = qwire::resolve(g);
    w.barrier_height *= scale_barrier;
    return w;
  }

  inline qwire::WellProfile dot(double radius, double scale_barrier = 1.0) {
    qwire::Geometry g;
    g.core_radius = radius;
    g.shape       = qwire::Shape::sphere;
    auto w        = qwire::resolve(g);
    w.barrier_height *= scale_barrier;
    return w;
  }

  inline qwire::SubbandState level(double radius, int l, int n = 1) {
    return qwire::find_levels(l, wire(radius), n).at(static_cast<std::size_t>(n - 1));
  }

  inline qwire::QdState dot_level(double radius, int l, int n = 1) {
    return qwire::qd_find_levels(l, dot(radius), n).at(static_cast<std::size_t>(n - 1));
  }

  inline double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

} // namespace testing
