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

#include "fd_radial.hpp"
#include "helpers.hpp"
#include "qwire/errors.hpp"
#include "reference_values.hpp"

#include <doctest.h>

#include <numbers>

using namespace qwire;
using doctest::Approx;

TEST_SUITE("qd") {
  TEST_CASE("levels match the high-precision reference") {
    CHECK(testing::dot_level(3, 0).energy == Approx(ref::dot_E10_r3).epsilon(1e-9));
    CHECK(testing::dot_level(3, 1).energy == Approx(ref::dot_E11_r3).epsilon(1e-9));
    CHECK(testing::dot_level(4, 0).energy == Approx(ref::dot_E10_r4).epsilon(1e-9));
    CHECK(testing::dot_level(4, 1).energy == Approx(ref::dot_E11_r4).epsilon(1e-9));
  }

  TEST_CASE("finite-difference oracle") {
    for (double r0 : {3.0, 4.0})
      for (int l : {0, 1}) {
        const auto w = testing::dot(r0);
        const oracle::RadialFd fd({r0, w.barrier_height, w.well_mass, w.barrier_mass,
                                   constants().hbar2_over_2m0, l, true});
        const auto levels = qd_find_levels(l, w, 2);
        REQUIRE(levels.size() == 2);
        for (int k = 0; k < 2; ++k) CHECK(std::abs(fd.eigenvalue(k, 0.0, w.barrier_height) - levels[k].energy) < 0.5);
      }
  }

  TEST_CASE("infinite spherical well limit") {
    const auto w = testing::dot(4.0, 1000.0);
    const double target = constants().hbar2_over_2m0 * std::numbers::pi * std::numbers::pi / (0.13 * 16.0);
    CHECK(target == Approx(180.9).epsilon(1e-3));
    CHECK(qd_find_levels(0, w, 1).at(0).energy == Approx(target).epsilon(0.01));
  }

  TEST_CASE("ordering against the wire") {
    for (double r : {3.0, 4.0}) {
      CHECK(testing::dot_level(r, 0).energy > testing::level(r, 0).energy);
      const double qd21 = testing::dot_level(r, 1).energy - testing::dot_level(r, 0).energy;
      const double qwr21 = testing::level(r, 1).energy - testing::level(r, 0).energy;
      CHECK(qd21 > qwr21);
    }
    CHECK(testing::dot_level(3, 0).energy > testing::dot_level(4, 0).energy);
  }

  TEST_CASE("normalisation and dipoles") {
    const auto a = testing::dot_level(4, 0), b = testing::dot_level(4, 1), c = testing::dot_level(4, 0, 2);
    CHECK(qd_radial_norm(a) == Approx(1.0).epsilon(1e-6));
    CHECK(qd_radial_norm(b) == Approx(1.0).epsilon(1e-6));
    CHECK(qd_dipole(a, b) == Approx(ref::dot_dipole_r4).epsilon(1e-7));
    CHECK(qd_dipole(testing::dot_level(3, 0), testing::dot_level(3, 1)) == Approx(ref::dot_dipole_r3).epsilon(1e-7));
    CHECK(qd_dipole(a, b) > 0.0);
    CHECK(qd_dipole(a, c) == 0.0);
    CHECK(qd_dipole(a, b) == qd_dipole(b, a));
    CHECK_THROWS_AS(qd_find_levels(-1, testing::dot(4), 1), DomainError);
  }
}
