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

#include "coulomb2d.hpp"
#include "helpers.hpp"
#include "qwire/donor.hpp"
#include "qwire/errors.hpp"
#include "reference_values.hpp"
#include "tensor_grid.hpp"

#include <doctest.h>

using namespace qwire;
using doctest::Approx;

namespace {
  oracle::TrialProblem trial(const SubbandState &s, double a, bool coulomb) {
    const auto &w = s.profile;
    return {s.l, s.energy, w.core_radius, w.barrier_height, w.well_mass, w.barrier_mass,
            constants().hbar2_over_2m0, coulomb ? constants().coulomb_factor / w.eps_well : 0.0, a, 1200, 2400};
  }
}

TEST_SUITE("donor") {
  TEST_CASE("expectation matches the reference quadrature") {
    const auto s0 = testing::level(4, 0), s1 = testing::level(4, 1);
    CHECK(energy_expectation(0.03, s0, {}, Coulomb::off) == Approx(ref::expect_l0_a003_r4_free).epsilon(1e-8));
    CHECK(energy_expectation(0.03, s0) == Approx(ref::expect_l0_a003_r4).epsilon(1e-8));
    CHECK(energy_expectation(0.02, s1) == Approx(ref::expect_l1_a002_r4).epsilon(1e-8));
  }

  TEST_CASE("dense tensor-grid oracle") {
    const auto s0 = testing::level(4, 0), s1 = testing::level(4, 1);
    CHECK(std::abs(energy_expectation(0.05, s0) - oracle::tensor_grid_expectation(trial(s0, 0.05, true))) < 0.1);
    CHECK(std::abs(energy_expectation(0.05, s0, {}, Coulomb::off) -
                   oracle::tensor_grid_expectation(trial(s0, 0.05, false))) < 0.1);
    CHECK(std::abs(energy_expectation(0.05, s1) - oracle::tensor_grid_expectation(trial(s1, 0.05, true))) < 0.1);
  }

  TEST_CASE("free-motion limit") {
    const auto s = testing::level(4, 0);
    double prev = 1e300;
    for (double a : {1e-3, 1e-4, 1e-5}) {
      const double e = energy_expectation(a, s, {}, Coulomb::off);
      CHECK(e > s.energy);
      CHECK(e < prev);
      prev = e;
    }
    CHECK(prev - s.energy < 0.01);
  }

  TEST_CASE("Coulomb lowers the quotient") {
    const auto s = testing::level(4, 0);
    for (double a : {1e-3, 0.03, 0.5, 5.0}) CHECK(energy_expectation(a, s) < energy_expectation(a, s, {}, Coulomb::off));
    CHECK_THROWS_AS(energy_expectation(0.0, s), DomainError);
    CHECK_THROWS_AS(energy_expectation(-1.0, s), DomainError);
  }

  TEST_CASE("minimisation matches the reference") {
    const auto d = minimize_energy(testing::level(4, 0));
    CHECK(d.energy == Approx(ref::donor_E10_r4).epsilon(2e-6));
    CHECK(d.a_opt == Approx(ref::donor_a10_r4).epsilon(0.01));
    CHECK_FALSE(d.at_boundary);
    CHECK(d.binding_energy == Approx(binding_energy(d)));
    CHECK(d.binding_energy > 0.0);
  }

  TEST_CASE("no binding without Coulomb") {
    const auto s = testing::level(4, 0);
    const auto d = minimize_energy(s, {}, Coulomb::off);
    CHECK(d.at_boundary);
    CHECK(d.a_opt == Approx(min_trial_parameter).epsilon(0.05));
    CHECK(d.energy - s.energy < 0.01);
    DonorState same;
    same.base   = s;
    same.energy = s.energy;
    CHECK(binding_energy(same) == 0.0);
  }

  TEST_CASE("binding decreases with radius") {
    double prev = 1e300;
    for (double r : {3.0, 3.5, 4.0, 4.5}) {
      const double b = minimize_energy(testing::level(r, 0)).binding_energy;
      CHECK(b > 0.0);
      CHECK(b < prev);
      prev = b;
    }
  }

  TEST_CASE("variational upper bound") {
    const auto s = testing::level(4, 0);
    const auto &w = s.profile;
    oracle::DonorGrid grid{w.core_radius, w.barrier_height, w.well_mass, w.barrier_mass,
                           constants().hbar2_over_2m0, constants().coulomb_factor / w.eps_well};
    const double exact = oracle::donor_ground_state(grid);
    CAPTURE(exact);
    for (double a : {1e-3, 0.01, 0.034, 0.1, 1.0}) CHECK(energy_expectation(a, s) >= exact - 0.5);
    CHECK(minimize_energy(s).energy - exact < 10.0);
  }

  TEST_CASE("length scaling without Coulomb") {
    const double s = 2.0;
    auto w = testing::wire(4.0);
    const auto base = find_levels(0, w, 1).at(0);
    w.core_radius *= s;
    w.barrier_height /= s * s;
    const auto scaled = find_levels(0, w, 1).at(0);
    CHECK(scaled.energy == Approx(base.energy / (s * s)).epsilon(1e-9));
    for (double a : {0.01, 0.05})
      CHECK(energy_expectation(a / (s * s), scaled, {}, Coulomb::off) ==
            Approx(energy_expectation(a, base, {}, Coulomb::off) / (s * s)).epsilon(1e-6));
  }

  TEST_CASE("quadrature robustness") {
    const QuadratureSpec fine{16.0, 12.0, 1e-13, 1e-6};
    for (double r : {3.0, 4.0})
      for (int l : {0, 1}) {
        const auto s = testing::level(r, l);
        CHECK(std::abs(minimize_energy(s).energy - minimize_energy(s, fine).energy) <= 0.05);
      }
  }

  TEST_CASE("trial normalisation") {
    const auto s = testing::level(4, 0);
    const double n1 = trial_normalization(s, 0.03), n2 = trial_normalization(s, 0.06);
    CHECK(n1 > 0.0);
    CHECK(n2 > n1); // narrower envelope, smaller integral
  }
}
