// Copyright 2026 The zenophoton authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>

#include <doctest.h>

#include "zenophoton/fock.hpp"

using namespace zeno;

TEST_CASE("basis enumeration follows the printed ordering") {
    const auto& space = StateSpace::canonical();
    REQUIRE(space.dim() == 10);
    const Occupation expected[10] = {{0, 0, 0}, {0, 0, 1}, {0, 1, 0}, {1, 0, 0}, {0, 1, 1},
                                     {0, 0, 2}, {0, 2, 0}, {1, 0, 1}, {1, 1, 0}, {2, 0, 0}};
    for (int i = 0; i < 10; ++i) {
        CHECK(space.occupation(i) == expected[i]);
        CHECK(space.index(expected[i]) == i);  // bijection
    }
    CHECK_THROWS_AS(space.index(0, 1, 2), out_of_space);
    CHECK_THROWS_AS(space.index(-1, 0, 0), out_of_space);
}

TEST_CASE("poisson_distribution") {
    SUBCASE("vacuum") {
        const auto d = poisson_distribution(0.0, 5);
        CHECK(d.probs[0] == doctest::Approx(1.0).epsilon(1e-14));
        for (int n = 1; n <= 5; ++n) CHECK(d.probs[n] == 0.0);
    }
    SUBCASE("mu=1 first entries") {
        const auto d = poisson_distribution(1.0, 3);
        const double e1 = std::exp(-1.0);
        CHECK(d.probs[0] == doctest::Approx(e1).epsilon(1e-12));
        CHECK(d.probs[1] == doctest::Approx(e1).epsilon(1e-12));
        CHECK(d.probs[2] == doctest::Approx(e1 / 2).epsilon(1e-12));
        CHECK(d.probs[3] == doctest::Approx(e1 / 6).epsilon(1e-12));
    }
    SUBCASE("mu=3.5 head and tail") {
        const auto d = poisson_distribution(3.5, 19);
        CHECK(d.probs[0] == doctest::Approx(std::exp(-3.5)).epsilon(1e-12));
        CHECK(1.0 - d.total() < 2e-9);  // tail beyond 19 is ~1.13e-9
    }
    SUBCASE("errors") {
        CHECK_THROWS_AS(poisson_distribution(-0.1, 5), invalid_parameter);
        CHECK_THROWS_AS(poisson_distribution(1.0, 0), invalid_parameter);
    }
}

TEST_CASE("auto_nmax hits the 1e-12 tail threshold") {
    CHECK(auto_nmax(0.0) == 1);
    CHECK(auto_nmax(5.0) <= 30);
    for (double mu : {0.5, 1.0, 2.0, 3.5, 5.0, 8.0}) {
        const int v = auto_nmax(mu);
        CHECK(v <= 40);
        const double tail_v = 1.0 - poisson_distribution(mu, v).total();
        const double tail_prev = 1.0 - poisson_distribution(mu, v - 1).total();
        CHECK(tail_v < 1e-12);
        CHECK(tail_prev >= 1e-12);
    }
    CHECK_THROWS_AS(auto_nmax(-1.0), invalid_parameter);
    CHECK_THROWS_AS(auto_nmax(8.5), invalid_parameter);
}

TEST_CASE("basis_state and marginals") {
    const auto& space = StateSpace::canonical();
    const DensityMatrix vac = basis_state(space, 0, 0, 0);
    CHECK(vac.elements(0, 0).real() == 1.0);
    CHECK(vac.trace() == doctest::Approx(1.0));
    CHECK(vac.absorbed == 0.0);

    const DensityMatrix proj = basis_state(space, 0, 1, 1);
    CHECK(proj.elements(space.index(0, 1, 1), space.index(0, 1, 1)).real() == 1.0);
    CHECK_THROWS_AS(basis_state(space, 0, 1, 2), out_of_space);

    const auto mc = mode_number_marginal(proj, Mode::c);
    CHECK(mc.probs[0] == doctest::Approx(0.0));
    CHECK(mc.probs[1] == doctest::Approx(1.0));

    DensityMatrix mix = basis_state(space, 0, 2, 0);
    mix.elements *= 0.5;
    mix.elements(0, 0) += 0.5;
    const auto mm = mode_number_marginal(mix, Mode::c);
    CHECK(mm.probs[0] == doctest::Approx(0.5));
    CHECK(mm.probs[1] == doctest::Approx(0.0));
    CHECK(mm.probs[2] == doctest::Approx(0.5));
    CHECK(mm.total() == doctest::Approx(mix.trace()).epsilon(1e-12));
}
