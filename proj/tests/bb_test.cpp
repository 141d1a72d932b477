/*
   Copyright 2026 The quotser authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <doctest.h>

#include <algorithm>

#include "quotser/bb.hpp"
#include "quotser/spaces.hpp"
#include "test_util.hpp"

using namespace quotser;
using quotser::testing::P;

TEST_CASE("fixed-point assembly") {
    CHECK(assemble_bb({{P("1"), 0}}) == P("1"));
    CHECK(assemble_bb({{P("1"), 0}, {P("1"), 1}, {P("1"), 2}}) == P("1 + t^2 + t^4"));
    CHECK(assemble_bb({{P("1"), 0}, {P("1"), 1}, {P("1"), 1}, {P("1"), 2}}) == P("1 + 2*t^2 + t^4"));
    CHECK_THROWS_WITH_AS(assemble_bb({}), doctest::Contains("EmptyDecomposition"), Error);
}

TEST_CASE("projective space from coordinate fixed points") {
    for (int n = 0; n <= 10; ++n) {
        std::vector<FixedComponentData> comps;
        for (int i = 0; i <= n; ++i) comps.push_back({P("1"), i});
        CHECK(assemble_bb(comps) == poincare_space(SpaceDescriptor{ProjectiveSpace{n}}));
    }
}

TEST_CASE("assembly is order independent and localizes euler characteristics") {
    std::mt19937_64 rng(555);
    std::uniform_int_distribution<int> cdist(0, 6), ndist(1, 6);
    for (int iter = 0; iter < 50; ++iter) {
        std::vector<FixedComponentData> comps;
        const int n = ndist(rng);
        for (int i = 0; i < n; ++i)
            comps.push_back({quotser::testing::random_poly(rng, 8, 20), cdist(rng)});
        IntPoly assembled = assemble_bb(comps);

        Int chi = 0;
        for (const auto& c : comps) chi += euler_characteristic(c.series);
        CHECK(euler_characteristic(assembled) == chi);

        std::shuffle(comps.begin(), comps.end(), rng);
        CHECK(assemble_bb(comps) == assembled);
    }
}

TEST_CASE("equivariant series over the open stratum") {
    CHECK(equivariant_over_xmin(P("1"), 4) == TruncatedSeries::of_poly(P("1 + t^2 + t^4"), 4));
    CHECK(equivariant_over_xmin(IntPoly(), 6) == TruncatedSeries(6));
    CHECK(equivariant_over_xmin(P("1 + t^2"), 4) == TruncatedSeries::of_poly(P("1 + 2*t^2 + 2*t^4"), 4));
}

TEST_CASE("assembly trace replays") {
    Trace trace;
    assemble_bb({{P("1"), 0}, {P("1 + t^2"), 1}}, &trace);
    CHECK(replay(trace) == CycloRational(P("1 + t^2 + t^4")));
}
