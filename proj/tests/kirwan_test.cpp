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

#include "quotser/kirwan.hpp"
#include "test_util.hpp"

using namespace quotser;
using quotser::testing::P;

namespace {

StratumData leaf_stratum(const std::string& label, int codim, CycloRational value) {
    StratumData s;
    s.label = label;
    s.pieces.push_back({codim, ExplicitEquivariantSeries{std::move(value)}});
    return s;
}

// Weights (1,1,-1,-1) on P^3: two unstable strata of codim 2, each retracting
// onto a P^1 with a trivial residual torus action.
GITProblem p3_mod_gm() {
    GITProblem p;
    p.space = SpaceDescriptor{ProjectiveSpace{3}};
    p.group = GroupDescriptor{GmGroup{}};
    p.dim_x = 3;
    p.dim_g = 1;
    p.ss_equals_s = true;
    CycloRational leaf(P("1 + t^2"), {2});
    p.strata.push_back(leaf_stratum("beta+", 2, leaf));
    p.strata.push_back(leaf_stratum("beta-", 2, leaf));
    return p;
}

// Ordered triples of points on the line modulo Mobius transformations.
GITProblem p1cubed_mod_sl2() {
    GITProblem p;
    p.space = SpaceDescriptor{SpaceProduct{{SpaceDescriptor{ProjectiveSpace{1}},
                                            SpaceDescriptor{ProjectiveSpace{1}},
                                            SpaceDescriptor{ProjectiveSpace{1}}}}};
    p.group = GroupDescriptor{SLGroup{2}};
    p.dim_x = 3;
    p.dim_g = 3;
    p.ss_equals_s = true;
    CycloRational leaf(P("1"), {2});
    p.strata.push_back(leaf_stratum("diag12", 1, leaf));
    p.strata.push_back(leaf_stratum("diag13", 1, leaf));
    p.strata.push_back(leaf_stratum("diag23", 1, leaf));
    p.strata.push_back(leaf_stratum("diag123", 2, leaf));
    return p;
}

}  // namespace

TEST_CASE("equivariant totals") {
    CHECK(equivariant_total(SpaceDescriptor{ProjectiveSpace{1}}, GroupDescriptor{GmGroup{}}) ==
          CycloRational(P("1 + t^2"), {2}));
    CHECK(equivariant_total(SpaceDescriptor{PointSpace{}}, GroupDescriptor{TrivialGroup{}}) ==
          CycloRational::one());
    SpaceProduct p1cubed{{SpaceDescriptor{ProjectiveSpace{1}}, SpaceDescriptor{ProjectiveSpace{1}},
                          SpaceDescriptor{ProjectiveSpace{1}}}};
    CHECK(equivariant_total(SpaceDescriptor{p1cubed}, GroupDescriptor{SLGroup{2}}) ==
          CycloRational(P("1 + t^2") * P("1 + t^2") * P("1 + t^2"), {4}));
}

TEST_CASE("semistable series") {
    GITProblem trivial;
    trivial.space = SpaceDescriptor{ProjectiveSpace{1}};
    trivial.group = GroupDescriptor{TrivialGroup{}};
    trivial.dim_x = 1;
    CHECK(semistable_series(trivial) == CycloRational(P("1 + t^2")));

    // Direct substitution into the stratification identity.
    CycloRational expected(P("1 + t^2 + t^4 + t^6") - P("2*t^4") * P("1 + t^2"), {2});
    CHECK(semistable_series(p3_mod_gm()) == expected);

    CHECK(semistable_series(p1cubed_mod_sl2()) == CycloRational::one());
}

TEST_CASE("quotient series") {
    CHECK(quotient_series(p3_mod_gm()) == P("1 + 2*t^2 + t^4"));  // P^1 x P^1
    CHECK(quotient_series(p1cubed_mod_sl2()) == P("1"));          // a single point

    GITProblem trivial;
    trivial.space = SpaceDescriptor{ProjectiveSpace{2}};
    trivial.group = GroupDescriptor{TrivialGroup{}};
    trivial.dim_x = 2;
    trivial.ss_equals_s = true;
    CHECK(quotient_series(trivial) == P("1 + t^2 + t^4"));

    CHECK(is_palindromic(quotient_series(p3_mod_gm()), 2));
}

TEST_CASE("quotient requires ss = s") {
    GITProblem p = p3_mod_gm();
    p.ss_equals_s = false;
    CHECK_THROWS_WITH_AS(quotient_series(p), doctest::Contains("SsNotS"), Error);
}

TEST_CASE("corrupted stratification fails exact division") {
    GITProblem p = p3_mod_gm();
    CycloRational corrupted(-P("1 + t^2"), {2});
    p.strata[0] = leaf_stratum("beta+", 2, corrupted);
    p.strata[1] = leaf_stratum("beta-", 2, corrupted);
    CHECK_THROWS_WITH_AS(quotient_series(p), doctest::Contains("NotPolynomial"), Error);
}

TEST_CASE("stratification identity reconstructs the total") {
    std::mt19937_64 rng(31337);
    std::uniform_int_distribution<int> ndist(0, 4), cdist(1, 5), kdist(1, 3);
    for (int iter = 0; iter < 100; ++iter) {
        GITProblem p;
        p.space = SpaceDescriptor{ProjectiveSpace{static_cast<int>(ndist(rng)) + 1}};
        p.group = GroupDescriptor{GmGroup{}};
        p.dim_x = 5;
        p.dim_g = 1;
        const int nstrata = ndist(rng);
        for (int s = 0; s < nstrata; ++s) {
            std::vector<int> den;
            for (int k = kdist(rng); k > 0; --k) den.push_back(2 * kdist(rng));
            CycloRational leaf(quotser::testing::random_nonneg_poly(rng), den);
            p.strata.push_back(leaf_stratum("s" + std::to_string(s), cdist(rng), leaf));
        }
        CycloRational ss = semistable_series(p);
        CycloRational reassembled = ss;
        for (const auto& stratum : p.strata)
            for (const auto& piece : stratum.pieces)
                reassembled += std::get<ExplicitEquivariantSeries>(piece.sub).value *
                               IntPoly::term(1, 2 * piece.codim);
        CHECK(reassembled == equivariant_total(p.space, p.group));
    }
}

TEST_CASE("engine is independent of strata order") {
    GITProblem p = p1cubed_mod_sl2();
    CycloRational base = semistable_series(p);
    std::mt19937_64 rng(8);
    for (int i = 0; i < 10; ++i) {
        std::shuffle(p.strata.begin(), p.strata.end(), rng);
        CHECK(semistable_series(p) == base);
    }
}

TEST_CASE("nested sub-problems recurse") {
    // Leaf: a point with trivial group, so the sub-problem's semistable
    // series is 1; attach it at codim 1.
    auto sub = std::make_shared<GITProblem>();
    sub->space = SpaceDescriptor{PointSpace{}};
    sub->group = GroupDescriptor{TrivialGroup{}};

    GITProblem p;
    p.space = SpaceDescriptor{ProjectiveSpace{1}};
    p.group = GroupDescriptor{TrivialGroup{}};
    p.dim_x = 1;
    StratumData s;
    s.label = "beta";
    s.pieces.push_back({1, std::shared_ptr<const GITProblem>(sub)});
    p.strata.push_back(s);
    CHECK(semistable_series(p) == CycloRational(P("1")));  // 1 + t^2 - t^2
}

TEST_CASE("recursion guards") {
    auto cyclic = std::make_shared<GITProblem>();
    cyclic->space = SpaceDescriptor{ProjectiveSpace{1}};
    cyclic->group = GroupDescriptor{TrivialGroup{}};
    StratumData s;
    s.label = "self";
    s.pieces.push_back({1, std::shared_ptr<const GITProblem>(cyclic)});
    cyclic->strata.push_back(s);
    CHECK_THROWS_WITH_AS(semistable_series(*cyclic), doctest::Contains("CyclicProblem"), Error);

    // A 70-deep chain of distinct problems trips the depth limit.
    auto leafp = std::make_shared<GITProblem>();
    leafp->space = SpaceDescriptor{PointSpace{}};
    leafp->group = GroupDescriptor{TrivialGroup{}};
    std::shared_ptr<GITProblem> chain = leafp;
    for (int i = 0; i < 70; ++i) {
        auto next = std::make_shared<GITProblem>();
        next->space = SpaceDescriptor{ProjectiveSpace{1}};
        next->group = GroupDescriptor{TrivialGroup{}};
        StratumData link;
        link.label = "down";
        link.pieces.push_back({1, std::shared_ptr<const GITProblem>(chain)});
        next->strata.push_back(link);
        chain = next;
    }
    CHECK_THROWS_WITH_AS(semistable_series(*chain), doctest::Contains("RecursionLimit"), Error);
}

TEST_CASE("semistable trace replays") {
    Trace trace;
    quotient_series(p3_mod_gm(), &trace);
    CHECK(replay(trace) == CycloRational(P("1 + 2*t^2 + t^4")));
}
