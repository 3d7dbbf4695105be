/*
 * Copyright 2026 The bunloc Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <doctest.h>

#include "bunloc/spectral.hpp"

using namespace bunloc;
using namespace bunloc::spectral;

namespace {
MultiPoly P(const RingPtr& r, const std::string& s) { return MultiPoly::parse(r, s); }
} // namespace

TEST_CASE("chart matrices have determinant one and fix their lines") {
    auto [A0, A1] = build_chart_matrices();
    RingPtr R = chart_ring();
    CHECK(A0.det() == P(R, "1"));
    CHECK(A1.det() == P(R, "1"));

    // at a = 0 the first matrix is the identity
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            Rational v = A0.at(i, j).evaluate({rat(0), rat(3), rat(5), rat(7)});
            CHECK(v == (i == j ? rat(1) : rat(0)));
        }

    // (A_0 - 1) kills the eigenline [1 : x]
    SymMatrix2 one = SymMatrix2::identity(R);
    auto img = (A0 - one).apply({P(R, "1"), P(R, "x")});
    CHECK(img[0].is_zero());
    CHECK(img[1].is_zero());
    auto img1 = (A1 - one).apply({P(R, "1"), P(R, "y")});
    CHECK(img1[0].is_zero());
    CHECK(img1[1].is_zero());
}

TEST_CASE("the displayed product matrix") {
    SymMatrix2 prod = chart_product();
    RingPtr R = chart_ring();
    CHECK(prod.at(0, 0) == P(R, "1 - a*x - b*y + a*b*x*y - a*b*y^2"));
    CHECK(prod.at(0, 1) == P(R, "a + b - a*b*x + a*b*y"));
    CHECK(prod.at(1, 0) == P(R, "-a*x^2 - b*y^2 + a*b*x^2*y - a*b*x*y^2"));
    CHECK(prod.at(1, 1) == P(R, "1 + a*x + b*y - a*b*x^2 + a*b*x*y"));
    CHECK(prod.det() == P(R, "1"));
}

TEST_CASE("derived ideal equals the displayed equations") {
    CHECK(ideal_eq(derive_ideal(), target_ideal()));
    // the identity triple a = b = 0 satisfies every constraint
    for (auto& g : derive_ideal().generators())
        CHECK(g.evaluate({rat(0), rat(0), rat(2), rat(9)}) == rat(0));
}

TEST_CASE("derived ideal is symmetric under swapping the two finite points") {
    // (a,x) <-> (b,y)
    RingPtr R = chart_ring();
    std::vector<int> perm = {1, 0, 3, 2};
    std::vector<MultiPoly> swapped;
    for (auto& g : target_ideal().generators()) swapped.push_back(g.rename_vars(perm));
    CHECK(ideal_eq(Ideal(R, swapped), target_ideal()));
}

TEST_CASE("five components with the stated structure") {
    auto comps = components();
    REQUIRE(comps.size() == 5);
    CHECK(comps[0].name == "Λ_∅");
    CHECK(comps[4].name == "~Λ_S");
    RingPtr R = chart_ring();
    CHECK(ideal_eq(comps[3].ideal, Ideal(R, {P(R, "a + b"), P(R, "x - y")})));
    int reduced = 0;
    for (auto& c : comps) reduced += c.reduced ? 1 : 0;
    CHECK(reduced == 4);
    CHECK_FALSE(comps[4].reduced);
    for (auto& c : comps) CHECK(c.conormal_base.size() != 1);

    // every component contains the chart ideal
    for (auto& c : comps) {
        for (auto& g : target_ideal().generators()) CHECK(ideal_member(g, c.ideal));
    }
}

TEST_CASE("decomposition checks pass") {
    auto rep = verify_decomposition();
    INFO(rep.to_text());
    CHECK(rep.ok());
    CHECK(rep.entries().size() >= 5);
}

TEST_CASE("all three linearization variants pass") {
    for (int v = 1; v <= 3; ++v) {
        auto rep = verify_linearization(v);
        INFO(rep.to_text());
        CHECK(rep.ok());
    }
    CHECK_THROWS(verify_linearization(0));
    CHECK_THROWS(verify_linearization(4));
}

TEST_CASE("the three linearization discrepancies agree") {
    // all variants replace one matrix by the sum form; the discrepancy is
    // the same matrix A_0 + A_1 + A_inf - 3 every time
    RingPtr R = chart_ring();
    auto [A0, A1] = build_chart_matrices();
    SymMatrix2 S = A0 + A1 + a_infinity() - SymMatrix2::scalar(R, 3);
    Ideal chart = target_ideal();
    const auto& gb = chart.reduced_gb();
    CHECK(reduce(S.at(0, 0), gb).is_zero());
    CHECK(reduce(S.at(1, 0), gb).is_zero());
    CHECK(reduce(S.at(1, 1), gb).is_zero());
    // the surviving entry is congruent to ab(x - y), but not to zero
    CHECK(reduce(S.at(0, 1) - P(R, "a*b*x - a*b*y"), gb).is_zero());
    CHECK_FALSE(reduce(S.at(0, 1), gb).is_zero());
}

TEST_CASE("odd component checks pass") {
    auto rep = pgl2_odd_component();
    INFO(rep.to_text());
    CHECK(rep.ok());
}

TEST_CASE("eisenstein sequence checks pass") {
    auto rep = verify_Y_sequences();
    INFO(rep.to_text());
    CHECK(rep.ok());
}

TEST_CASE("Y ideal is proper and behaves under the colon oracle") {
    RingPtr R = chart_ring();
    Ideal I = target_ideal();
    Ideal Y = ideal_sum(I, Ideal(R, {P(R, "x*y")}));
    CHECK_FALSE(ideal_member(P(R, "a + b"), Y));
    // (I : (a+b)) contains I and multiplies back into I
    Ideal Q = ideal_quotient(I, P(R, "a + b"));
    for (auto& g : I.generators()) CHECK(ideal_member(g, Q));
    for (auto& g : Q.generators()) CHECK(ideal_member(g * P(R, "a + b"), I));
}
