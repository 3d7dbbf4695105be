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

#include <random>

#include "bunloc/poly.hpp"

using namespace bunloc;

namespace {

RingPtr abxy(MonomialOrder ord = MonomialOrder::grevlex) {
    return make_ring({"a", "b", "x", "y"}, ord);
}

MultiPoly P(const RingPtr& r, const std::string& s) { return MultiPoly::parse(r, s); }

MultiPoly random_poly(const RingPtr& ring, std::mt19937& rng, int max_terms = 4,
                      int max_deg = 2, int max_coeff = 5) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> dcoef(-max_coeff, max_coeff);
    std::uniform_int_distribution<int> dexp(0, max_deg);
    std::vector<MultiPoly::Term> terms;
    int n = nterms(rng);
    for (int i = 0; i < n; ++i) {
        Monomial m;
        for (int v = 0; v < ring->nvars(); ++v)
            m.e[v] = static_cast<uint16_t>(dexp(rng));
        terms.push_back({m, rat(dcoef(rng))});
    }
    return MultiPoly::from_terms(ring, std::move(terms));
}

} // namespace

TEST_CASE("ring validation") {
    CHECK_THROWS(make_ring({"a", "a"}));
    CHECK_THROWS(make_ring({"z"}));
    CHECK_THROWS(make_ring({}));
    auto r = abxy();
    CHECK(r->index("x") == 2);
    CHECK(r->index("t") == -1);
}

TEST_CASE("product identities") {
    auto r = abxy();
    CHECK(P(r, "a + b") * P(r, "a - b") == P(r, "a^2 - b^2"));
    auto p = P(r, "3/2*a^2*x - b*y + 1");
    CHECK(p * P(r, "1") == p);
    CHECK(P(r, "x + y") * P(r, "x + y") == P(r, "x^2 + 2*x*y + y^2"));
}

TEST_CASE("ring mismatch is refused") {
    auto r1 = abxy();
    auto r2 = make_ring({"a", "b"});
    CHECK_THROWS_AS(P(r1, "a") * P(r2, "b"), RingMismatch);
}

TEST_CASE("distributivity on random polynomials") {
    auto r = abxy();
    std::mt19937 rng(20260810);
    for (int i = 0; i < 200; ++i) {
        auto p = random_poly(r, rng);
        auto q = random_poly(r, rng);
        auto s = random_poly(r, rng);
        CHECK((p + q) * s == p * s + q * s);
        CHECK(p * q == q * p);
        CHECK((p * q) * s == p * (q * s));
    }
}

TEST_CASE("monomial orders are total and multiplicative") {
    for (auto ord : {MonomialOrder::lex, MonomialOrder::grevlex}) {
        auto r = abxy(ord);
        std::mt19937 rng(7);
        std::uniform_int_distribution<int> dexp(0, 3);
        for (int i = 0; i < 500; ++i) {
            Monomial u, v, w;
            for (int k = 0; k < 4; ++k) {
                u.e[k] = static_cast<uint16_t>(dexp(rng));
                v.e[k] = static_cast<uint16_t>(dexp(rng));
                w.e[k] = static_cast<uint16_t>(dexp(rng));
            }
            // totality
            if (!(u == v)) CHECK(mono_less(u, v, *r) != mono_less(v, u, *r));
            // multiplicativity
            if (mono_less(u, v, *r))
                CHECK(mono_less(mono_mul(u, w, 4), mono_mul(v, w, 4), *r));
        }
    }
}

TEST_CASE("parse and print round-trip") {
    auto r = abxy();
    for (const char* text : {"3/2*a^2*x - b*y + 1", "0", "1", "-a", "a^3",
                             "x^2 + 2*x*y + y^2", "a*x + b*y", "-1/3*a*b*x*y + 2/7"}) {
        auto p = P(r, text);
        CHECK(P(r, p.to_string()) == p);
        CHECK(p.to_string() == P(r, p.to_string()).to_string());
    }
    // whitespace insensitivity
    CHECK(P(r, "  3/2 * a^2*x-b* y+1 ") == P(r, "3/2*a^2*x - b*y + 1"));
    CHECK_THROWS_AS(P(r, "a + q"), ParseError);
    CHECK_THROWS_AS(P(r, "a + "), ParseError);
}

TEST_CASE("random print round-trip") {
    auto r = abxy();
    std::mt19937 rng(99);
    for (int i = 0; i < 300; ++i) {
        auto p = random_poly(r, rng, 6, 4, 9);
        CHECK(P(r, p.to_string()) == p);
    }
}

TEST_CASE("evaluation and renaming") {
    auto r = abxy();
    auto p = P(r, "a*x + b*y");
    CHECK(p.evaluate({rat(1), rat(0), rat(5), rat(7)}) == rat(5));
    // swap (a,x) <-> (b,y)
    std::vector<int> perm = {1, 0, 3, 2};
    CHECK(p.rename_vars(perm) == P(r, "b*y + a*x"));
}
