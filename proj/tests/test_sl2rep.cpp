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

#include "bunloc/sl2rep.hpp"
#include "support/cech_oracle.hpp"

using namespace bunloc;
using namespace bunloc::sl2;

TEST_CASE("irreducible characters") {
    CHECK(irr_char(0).to_string() == "1");
    CHECK(irr_char(1).to_string() == "z + z^-1");
    CHECK(irr_char(2).to_string() == "z^2 + 1 + z^-2");
    CHECK(irr_char(7).dim() == 8);
    CHECK(irr_char(5).z.is_symmetric());
    CHECK_THROWS(irr_char(-1));
}

TEST_CASE("clebsch-gordan") {
    VirtualRep t11 = tensor_decompose(1, 1);
    CHECK(t11.mult(2) == 1);
    CHECK(t11.mult(0) == 1);
    CHECK(t11.dim() == 4);

    CHECK(tensor_decompose(5, 0).mults == std::map<int, long long>{{5, 1}});
    VirtualRep t21 = tensor_decompose(2, 1);
    CHECK(t21.mults == std::map<int, long long>{{1, 1}, {3, 1}});
    CHECK_THROWS(tensor_decompose(-1, 2));

    // character-product oracle across a window
    for (int a = 0; a <= 12; ++a)
        for (int b = 0; b <= 12; ++b) {
            Character prod;
            prod.z = irr_char(a).z * irr_char(b).z;
            CHECK(char_to_virtual(prod) == tensor_decompose(a, b));
        }
}

TEST_CASE("invariants") {
    VirtualRep v0;
    v0.add(0, 1);
    CHECK(invariant_dim(v0) == 1);
    VirtualRep v2;
    v2.add(2, 1);
    CHECK(invariant_dim(v2) == 0);
    CHECK(invariant_dim(tensor_decompose(1, 1)) == 1);
}

TEST_CASE("character round-trip through highest-weight stripping") {
    VirtualRep v;
    v.add(0, 2);
    v.add(3, -1);
    v.add(6, 4);
    CHECK(char_to_virtual(virtual_to_char(v)) == v);
}

TEST_CASE("line bundle cohomology closed form") {
    auto c0 = coh_P1(0);
    CHECK(c0.h0.mults == std::map<int, long long>{{0, 1}});
    CHECK(c0.h1.is_zero());

    auto cm1 = coh_P1(-1);
    CHECK(cm1.h0.is_zero());
    CHECK(cm1.h1.is_zero());

    auto cm2 = coh_P1(-2);
    CHECK(cm2.h0.is_zero());
    CHECK(cm2.h1.mults == std::map<int, long long>{{0, 1}});
}

TEST_CASE("cohomology matches the independent Cech oracle with weights") {
    for (int n = -10; n <= 10; ++n) {
        auto closed = coh_P1(n);
        auto oracle = cech::cech_coh_P1(n, 16);
        // dimensions
        CHECK(closed.h0.dim() == cech::total(oracle.h0));
        CHECK(closed.h1.dim() == cech::total(oracle.h1));
        // weight multisets
        auto w0 = virtual_to_char(closed.h0);
        auto w1 = virtual_to_char(closed.h1);
        for (auto& [w, d] : oracle.h0) CHECK(w0.z.coeff(w) == d);
        for (auto& [w, d] : oracle.h1) CHECK(w1.z.coeff(w) == d);
        CHECK(static_cast<long long>(w0.dim()) == cech::total(oracle.h0));
        // Euler characteristic and Serre pattern
        CHECK(closed.h0.dim() - closed.h1.dim() == n + 1);
        CHECK(closed.h1.dim() == coh_P1(-n - 2).h0.dim());
        // Borel-Weil-Bott: one-sided
        CHECK((closed.h0.is_zero() || closed.h1.is_zero()));
    }
}

TEST_CASE("sections of the diagonal component") {
    CHECK(sections_diagonal(0, 10) == 1);
    CHECK(sections_diagonal(3, 10) == 0);
    CHECK(sections_diagonal(1, 0) == 0);
    CHECK_THROWS(sections_diagonal(0, -1));

    // cutoff-independence for n >= 0, monotonicity for n < 0
    for (int n = 0; n <= 6; ++n)
        for (int cut = 0; cut <= 12; ++cut)
            CHECK(sections_diagonal(n, cut) == sections_diagonal(n, 0));
    for (int n = -8; n < 0; ++n) {
        long long prev = 0;
        for (int cut = 0; cut <= 12; ++cut) {
            long long cur = sections_diagonal(n, cut);
            CHECK(cur >= prev);
            prev = cur;
        }
    }
}

TEST_CASE("hom structure table") {
    auto table = hom_structure_table(7);
    REQUIRE(table.size() == 9);
    CHECK(table[0] == std::pair<int, long long>{-1, 1});
    CHECK(table[1] == std::pair<int, long long>{0, 0});
    CHECK(table[8] == std::pair<int, long long>{7, 0});
    CHECK_THROWS(hom_structure_table(-2));
}

TEST_CASE("sections of line bundles on the triple product") {
    CHECK(sections_P1cubed(-1, -1, -1) == 0);
    CHECK(sections_P1cubed(0, 0, 0) == 1);
    CHECK(sections_P1cubed(1, 1, 0) == 1);
    CHECK(sections_P1cubed(1, 0, 0) == 0);
    CHECK(sections_P1cubed(2, 1, 1) == 1);
    CHECK(sections_P1cubed(-3, 4, 4) == 0);
}
