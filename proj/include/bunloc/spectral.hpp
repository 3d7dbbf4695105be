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

#pragma once

#include <array>
#include <set>
#include <string>
#include <vector>

#include "bunloc/groebner.hpp"
#include "bunloc/report.hpp"

namespace bunloc::spectral {

// 2x2 matrix of polynomials, acting on column vectors.  Lines in P^1 are
// written [u:v]; the chart pins l_inf = [1:0], l_0 = [1:x], l_1 = [1:y].
struct SymMatrix2 {
    std::array<MultiPoly, 4> m; // row-major

    static SymMatrix2 identity(const RingPtr& ring);
    static SymMatrix2 scalar(const RingPtr& ring, const Rational& c);

    const MultiPoly& at(int r, int c) const { return m[2 * r + c]; }
    MultiPoly& at(int r, int c) { return m[2 * r + c]; }

    SymMatrix2 operator*(const SymMatrix2& o) const;
    SymMatrix2 operator+(const SymMatrix2& o) const;
    SymMatrix2 operator-(const SymMatrix2& o) const;
    MultiPoly det() const;
    MultiPoly trace() const;
    // inverse via the adjugate; valid when det == 1
    SymMatrix2 unimodular_inverse() const;
    std::array<MultiPoly, 2> apply(const std::array<MultiPoly, 2>& v) const;
    bool is_zero() const;
};

// The chart ring Q[a,b,x,y] with the default order.
RingPtr chart_ring();

// A_0 and A_1 of the three-puncture chart.
std::pair<SymMatrix2, SymMatrix2> build_chart_matrices();

// The product A_0 * A_1 (equal to the inverse of A_infinity).
SymMatrix2 chart_product();

// A_infinity computed as the adjugate inverse of A_0 * A_1.
SymMatrix2 a_infinity();

// The defining ideal of the chart, derived from the unipotent upper
// triangular constraint on A_infinity.
Ideal derive_ideal();

// The simplified form (ax+by, ax^2+by^2).
Ideal target_ideal();

struct ComponentDescriptor {
    std::string name;
    Ideal ideal;
    bool reduced;
    std::set<int> conormal_base; // subset of {0,1,2} = {0,1,inf}, size != 1
};

// The five irreducible components of the chart, in canonical order.
std::vector<ComponentDescriptor> components();

CheckReport verify_decomposition();
CheckReport verify_linearization(int variant); // variant in {1,2,3}
CheckReport pgl2_odd_component();
CheckReport verify_Y_sequences();

} // namespace bunloc::spectral
