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

#include "bunloc/sl2rep.hpp"

#include <stdexcept>

namespace bunloc::sl2 {

Character irr_char(int n) {
    if (n < 0) throw std::invalid_argument("irr_char: negative highest weight");
    Character ch;
    for (int w = -n; w <= n; w += 2) ch.z.add_term(w, 1);
    return ch;
}

VirtualRep tensor_decompose(int a, int b) {
    if (a < 0 || b < 0) throw std::invalid_argument("tensor_decompose: negative input");
    VirtualRep v;
    for (int n = a + b; n >= std::abs(a - b); n -= 2) v.add(n, 1);
    return v;
}

long long invariant_dim(const VirtualRep& v) { return v.mult(0); }

CohPair coh_P1(int n) {
    CohPair c;
    if (n >= 0) {
        c.h0.add(n, 1);
    } else if (n <= -2) {
        c.h1.add(-n - 2, 1);
    }
    return c;
}

long long sections_diagonal(int n, int cutoff) {
    if (cutoff < 0) throw std::invalid_argument("sections_diagonal: negative cutoff");
    // Global functions on the total space of O(-2) + O(-2), twisted by n,
    // contribute Sym^i of the dual pair at weight n + 2i with rank i + 1.
    long long total = 0;
    for (int i = 0; i <= cutoff; ++i)
        total += (i + 1) * invariant_dim(coh_P1(n + 2 * i).h0);
    return total;
}

std::vector<std::pair<int, long long>> hom_structure_table(int n_max) {
    if (n_max < -1) throw std::invalid_argument("hom_structure_table: n_max < -1");
    const int cutoff = std::max(n_max + 2, 48);
    std::vector<std::pair<int, long long>> rows;
    for (int n = -1; n <= n_max; ++n)
        rows.push_back({n, sections_diagonal(n + 1, cutoff)});
    return rows;
}

long long sections_P1cubed(int a, int b, int c) {
    if (a < 0 || b < 0 || c < 0) return 0;
    Character prod;
    prod.z = (irr_char(a).z * irr_char(b).z) * irr_char(c).z;
    return invariant_dim(char_to_virtual(prod));
}

VirtualRep char_to_virtual(const Character& ch) {
    VirtualRep v;
    LaurentPoly rest = ch.z;
    while (!rest.is_zero()) {
        int top = rest.max_exp();
        if (top < 0) throw std::invalid_argument("char_to_virtual: not Weyl-symmetric");
        long long m = rest.coeff(top);
        v.add(top, m);
        for (int w = -top; w <= top; w += 2) rest.add_term(w, -m);
    }
    return v;
}

Character virtual_to_char(const VirtualRep& v) {
    Character ch;
    for (auto& [n, k] : v.mults)
        for (int w = -n; w <= n; w += 2) ch.z.add_term(w, k);
    return ch;
}

} // namespace bunloc::sl2
