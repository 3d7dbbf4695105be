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

#include <map>
#include <utility>
#include <vector>

#include "bunloc/laurent.hpp"

namespace bunloc::sl2 {

// SL(2) character: a symmetric Laurent polynomial in z.
struct Character {
    LaurentPoly z;

    bool operator==(const Character& o) const { return z == o.z; }
    long long dim() const {
        long long s = 0;
        for (auto& [e, v] : z.coeffs()) s += v;
        return s;
    }
    std::string to_string() const { return z.to_string("z"); }
};

// Finitely supported virtual sum of irreducibles V_n, n >= 0, with integer
// multiplicities.
struct VirtualRep {
    std::map<int, long long> mults;

    long long mult(int n) const {
        auto it = mults.find(n);
        return it == mults.end() ? 0 : it->second;
    }
    void add(int n, long long k) {
        if (k == 0) return;
        auto [it, fresh] = mults.emplace(n, 0);
        it->second += k;
        if (it->second == 0) mults.erase(it);
        (void)fresh;
    }
    long long dim() const {
        long long d = 0;
        for (auto& [n, k] : mults) d += k * (n + 1);
        return d;
    }
    bool is_zero() const { return mults.empty(); }
    bool operator==(const VirtualRep& o) const { return mults == o.mults; }

    VirtualRep operator+(const VirtualRep& o) const {
        VirtualRep r = *this;
        for (auto& [n, k] : o.mults) r.add(n, k);
        return r;
    }
};

// Cohomology of a line bundle on P^1 as SL(2)-representations; at most one
// of h0, h1 is nonzero and dim h0 - dim h1 = n + 1 for O(n).
struct CohPair {
    VirtualRep h0, h1;
};

Character irr_char(int n);
VirtualRep tensor_decompose(int a, int b);
long long invariant_dim(const VirtualRep& v);
CohPair coh_P1(int n);
long long sections_diagonal(int n, int cutoff);
std::vector<std::pair<int, long long>> hom_structure_table(int n_max);
long long sections_P1cubed(int a, int b, int c);

// Highest-weight stripping; inverse of building a character from
// multiplicities.  Works for virtual characters (negative entries allowed).
VirtualRep char_to_virtual(const Character& ch);
Character virtual_to_char(const VirtualRep& v);

} // namespace bunloc::sl2
