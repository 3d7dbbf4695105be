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

// Independent two-chart Cech computation of H^0 and H^1 of O(n) on P^1,
// with torus weights, used as an oracle against the closed-form cohomology.
// Deliberately built from nothing but monomial bookkeeping and integer
// matrix ranks: no call into the library's representation theory.

#include <map>
#include <vector>

namespace cech {

struct GradedDims {
    // weight -> dimension
    std::map<int, long long> h0, h1;
};

// Integer matrix rank over Q by fraction-free Gaussian elimination.
inline int int_matrix_rank(std::vector<std::vector<long long>> m) {
    if (m.empty()) return 0;
    const size_t rows = m.size(), cols = m[0].size();
    int rank = 0;
    size_t rr = 0;
    for (size_t c = 0; c < cols && rr < rows; ++c) {
        size_t sel = rr;
        while (sel < rows && m[sel][c] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(m[rr], m[sel]);
        for (size_t r2 = rr + 1; r2 < rows; ++r2) {
            if (m[r2][c] == 0) continue;
            long long a = m[rr][c], b = m[r2][c];
            for (size_t cc = 0; cc < cols; ++cc) m[r2][cc] = a * m[r2][cc] - b * m[rr][cc];
        }
        ++rank;
        ++rr;
    }
    return rank;
}

// Cech complex of O(n) for the cover {U_0, U_inf}:
//   C^0 = Gamma(U_0) + Gamma(U_inf)  ->  C^1 = Gamma(U_0 cap U_inf)
// truncated to the exponent window [-W, W].  Sections over U_0 are spanned
// by t^k, k >= 0; over U_inf by t^k, k <= n (the frames differ by t^n); the
// overlap by all t^k.  The monomial t^k carries torus weight 2k - n.
inline GradedDims cech_coh_P1(int n, int window) {
    GradedDims out;
    const int W = window;
    for (int w = -2 * W; w <= 2 * W; ++w) {
        // monomials of weight w: k with 2k - n = w
        if ((w + n) % 2 != 0) continue;
        const int k = (w + n) / 2;
        if (k < -W || k > W) continue;
        // basis elements of this weight in each chart piece
        std::vector<int> basis0, basisInf, basis01;
        if (k >= 0) basis0.push_back(k);
        if (k <= n) basisInf.push_back(k);
        basis01.push_back(k);
        // differential d(f0, finf) = f0 - finf
        std::vector<std::vector<long long>> d(basis0.size() + basisInf.size(),
                                              std::vector<long long>(basis01.size(), 0));
        for (size_t i = 0; i < basis0.size(); ++i) d[i][0] = 1;
        for (size_t i = 0; i < basisInf.size(); ++i) d[basis0.size() + i][0] = -1;
        const int c0 = static_cast<int>(basis0.size() + basisInf.size());
        const int c1 = static_cast<int>(basis01.size());
        const int r = int_matrix_rank(d);
        const int h0 = c0 - r;
        const int h1 = c1 - r;
        if (h0 > 0) out.h0[w] += h0;
        if (h1 > 0) out.h1[w] += h1;
    }
    return out;
}

inline long long total(const std::map<int, long long>& dims) {
    long long s = 0;
    for (auto& [w, d] : dims) s += d;
    return s;
}

} // namespace cech
