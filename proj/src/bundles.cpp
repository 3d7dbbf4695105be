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

#include "bunloc/bundles.hpp"

#include <algorithm>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace bunloc::fq {

namespace {

const char* point_name(int s) { return s == 0 ? "0" : (s == 1 ? "1" : "∞"); }

std::string subset_name(int mask) {
    if (mask == 0) return "∅";
    if (mask == 7) return "S";
    std::string out;
    for (int s = 0; s < 3; ++s) {
        if (!(mask & (1 << s))) continue;
        if (!out.empty()) out += ",";
        out += point_name(s);
    }
    return out;
}

// d = 0 coincidence patterns, indexed 0..4.
constexpr int kAllDistinct = 0;
constexpr int kPair01 = 1;
constexpr int kPair0Inf = 2;
constexpr int kPair1Inf = 3;
constexpr int kAllEqual = 4;

std::string d0_name(int cfg) {
    switch (cfg) {
        case kAllDistinct: return "∅";
        case kPair01: return "0,1";
        case kPair0Inf: return "0,∞";
        case kPair1Inf: return "1,∞";
        default: return "S";
    }
}

} // namespace

std::string label_to_string(const OrbitLabel& l) {
    std::ostringstream out;
    out << "c_" << l.d << "(";
    if (l.d == 0)
        out << d0_name(l.cfg);
    else if (l.cfg == kCfgStar)
        out << "*";
    else
        out << subset_name(l.cfg);
    out << ")";
    return out.str();
}

std::vector<OrbitLabel> labels_at_gap(int d) {
    std::vector<OrbitLabel> out;
    if (d == 0) {
        for (int cfg = 0; cfg <= 4; ++cfg) out.push_back({0, cfg});
        return out;
    }
    if (d == 1) out.push_back({1, kCfgStar});
    // subsets ordered by size then by mask
    std::vector<int> masks;
    for (int m = 0; m < 8; ++m) masks.push_back(m);
    std::sort(masks.begin(), masks.end(), [](int u, int v) {
        int cu = __builtin_popcount(u), cv = __builtin_popcount(v);
        return cu != cv ? cu < cv : u < v;
    });
    for (int m : masks) out.push_back({d, m});
    return out;
}

namespace {

// Does a map O -> O(d) + O pass through the three non-top lines?  The
// interpolation data is f(0) = v0, f(1) = v1, top coefficient = v_inf for a
// polynomial f of degree <= d.
bool interpolation_solvable(int d, const std::array<int, 3>& lines, const FqConfig& F) {
    // rows of the linear system in the d+1 coefficients of f
    std::vector<std::vector<uint8_t>> rows;
    for (int s = 0; s < 3; ++s) {
        std::vector<uint8_t> row(d + 2, 0);
        if (s == 2) {
            row[d] = 1;
        } else {
            uint8_t pt = static_cast<uint8_t>(s);
            uint8_t pw = 1;
            for (int k = 0; k <= d; ++k) {
                row[k] = pw;
                pw = F.mul(pw, pt);
            }
        }
        row[d + 1] = static_cast<uint8_t>(lines[s]); // rhs
        rows.push_back(std::move(row));
    }
    // Gaussian elimination; solvable iff no row reduces to (0..0 | nonzero)
    size_t rank = 0;
    for (int col = 0; col <= d && rank < rows.size(); ++col) {
        size_t sel = rank;
        while (sel < rows.size() && rows[sel][col] == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[rank], rows[sel]);
        uint8_t pinv = F.inv(rows[rank][col]);
        for (auto& v : rows[rank]) v = F.mul(v, pinv);
        for (size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][col] == 0) continue;
            uint8_t f = rows[r][col];
            for (size_t cc = 0; cc < rows[r].size(); ++cc)
                rows[r][cc] = F.sub(rows[r][cc], F.mul(f, rows[rank][cc]));
        }
        ++rank;
    }
    for (auto& row : rows) {
        bool lhs_zero = true;
        for (int k = 0; k <= d; ++k) lhs_zero = lhs_zero && row[k] == 0;
        if (lhs_zero && row[d + 1] != 0) return false;
    }
    return true;
}

} // namespace

OrbitLabel classify(const ParabolicPoint& p, const FqConfig& F) {
    const int q = F.q();
    for (int s = 0; s < 3; ++s)
        if (p.lines[s] < 0 || p.lines[s] > q)
            throw std::invalid_argument("classify: bad line index");
    if (p.d == 0) {
        bool e01 = p.lines[0] == p.lines[1];
        bool e0i = p.lines[0] == p.lines[2];
        bool e1i = p.lines[1] == p.lines[2];
        if (e01 && e0i) return {0, kAllEqual};
        if (e01) return {0, kPair01};
        if (e0i) return {0, kPair0Inf};
        if (e1i) return {0, kPair1Inf};
        return {0, kAllDistinct};
    }
    int mask = 0;
    for (int s = 0; s < 3; ++s)
        if (p.lines[s] == q) mask |= 1 << s;
    if (p.d == 1 && mask == 0) {
        if (!interpolation_solvable(1, p.lines, F)) return {1, kCfgStar};
        return {1, 0};
    }
    return {p.d, mask};
}

ParabolicPoint representative(const OrbitLabel& l, const FqConfig& F) {
    const int q = F.q();
    ParabolicPoint p;
    p.d = l.d;
    if (l.d == 0) {
        switch (l.cfg) {
            case kAllDistinct: p.lines = {0, 1, q}; break;
            case kPair01: p.lines = {0, 0, 1}; break;
            case kPair0Inf: p.lines = {0, 1, 0}; break;
            case kPair1Inf: p.lines = {0, 1, 1}; break;
            default: p.lines = {0, 0, 0}; break;
        }
        return p;
    }
    if (l.d == 1 && l.cfg == kCfgStar) {
        // v1 != v0 + v_inf breaks collinearity
        p.lines = {0, 1, 0};
        return p;
    }
    for (int s = 0; s < 3; ++s) p.lines[s] = (l.cfg & (1 << s)) ? q : 0;
    if (l.d == 1 && l.cfg == 0) p.lines = {0, 1, 1}; // collinear: v0 + v_inf = v1
    return p;
}

std::vector<ParabolicPoint> all_points_with_label(const OrbitLabel& l,
                                                  const FqConfig& F) {
    const int q = F.q();
    std::vector<ParabolicPoint> out;
    for (int i0 = 0; i0 <= q; ++i0)
        for (int i1 = 0; i1 <= q; ++i1)
            for (int i2 = 0; i2 <= q; ++i2) {
                ParabolicPoint p{l.d, {i0, i1, i2}};
                if (classify(p, F) == l) out.push_back(p);
            }
    return out;
}

long long full_aut_order(int d, int q) {
    if (d == 0) return static_cast<long long>(q) * (q * q - 1);
    long long p = 1;
    for (int i = 0; i < d + 1; ++i) p *= q;
    return p * (q - 1);
}

long long aut_order(const OrbitLabel& l, int q) {
    if (l.d == 0) {
        switch (l.cfg) {
            case kAllDistinct: return 1;
            case kAllEqual: return static_cast<long long>(q) * (q - 1);
            default: return q - 1;
        }
    }
    if (l.d == 1) {
        if (l.cfg == kCfgStar) return 1;
        switch (__builtin_popcount(l.cfg)) {
            case 0:
            case 1: return q - 1;
            case 2: return static_cast<long long>(q) * (q - 1);
            default: return static_cast<long long>(q) * q * (q - 1);
        }
    }
    // gap d >= 2: the evaluation sequence 1 -> G_a^{d-2} -> Aut -> G_m x G_a^R
    long long p = 1;
    for (int i = 0; i < l.d - 2 + __builtin_popcount(l.cfg); ++i) p *= q;
    return p * (q - 1);
}

std::map<OrbitLabel, long long> orbit_census_serial(int d, const FqConfig& F) {
    const int q = F.q();
    std::map<OrbitLabel, long long> counts;
    for (OrbitLabel l : labels_at_gap(d)) counts[l] = 0;
    for (int i0 = 0; i0 <= q; ++i0)
        for (int i1 = 0; i1 <= q; ++i1)
            for (int i2 = 0; i2 <= q; ++i2) {
                ParabolicPoint p{d, {i0, i1, i2}};
                ++counts[classify(p, F)];
            }
    for (auto it = counts.begin(); it != counts.end();)
        it = it->second == 0 ? counts.erase(it) : std::next(it);
    return counts;
}

std::map<OrbitLabel, long long> orbit_census(int d, const FqConfig& F) {
    const int q = F.q();
    const int total = (q + 1) * (q + 1) * (q + 1);
    const auto labels = labels_at_gap(d);
    std::vector<long long> tally(labels.size(), 0);
    auto label_index = [&labels](const OrbitLabel& l) {
        for (size_t i = 0; i < labels.size(); ++i)
            if (labels[i] == l) return i;
        throw std::logic_error("census: unknown label");
    };

#ifdef _OPENMP
#pragma omp parallel
    {
        std::vector<long long> local(labels.size(), 0);
#pragma omp for nowait
        for (int idx = 0; idx < total; ++idx) {
            ParabolicPoint p{d,
                             {idx / ((q + 1) * (q + 1)), (idx / (q + 1)) % (q + 1),
                              idx % (q + 1)}};
            ++local[label_index(classify(p, F))];
        }
        // deterministic merge: one label order, order-independent addition
#pragma omp critical
        for (size_t i = 0; i < labels.size(); ++i) tally[i] += local[i];
    }
#else
    for (int idx = 0; idx < total; ++idx) {
        ParabolicPoint p{d,
                         {idx / ((q + 1) * (q + 1)), (idx / (q + 1)) % (q + 1),
                          idx % (q + 1)}};
        ++tally[label_index(classify(p, F))];
    }
#endif

    std::map<OrbitLabel, long long> counts;
    for (size_t i = 0; i < labels.size(); ++i)
        if (tally[i] != 0) counts[labels[i]] = tally[i];
    return counts;
}

Rational groupoid_mass(int d, const FqConfig& F) {
    auto census = orbit_census_serial(d, F);
    Rational mass = 0;
    for (auto& [label, size] : census) {
        (void)size;
        mass += Rational(1, static_cast<long>(aut_order(label, F.q())));
    }
    return mass;
}

// ---------------------------------------------------------------------------
// Modifications

namespace {

struct LineVec {
    uint8_t u = 1, v = 0;
};

LineVec decode_line(int idx, const FqConfig& F) {
    if (idx == F.q()) return {1, 0};
    return {static_cast<uint8_t>(idx), 1};
}

int encode_line(const LineVec& l, const FqConfig& F) {
    if (l.u == 0 && l.v == 0) throw std::logic_error("zero line vector");
    if (l.v == 0) return F.q();
    return F.div(l.u, l.v);
}

struct Mat2 {
    // constant 2x2 matrix over F_q
    uint8_t a = 1, b = 0, c = 0, d = 1;

    Mat2 inverse(const FqConfig& F) const {
        uint8_t det = F.sub(F.mul(a, d), F.mul(b, c));
        uint8_t di = F.inv(det);
        return {F.mul(d, di), F.mul(F.neg(b), di), F.mul(F.neg(c), di), F.mul(a, di)};
    }
    LineVec apply(const LineVec& l, const FqConfig& F) const {
        return {F.add(F.mul(a, l.u), F.mul(b, l.v)),
                F.add(F.mul(c, l.u), F.mul(d, l.v))};
    }
};

// Completes a nonzero vector to an invertible constant matrix whose first
// column is the vector.
Mat2 complete_line(const LineVec& l, const FqConfig& F) {
    if (l.v != 0) return {l.u, 1, l.v, 0};
    return {l.u, 0, 0, 1};
}

Mat2 eval_mat(const FqLMat& M, uint8_t x, const FqConfig& F) {
    return {M.at(0, 0).eval(x, F), M.at(0, 1).eval(x, F), M.at(1, 0).eval(x, F),
            M.at(1, 1).eval(x, F)};
}

// Value of a matrix over F_q[t^-1] at t = infinity (constant coefficients).
Mat2 eval_mat_at_infinity(const FqLMat& M) {
    return {M.at(0, 0).coeff(0), M.at(0, 1).coeff(0), M.at(1, 0).coeff(0),
            M.at(1, 1).coeff(0)};
}

struct Bundle {
    FqLMat g;                      // transition: infinity-frame = g * zero-frame
    std::array<LineVec, 3> lines;  // at 0, 1 in the 0-frame; at inf in the inf-frame
};

Bundle bundle_from_point(const ParabolicPoint& p, const FqConfig& F) {
    Bundle b;
    b.g = FqLMat::diag(FqLaurent::monomial(1, -p.d), FqLaurent::constant(1));
    for (int s = 0; s < 3; ++s) b.lines[s] = decode_line(p.lines[s], F);
    return b;
}

// Renormalizes an arbitrary transition presentation back to the splitting
// normal form and re-expresses the parabolic lines in the new frames.
ParabolicPoint normalize_bundle(const Bundle& b, const FqConfig& F, int window) {
    Birkhoff bk = birkhoff_factor(b.g, F, window);
    ParabolicPoint out;
    out.d = bk.k1 - bk.k0;
    for (int s = 0; s < 2; ++s) {
        Mat2 ch = eval_mat(bk.u_plus, static_cast<uint8_t>(s), F);
        out.lines[s] = encode_line(ch.apply(b.lines[s], F), F);
    }
    Mat2 chi = eval_mat_at_infinity(bk.u_minus).inverse(F);
    out.lines[2] = encode_line(chi.apply(b.lines[2], F), F);
    return out;
}

// Lower modification at a finite point x along the line l (0-frame):
// sections of the modified bundle are those with value at x inside l.
// For x != 0 the point lies in both charts, so both frames change:
// g' = h_inf^{-1} g h_0.
Bundle modify_at_finite(const Bundle& b, uint8_t x, const LineVec& l,
                        const FqConfig& F) {
    Mat2 P0 = complete_line(l, F);
    FqLaurent tmx = FqLaurent::monomial(1, 1).add(FqLaurent::constant(F.neg(x)), F);
    FqLMat h0;
    h0.at(0, 0) = FqLaurent::constant(P0.a);
    h0.at(1, 0) = FqLaurent::constant(P0.c);
    h0.at(0, 1) = FqLaurent::constant(P0.b).mul(tmx, F);
    h0.at(1, 1) = FqLaurent::constant(P0.d).mul(tmx, F);

    Bundle out;
    if (x == 0) {
        // t = 0 is not in the infinity chart
        out.g = b.g.mul(h0, F);
        out.lines[2] = b.lines[2];
    } else {
        // the line in the infinity frame at x is g(x) * l
        Mat2 gx{b.g.at(0, 0).eval_laurent(x, F), b.g.at(0, 1).eval_laurent(x, F),
                b.g.at(1, 0).eval_laurent(x, F), b.g.at(1, 1).eval_laurent(x, F)};
        LineVec linf = gx.apply(l, F);
        Mat2 Pi = complete_line(linf, F);
        // h_inf = P_inf * diag(1, u - 1/x) with u = 1/t
        FqLaurent umx = FqLaurent::monomial(1, -1).add(
            FqLaurent::constant(F.neg(F.inv(x))), F);
        FqLMat hinf;
        hinf.at(0, 0) = FqLaurent::constant(Pi.a);
        hinf.at(1, 0) = FqLaurent::constant(Pi.c);
        hinf.at(0, 1) = FqLaurent::constant(Pi.b).mul(umx, F);
        hinf.at(1, 1) = FqLaurent::constant(Pi.d).mul(umx, F);

        // h_inf^{-1} = adj(h_inf) / (detP * (u - 1/x)); the denominator is
        // the unit multiple -x^{-1} t^{-1} (t - x) of (t - x)
        FqLMat adj;
        adj.at(0, 0) = hinf.at(1, 1);
        adj.at(0, 1) = hinf.at(0, 1).scale(F.neg(1), F);
        adj.at(1, 0) = hinf.at(1, 0).scale(F.neg(1), F);
        adj.at(1, 1) = hinf.at(0, 0);
        uint8_t detP = F.sub(F.mul(Pi.a, Pi.d), F.mul(Pi.b, Pi.c));
        uint8_t unit = F.mul(F.neg(x), F.inv(detP));
        FqLMat M = adj.mul(b.g, F).mul(h0, F);
        for (auto& e : M.a)
            e = laurent_div_exact(e, tmx, F).shifted(1).scale(unit, F);
        out.g = M;

        Mat2 hinf0 = eval_mat_at_infinity(hinf);
        out.lines[2] = hinf0.inverse(F).apply(b.lines[2], F);
    }
    for (int s = 0; s < 2; ++s) {
        if (s == x) continue; // the modified marked point gets the fresh direction
        Mat2 hs = eval_mat(h0, static_cast<uint8_t>(s), F);
        out.lines[s] = hs.inverse(F).apply(b.lines[s], F);
    }
    if (x < 2) out.lines[x] = {0, 1}; // image of E(-x) in the fresh frame
    return out;
}

// Lower modification at infinity along the line l (inf-frame).
Bundle modify_at_infinity(const Bundle& b, const LineVec& l, const FqConfig& F) {
    Mat2 P = complete_line(l, F);
    Mat2 Pi = P.inverse(F);
    // h^{-1} = diag(1, t) * P^{-1}
    FqLMat hinv;
    hinv.at(0, 0) = FqLaurent::constant(Pi.a);
    hinv.at(0, 1) = FqLaurent::constant(Pi.b);
    hinv.at(1, 0) = FqLaurent::monomial(Pi.c, 1);
    hinv.at(1, 1) = FqLaurent::monomial(Pi.d, 1);

    Bundle out;
    out.g = hinv.mul(b.g, F);
    out.lines[0] = b.lines[0];
    out.lines[1] = b.lines[1];
    out.lines[2] = {0, 1}; // image of E(-inf): the fresh frame direction
    return out;
}

int default_window(const FqConfig& F, int d) {
    (void)F;
    return 2 * std::max(d, 4) + 8;
}

} // namespace

std::map<OrbitLabel, long long> hecke_fiber_counts_from(const ParabolicPoint& p,
                                                        uint8_t x, const FqConfig& F,
                                                        int window) {
    const int q = F.q();
    if (x == 0 || x == 1 || x >= q)
        throw UnsupportedParams("hecke modification point must be unramified in F_q");
    if (window == 0) window = default_window(F, p.d);
    std::map<OrbitLabel, long long> counts;
    Bundle base = bundle_from_point(p, F);
    for (int li = 0; li <= q; ++li) {
        LineVec lx = decode_line(li, F);
        Bundle modified = modify_at_finite(base, x, lx, F);
        ParabolicPoint target = normalize_bundle(modified, F, window);
        ++counts[classify(target, F)];
    }
    return counts;
}

std::map<OrbitLabel, long long> hecke_fiber_counts(const OrbitLabel& b, uint8_t x,
                                                   const FqConfig& F, int window) {
    return hecke_fiber_counts_from(representative(b, F), x, F, window);
}

ParabolicPoint atkin_lehner(const ParabolicPoint& p, MarkedPoint r, const FqConfig& F,
                            int window) {
    if (window == 0) window = default_window(F, p.d);
    Bundle base = bundle_from_point(p, F);
    Bundle modified;
    if (r == kPInf) {
        modified = modify_at_infinity(base, base.lines[2], F);
    } else {
        // modify_at_finite installs the image of E(-r) as the fresh line at r
        modified = modify_at_finite(base, static_cast<uint8_t>(r), base.lines[r], F);
    }
    return normalize_bundle(modified, F, window);
}

// ---------------------------------------------------------------------------
// Specialization poset

std::vector<OrbitLabel> closure_covers(const OrbitLabel& l) {
    std::vector<OrbitLabel> out;
    if (l.d == 0) {
        if (l.cfg == kAllDistinct) {
            out.push_back({0, kPair01});
            out.push_back({0, kPair0Inf});
            out.push_back({0, kPair1Inf});
        } else if (l.cfg != kAllEqual) {
            out.push_back({0, kAllEqual});
        }
        return out;
    }
    if (l.d == 1 && l.cfg == kCfgStar) {
        out.push_back({1, 0});
        out.push_back({1, 1});
        out.push_back({1, 2});
        out.push_back({1, 4});
        return out;
    }
    if (l.d == 1 && l.cfg == 0) {
        out.push_back({1, 3});
        out.push_back({1, 5});
        out.push_back({1, 6});
        return out;
    }
    // R grows one point at a time
    for (int s = 0; s < 3; ++s)
        if (!(l.cfg & (1 << s))) out.push_back({l.d, l.cfg | (1 << s)});
    return out;
}

std::vector<OrbitLabel> poset_closure(const std::vector<OrbitLabel>& seed,
                                      const std::vector<OrbitLabel>& within) {
    auto allowed = [&within](const OrbitLabel& l) {
        if (within.empty()) return true;
        for (auto& w : within)
            if (w == l) return true;
        return false;
    };
    std::vector<OrbitLabel> out;
    std::vector<OrbitLabel> queue;
    auto push = [&](const OrbitLabel& l) {
        if (!allowed(l)) return;
        for (auto& o : out)
            if (o == l) return;
        out.push_back(l);
        queue.push_back(l);
    };
    for (auto& s : seed) push(s);
    while (!queue.empty()) {
        OrbitLabel l = queue.back();
        queue.pop_back();
        for (auto& c : closure_covers(l)) push(c);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace bunloc::fq
