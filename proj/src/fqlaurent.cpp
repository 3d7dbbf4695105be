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

#include "bunloc/fqlaurent.hpp"

#include <algorithm>
#include <sstream>

namespace bunloc::fq {

void FqLaurent::trim() {
    size_t front = 0;
    while (front < c_.size() && c_[front] == 0) ++front;
    if (front == c_.size()) {
        c_.clear();
        lo_ = 0;
        return;
    }
    size_t back = c_.size();
    while (back > front && c_[back - 1] == 0) --back;
    if (front > 0 || back < c_.size()) {
        std::vector<uint8_t> next(c_.begin() + front, c_.begin() + back);
        c_ = std::move(next);
        lo_ += static_cast<int>(front);
    }
}

FqLaurent FqLaurent::monomial(uint8_t c, int exp) {
    FqLaurent p;
    if (c != 0) {
        p.lo_ = exp;
        p.c_ = {c};
    }
    return p;
}

uint8_t FqLaurent::coeff(int exp) const {
    if (is_zero() || exp < lo_ || exp > hi()) return 0;
    return c_[exp - lo_];
}

FqLaurent FqLaurent::add(const FqLaurent& o, const FqConfig& F) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    FqLaurent r;
    r.lo_ = std::min(lo_, o.lo_);
    int hi_exp = std::max(hi(), o.hi());
    r.c_.assign(hi_exp - r.lo_ + 1, 0);
    for (int e = r.lo_; e <= hi_exp; ++e)
        r.c_[e - r.lo_] = F.add(coeff(e), o.coeff(e));
    r.trim();
    return r;
}

FqLaurent FqLaurent::sub(const FqLaurent& o, const FqConfig& F) const {
    return add(o.scale(F.neg(1), F), F);
}

FqLaurent FqLaurent::mul(const FqLaurent& o, const FqConfig& F) const {
    if (is_zero() || o.is_zero()) return {};
    FqLaurent r;
    r.lo_ = lo_ + o.lo_;
    r.c_.assign(c_.size() + o.c_.size() - 1, 0);
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j)
            r.c_[i + j] = F.add(r.c_[i + j], F.mul(c_[i], o.c_[j]));
    r.trim();
    return r;
}

FqLaurent FqLaurent::scale(uint8_t c, const FqConfig& F) const {
    if (c == 0) return {};
    FqLaurent r = *this;
    for (auto& v : r.c_) v = F.mul(v, c);
    r.trim();
    return r;
}

FqLaurent FqLaurent::shifted(int k) const {
    FqLaurent r = *this;
    if (!r.is_zero()) r.lo_ += k;
    return r;
}

uint8_t FqLaurent::eval(uint8_t x, const FqConfig& F) const {
    if (is_zero()) return 0;
    if (lo_ < 0) throw std::logic_error("eval of Laurent polynomial with pole at 0");
    uint8_t acc = 0;
    for (int e = hi(); e >= 0; --e) acc = F.add(F.mul(acc, x), coeff(e));
    return acc;
}

uint8_t FqLaurent::eval_laurent(uint8_t x, const FqConfig& F) const {
    if (is_zero()) return 0;
    if (x == 0) throw ZeroDivisor("Laurent evaluation at 0");
    // value of the polynomial part, times x^{lo}
    uint8_t acc = 0;
    for (size_t i = c_.size(); i-- > 0;) acc = F.add(F.mul(acc, x), c_[i]);
    uint8_t pw = 1;
    uint8_t base = lo_ >= 0 ? x : F.inv(x);
    for (int k = 0; k < std::abs(lo_); ++k) pw = F.mul(pw, base);
    return F.mul(acc, pw);
}

std::string FqLaurent::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int e = lo(); e <= hi(); ++e) {
        if (coeff(e) == 0) continue;
        if (!first) out << " + ";
        first = false;
        if (e == 0 || coeff(e) != 1) out << int(coeff(e));
        if (e != 0) {
            if (coeff(e) != 1) out << "*";
            out << "t";
            if (e != 1) out << "^" << e;
        }
    }
    return out.str();
}

FqLMat FqLMat::identity() {
    FqLMat m;
    m.at(0, 0) = FqLaurent::constant(1);
    m.at(1, 1) = FqLaurent::constant(1);
    return m;
}

FqLMat FqLMat::diag(const FqLaurent& d0, const FqLaurent& d1) {
    FqLMat m;
    m.at(0, 0) = d0;
    m.at(1, 1) = d1;
    return m;
}

FqLMat FqLMat::from_units(uint8_t a00, uint8_t a01, uint8_t a10, uint8_t a11) {
    FqLMat m;
    m.at(0, 0) = FqLaurent::constant(a00);
    m.at(0, 1) = FqLaurent::constant(a01);
    m.at(1, 0) = FqLaurent::constant(a10);
    m.at(1, 1) = FqLaurent::constant(a11);
    return m;
}

FqLMat FqLMat::mul(const FqLMat& o, const FqConfig& F) const {
    FqLMat r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            r.at(i, j) = at(i, 0).mul(o.at(0, j), F).add(at(i, 1).mul(o.at(1, j), F), F);
    return r;
}

FqLaurent FqLMat::det(const FqConfig& F) const {
    return at(0, 0).mul(at(1, 1), F).sub(at(0, 1).mul(at(1, 0), F), F);
}

int FqLMat::max_abs_degree() const {
    int m = 0;
    for (auto& e : a) {
        if (e.is_zero()) continue;
        m = std::max({m, std::abs(e.lo()), std::abs(e.hi())});
    }
    return m;
}

std::string FqLMat::to_string() const {
    std::ostringstream out;
    out << "[[" << at(0, 0).to_string() << ", " << at(0, 1).to_string() << "], ["
        << at(1, 0).to_string() << ", " << at(1, 1).to_string() << "]]";
    return out.str();
}

namespace {

// Nonzero polynomial vector s (componentwise degree <= bound) with
// deg_t(g * s) <= cap, or empty when none exists.  Layout of the result:
// (s0_0..s0_bound, s1_0..s1_bound).
std::vector<uint8_t> section_kernel(const FqLMat& g, int cap, int bound,
                                    const FqConfig& F) {
    const int ncols = 2 * (bound + 1);
    int hi = 0;
    for (auto& e : g.a)
        if (!e.is_zero()) hi = std::max(hi, e.hi());
    const int max_exp = hi + bound;
    if (max_exp <= cap) {
        std::vector<uint8_t> s(ncols, 0);
        s[0] = 1;
        return s;
    }
    std::vector<std::vector<uint8_t>> rows;
    for (int r = 0; r < 2; ++r) {
        for (int e = cap + 1; e <= max_exp; ++e) {
            std::vector<uint8_t> row(ncols, 0);
            bool nonzero = false;
            for (int comp = 0; comp < 2; ++comp) {
                const FqLaurent& entry = g.at(r, comp);
                for (int d = 0; d <= bound; ++d) {
                    uint8_t c = entry.coeff(e - d);
                    if (c != 0) {
                        row[comp * (bound + 1) + d] = c;
                        nonzero = true;
                    }
                }
            }
            if (nonzero) rows.push_back(std::move(row));
        }
    }
    std::vector<int> pivot_col;
    size_t rank = 0;
    for (int col = 0; col < ncols && rank < rows.size(); ++col) {
        size_t sel = rank;
        while (sel < rows.size() && rows[sel][col] == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[rank], rows[sel]);
        uint8_t pinv = F.inv(rows[rank][col]);
        for (auto& v : rows[rank]) v = F.mul(v, pinv);
        for (size_t r2 = 0; r2 < rows.size(); ++r2) {
            if (r2 == rank || rows[r2][col] == 0) continue;
            uint8_t f = rows[r2][col];
            for (int cc = 0; cc < ncols; ++cc)
                rows[r2][cc] = F.sub(rows[r2][cc], F.mul(f, rows[rank][cc]));
        }
        pivot_col.push_back(col);
        ++rank;
    }
    std::vector<bool> is_pivot(ncols, false);
    for (int c : pivot_col) is_pivot[c] = true;
    int free_col = -1;
    for (int c = 0; c < ncols; ++c)
        if (!is_pivot[c]) {
            free_col = c;
            break;
        }
    if (free_col < 0) return {};
    std::vector<uint8_t> s(ncols, 0);
    s[free_col] = 1;
    for (size_t r = 0; r < rank; ++r) {
        uint8_t v = rows[r][free_col];
        if (v != 0) s[pivot_col[r]] = F.neg(v);
    }
    return s;
}

// Polynomial division in F_q[t] (both operands with lo() >= 0).
std::pair<FqLaurent, FqLaurent> poly_divmod(const FqLaurent& num, const FqLaurent& den,
                                            const FqConfig& F) {
    FqLaurent r = num, q;
    while (!r.is_zero() && r.hi() >= den.hi() && r.lo() >= 0) {
        uint8_t c = F.div(r.coeff(r.hi()), den.coeff(den.hi()));
        FqLaurent mono = FqLaurent::monomial(c, r.hi() - den.hi());
        q = q.add(mono, F);
        r = r.sub(mono.mul(den, F), F);
    }
    return {q, r};
}

struct Bezout {
    FqLaurent x, y; // x*u + y*v = 1
};

// Extended Euclid for coprime polynomials; throws when gcd is not a unit.
Bezout poly_bezout(const FqLaurent& u, const FqLaurent& v, const FqConfig& F) {
    FqLaurent r0 = u, r1 = v;
    FqLaurent x0 = FqLaurent::constant(1), x1;
    FqLaurent y0, y1 = FqLaurent::constant(1);
    while (!r1.is_zero()) {
        auto [q, r] = poly_divmod(r0, r1, F);
        FqLaurent nx = x0.sub(q.mul(x1, F), F);
        FqLaurent ny = y0.sub(q.mul(y1, F), F);
        r0 = r1;
        r1 = r;
        x0 = x1;
        x1 = nx;
        y0 = y1;
        y1 = ny;
    }
    if (r0.is_zero() || r0.lo() != 0 || r0.hi() != 0)
        throw std::logic_error("bezout: operands are not coprime");
    uint8_t s = F.inv(r0.coeff(0));
    return {x0.scale(s, F), y0.scale(s, F)};
}

// Mirror t -> 1/t, turning F_q[t^-1] data into F_q[t] data and back.
FqLaurent mirror(const FqLaurent& p, const FqConfig& F) {
    FqLaurent r;
    if (p.is_zero()) return r;
    for (int e = p.lo(); e <= p.hi(); ++e)
        if (p.coeff(e) != 0) r = r.add(FqLaurent::monomial(p.coeff(e), -e), F);
    return r;
}

bool in_poly_ring(const FqLaurent& p) { return p.is_zero() || p.lo() >= 0; }
bool in_inv_ring(const FqLaurent& p) { return p.is_zero() || p.hi() <= 0; }

} // namespace

Birkhoff birkhoff_factor(const FqLMat& g, const FqConfig& F, int window) {
    FqLaurent d = g.det(F);
    if (d.is_zero() || !d.is_monomial())
        throw NotABundle("transition matrix determinant is not a unit monomial");
    if (g.max_abs_degree() > window)
        throw WindowExceeded("transition matrix exceeds the degree window");
    const int m = d.lo(); // det = c * t^m

    // 1. maximal twist with a section: polynomial vector s, deg(g s) <= -a
    const int bound = 3 * window + 6;
    const int alpha_hi = 2 * window + 4;
    const int alpha_lo = -(2 * window + 4);
    int a = 0;
    std::vector<uint8_t> svec;
    bool found = false;
    for (int alpha = alpha_hi; alpha >= alpha_lo; --alpha) {
        svec = section_kernel(g, -alpha, bound, F);
        if (!svec.empty()) {
            a = alpha;
            found = true;
            break;
        }
    }
    if (!found) throw WindowExceeded("no destabilizing section within the window");

    FqLaurent s0, s1;
    for (int dd = 0; dd <= bound; ++dd) {
        if (svec[dd] != 0) s0 = s0.add(FqLaurent::monomial(svec[dd], dd), F);
        if (svec[bound + 1 + dd] != 0)
            s1 = s1.add(FqLaurent::monomial(svec[bound + 1 + dd], dd), F);
    }

    // 2. complete the section to U in GL_2(F_q[t]); maximality of a makes
    //    (s0, s1) coprime, which poly_bezout checks
    Bezout bz = poly_bezout(s0, s1, F);
    FqLMat U; // first column (s0, s1), det = 1
    U.at(0, 0) = s0;
    U.at(1, 0) = s1;
    U.at(0, 1) = bz.y.scale(F.neg(1), F);
    U.at(1, 1) = bz.x;

    // 3. w = t^a (g s) lives in F_q[t^-1]^2 and is primitive there; complete
    //    to V in GL_2(F_q[t^-1]) via the mirrored Euclid
    FqLaurent w0 = g.at(0, 0).mul(s0, F).add(g.at(0, 1).mul(s1, F), F).shifted(a);
    FqLaurent w1 = g.at(1, 0).mul(s0, F).add(g.at(1, 1).mul(s1, F), F).shifted(a);
    if (!in_inv_ring(w0) || !in_inv_ring(w1))
        throw std::logic_error("birkhoff: twisted section escapes F_q[1/t]");
    Bezout bzm = poly_bezout(mirror(w0, F), mirror(w1, F), F);
    FqLMat V; // first column (w0, w1), det = 1, entries in F_q[t^-1]
    V.at(0, 0) = w0;
    V.at(1, 0) = w1;
    V.at(0, 1) = mirror(bzm.y, F).scale(F.neg(1), F);
    V.at(1, 1) = mirror(bzm.x, F);

    // 4. M = V^{-1} g U is upper triangular: first column t^{-a} e_1
    FqLMat Vinv; // adjugate, det(V) = 1
    Vinv.at(0, 0) = V.at(1, 1);
    Vinv.at(0, 1) = V.at(0, 1).scale(F.neg(1), F);
    Vinv.at(1, 0) = V.at(1, 0).scale(F.neg(1), F);
    Vinv.at(1, 1) = V.at(0, 0);
    FqLMat M = Vinv.mul(g, F).mul(U, F);
    if (!(M.at(0, 0) == FqLaurent::monomial(1, -a)) || !M.at(1, 0).is_zero())
        throw std::logic_error("birkhoff: unexpected first column");
    FqLaurent gamma = M.at(1, 1);
    if (gamma.is_zero() || !gamma.is_monomial() || gamma.lo() != m + a)
        throw std::logic_error("birkhoff: bad second diagonal entry");
    const int b_exp = m + a;

    // 5. clear beta = M(0,1): exponents >= -a by a column op over F_q[t],
    //    the rest (<= b_exp, since -a <= b_exp + 1) by a row op over F_q[1/t]
    FqLaurent beta = M.at(0, 1);
    FqLaurent col_part, row_part;
    if (!beta.is_zero()) {
        for (int e = beta.lo(); e <= beta.hi(); ++e) {
            uint8_t c = beta.coeff(e);
            if (c == 0) continue;
            if (e >= -a)
                col_part = col_part.add(FqLaurent::monomial(c, e), F);
            else
                row_part = row_part.add(FqLaurent::monomial(c, e), F);
        }
    }
    FqLaurent psi = col_part.shifted(a); // C2 -> C2 - psi*C1 kills col_part
    FqLaurent phi =
        row_part.shifted(-b_exp).scale(F.inv(gamma.coeff(b_exp)), F); // R1 -> R1 - phi*R2
    if (!in_poly_ring(psi) || !in_inv_ring(phi))
        throw std::logic_error("birkhoff: clearing operators out of their rings");

    FqLMat Er = FqLMat::identity(); // row op
    Er.at(0, 1) = phi.scale(F.neg(1), F);
    FqLMat ErInv = FqLMat::identity();
    ErInv.at(0, 1) = phi;
    FqLMat Ec = FqLMat::identity(); // column op
    Ec.at(0, 1) = psi.scale(F.neg(1), F);
    FqLMat EcInv = FqLMat::identity();
    EcInv.at(0, 1) = psi;

    FqLMat D = Er.mul(M, F).mul(Ec, F);
    if (!D.at(0, 1).is_zero() || !D.at(1, 0).is_zero())
        throw std::logic_error("birkhoff: clearing failed");

    // 6. fold the scalar of gamma into the polynomial side and assemble
    //    g = V M U^{-1} = (V Er^{-1}) D (Ec^{-1} U^{-1})
    uint8_t cg = gamma.coeff(b_exp);
    FqLMat scale_fix = FqLMat::from_units(1, 0, 0, cg);
    // D = diag(t^{-a}, cg t^{b_exp}) = diag(t^{-a}, t^{b_exp}) * scale_fix

    FqLMat Uinv; // adjugate of U, det(U) = 1
    Uinv.at(0, 0) = U.at(1, 1);
    Uinv.at(0, 1) = U.at(0, 1).scale(F.neg(1), F);
    Uinv.at(1, 0) = U.at(1, 0).scale(F.neg(1), F);
    Uinv.at(1, 1) = U.at(0, 0);

    Birkhoff out;
    out.u_minus = V.mul(ErInv, F);
    out.k0 = -a;
    out.k1 = b_exp;
    out.u_plus = scale_fix.mul(EcInv.mul(Uinv, F), F);

    // exactness and ring membership are cheap; verify unconditionally
    for (auto& e : out.u_minus.a)
        if (!in_inv_ring(e)) throw std::logic_error("birkhoff: u_minus not in F_q[1/t]");
    for (auto& e : out.u_plus.a)
        if (!in_poly_ring(e)) throw std::logic_error("birkhoff: u_plus not in F_q[t]");
    FqLMat recon = out.u_minus
                       .mul(FqLMat::diag(FqLaurent::monomial(1, out.k0),
                                         FqLaurent::monomial(1, out.k1)),
                            F)
                       .mul(out.u_plus, F);
    if (!(recon == g)) throw std::logic_error("birkhoff: reconstruction mismatch");
    if (out.k0 > out.k1) throw std::logic_error("birkhoff: exponents out of order");
    return out;
}

int splitting_type(const FqLMat& g, const FqConfig& F, int window) {
    Birkhoff b = birkhoff_factor(g, F, window);
    return b.k1 - b.k0;
}

FqLaurent laurent_div_exact(const FqLaurent& p, const FqLaurent& q, const FqConfig& F) {
    if (q.is_zero()) throw ZeroDivisor("laurent_div_exact: zero divisor");
    if (p.is_zero()) return {};
    const int shift = p.lo();
    auto [quot, rem] = poly_divmod(p.shifted(-shift), q.shifted(-q.lo()), F);
    if (!rem.is_zero()) throw std::logic_error("laurent_div_exact: inexact division");
    return quot.shifted(shift - q.lo());
}

} // namespace bunloc::fq
