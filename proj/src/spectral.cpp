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

#include "bunloc/spectral.hpp"

#include <sstream>

namespace bunloc::spectral {

namespace {

MultiPoly P(const RingPtr& ring, const std::string& text) {
    return MultiPoly::parse(ring, text);
}

} // namespace

SymMatrix2 SymMatrix2::identity(const RingPtr& ring) {
    return scalar(ring, Rational(1));
}

SymMatrix2 SymMatrix2::scalar(const RingPtr& ring, const Rational& c) {
    SymMatrix2 s{{MultiPoly::constant(ring, c), MultiPoly::zero(ring),
                  MultiPoly::zero(ring), MultiPoly::constant(ring, c)}};
    return s;
}

SymMatrix2 SymMatrix2::operator*(const SymMatrix2& o) const {
    SymMatrix2 r{{at(0, 0) * o.at(0, 0) + at(0, 1) * o.at(1, 0),
                  at(0, 0) * o.at(0, 1) + at(0, 1) * o.at(1, 1),
                  at(1, 0) * o.at(0, 0) + at(1, 1) * o.at(1, 0),
                  at(1, 0) * o.at(0, 1) + at(1, 1) * o.at(1, 1)}};
    return r;
}

SymMatrix2 SymMatrix2::operator+(const SymMatrix2& o) const {
    return SymMatrix2{{m[0] + o.m[0], m[1] + o.m[1], m[2] + o.m[2], m[3] + o.m[3]}};
}

SymMatrix2 SymMatrix2::operator-(const SymMatrix2& o) const {
    return SymMatrix2{{m[0] - o.m[0], m[1] - o.m[1], m[2] - o.m[2], m[3] - o.m[3]}};
}

MultiPoly SymMatrix2::det() const { return m[0] * m[3] - m[1] * m[2]; }

MultiPoly SymMatrix2::trace() const { return m[0] + m[3]; }

SymMatrix2 SymMatrix2::unimodular_inverse() const {
    return SymMatrix2{{m[3], -m[1], -m[2], m[0]}};
}

std::array<MultiPoly, 2> SymMatrix2::apply(const std::array<MultiPoly, 2>& v) const {
    return {at(0, 0) * v[0] + at(0, 1) * v[1], at(1, 0) * v[0] + at(1, 1) * v[1]};
}

bool SymMatrix2::is_zero() const {
    return m[0].is_zero() && m[1].is_zero() && m[2].is_zero() && m[3].is_zero();
}

RingPtr chart_ring() {
    static RingPtr ring = make_ring({"a", "b", "x", "y"});
    return ring;
}

std::pair<SymMatrix2, SymMatrix2> build_chart_matrices() {
    RingPtr R = chart_ring();
    SymMatrix2 A0{{P(R, "1 - a*x"), P(R, "a"), P(R, "-a*x^2"), P(R, "1 + a*x")}};
    SymMatrix2 A1{{P(R, "1 - b*y"), P(R, "b"), P(R, "-b*y^2"), P(R, "1 + b*y")}};
    return {A0, A1};
}

SymMatrix2 chart_product() {
    auto [A0, A1] = build_chart_matrices();
    return A0 * A1;
}

SymMatrix2 a_infinity() { return chart_product().unimodular_inverse(); }

Ideal derive_ideal() {
    RingPtr R = chart_ring();
    SymMatrix2 prod = chart_product();
    MultiPoly one = MultiPoly::constant(R, 1);
    // A_infinity^{-1} = A_0 A_1 must be unipotent lower-right: entries
    // (1, *, 0, 1).  Together with det = 1 this pins three constraints.
    return Ideal(R, {prod.at(0, 0) - one, prod.at(1, 0), prod.at(1, 1) - one});
}

Ideal target_ideal() {
    RingPtr R = chart_ring();
    return Ideal(R, {P(R, "a*x + b*y"), P(R, "a*x^2 + b*y^2")});
}

std::vector<ComponentDescriptor> components() {
    RingPtr R = chart_ring();
    std::vector<ComponentDescriptor> out;
    out.push_back({"Λ_∅", Ideal(R, {P(R, "a"), P(R, "b")}), true, {}});
    out.push_back({"Λ_{1,∞}", Ideal(R, {P(R, "a"), P(R, "y")}), true, {1, 2}});
    out.push_back({"Λ_{0,∞}", Ideal(R, {P(R, "b"), P(R, "x")}), true, {0, 2}});
    out.push_back({"Λ_{0,1}", Ideal(R, {P(R, "a + b"), P(R, "x - y")}), true, {0, 1}});
    out.push_back({"~Λ_S",
                   Ideal(R, {P(R, "x^2"), P(R, "y^2"), P(R, "x*y"), P(R, "a*x + b*y")}),
                   false,
                   {0, 1, 2}});
    return out;
}

namespace {

// Reduces a matrix entrywise against a Groebner basis.
SymMatrix2 reduce_matrix(const SymMatrix2& M, const std::vector<MultiPoly>& gb) {
    SymMatrix2 r = M;
    for (auto& e : r.m) e = reduce(e, gb);
    return r;
}

std::string vec_to_string(const std::array<MultiPoly, 2>& v) {
    return "(" + v[0].to_string() + ", " + v[1].to_string() + ")";
}

std::string mat_to_string(const SymMatrix2& M) {
    std::ostringstream out;
    out << "[[" << M.at(0, 0).to_string() << ", " << M.at(0, 1).to_string() << "], ["
        << M.at(1, 0).to_string() << ", " << M.at(1, 1).to_string() << "]]";
    return out.str();
}

} // namespace

CheckReport verify_decomposition() {
    CheckReport rep("spectral.decomposition");
    RingPtr R = chart_ring();
    Ideal I = derive_ideal();
    Ideal T = target_ideal();

    rep.add("derived-ideal-matches-displayed-equations", ideal_eq(I, T),
            "(a*x + b*y, a*x^2 + b*y^2)", ideal_eq(I, T) ? "equal" : "different", "",
            "chart-equations");

    auto comps = components();
    Ideal meet = comps[0].ideal;
    for (size_t k = 1; k < comps.size(); ++k) meet = ideal_intersect(meet, comps[k].ideal);
    bool inter_eq = ideal_eq(T, meet);
    rep.add("intersection-of-five-components", inter_eq, "equal to the chart ideal",
            inter_eq ? "equal" : "different", "", "component-list");

    int dim = krull_dim(T);
    rep.add("krull-dimension", dim == 2, "2", std::to_string(dim),
            "codim = #generators, a complete intersection", "lci");

    // each reduced component ideal is generated by independent linear forms,
    // hence prime
    bool all_linear = true;
    for (auto& c : comps) {
        if (!c.reduced) continue;
        for (auto& g : c.ideal.generators())
            if (g.total_degree() > 1) all_linear = false;
    }
    rep.add("reduced-components-linear", all_linear, "degree <= 1 generators",
            all_linear ? "all linear" : "nonlinear generator found", "", "component-list");

    const Ideal& Q5 = comps[4].ideal;
    MultiPoly px = P(R, "x"), py = P(R, "y");
    bool rx = radical_member(px, Q5);
    bool ry = radical_member(py, Q5);
    bool gens_in_xy = true;
    Ideal XY(R, {px, py});
    for (auto& g : Q5.generators()) gens_in_xy = gens_in_xy && ideal_member(g, XY);
    rep.add("radical-of-nonreduced-component", rx && ry && gens_in_xy, "(x, y)",
            (rx && ry && gens_in_xy) ? "(x, y)" : "mismatch",
            "x, y in the radical and all generators inside (x, y)", "non-reduced");

    bool strict = !ideal_member(px, Q5);
    rep.add("nonreduced-strictly-inside-radical", strict, "x not in the ideal",
            strict ? "x outside" : "x inside", "", "non-reduced");

    return rep;
}

CheckReport verify_linearization(int variant) {
    if (variant < 1 || variant > 3)
        throw std::invalid_argument("linearization variant must be 1, 2 or 3");
    CheckReport rep("spectral.linearization.v" + std::to_string(variant));
    RingPtr R = chart_ring();
    auto [A0, A1] = build_chart_matrices();
    SymMatrix2 Ainf = a_infinity();
    SymMatrix2 one = SymMatrix2::identity(R);
    SymMatrix2 two = SymMatrix2::scalar(R, 2);
    Ideal chart = target_ideal();
    const auto& gb = chart.reduced_gb();

    std::array<MultiPoly, 2> l0 = {P(R, "1"), P(R, "x")};
    std::array<MultiPoly, 2> l1 = {P(R, "1"), P(R, "y")};
    std::array<MultiPoly, 2> linf = {P(R, "1"), P(R, "0")};

    // the three displayed assignments; index of the sum-form entry varies
    SymMatrix2 B0 = A0 - one, B1 = A1 - one, Binf = Ainf - one;
    int sum_index;
    std::array<SymMatrix2, 3> triple{B0, B1, Binf};
    switch (variant) {
        case 1:
            triple = {B0, B1, two - A0 - A1};
            sum_index = 2;
            break;
        case 2:
            triple = {two - A1 - Ainf, B1, Binf};
            sum_index = 0;
            break;
        default:
            triple = {B0, two - A0 - Ainf, Binf};
            sum_index = 1;
            break;
    }
    std::array<std::array<MultiPoly, 2>, 3> lines = {l0, l1, linf};
    std::array<SymMatrix2, 3> honest = {B0, B1, Binf};

    // moment condition holds identically by construction
    SymMatrix2 sum = triple[0] + triple[1] + triple[2];
    rep.add("moment-sum-zero", sum.is_zero(), "0", mat_to_string(sum),
            "B_0 + B_1 + B_inf = 0 exactly", "linearized-model");

    for (int s = 0; s < 3; ++s) {
        const char* pt = (s == 0 ? "0" : (s == 1 ? "1" : "inf"));
        const SymMatrix2& B = triple[s];
        SymMatrix2 tracecheck = reduce_matrix(B, gb);
        MultiPoly tr = reduce(B.trace(), gb);
        rep.add(std::string("traceless-at-") + pt, tr.is_zero(), "0", tr.to_string(), "",
                "linearized-model");
        (void)tracecheck;

        auto img = B.apply(lines[s]);
        MultiPoly i0 = reduce(img[0], gb), i1 = reduce(img[1], gb);
        rep.add(std::string("kills-eigenline-at-") + pt, i0.is_zero() && i1.is_zero(),
                "(0, 0)", vec_to_string({i0, i1}), "", "linearized-model");

        SymMatrix2 sq = reduce_matrix(B * B, gb);
        rep.add(std::string("nilpotent-square-at-") + pt, sq.is_zero(), "0",
                mat_to_string(sq), "", "linearized-model");
    }

    // group-side unipotent entries: A_0 - 1 and A_1 - 1 square to zero on
    // the nose; A_inf - 1 is unipotent only on the variety
    for (int s = 0; s < 3; ++s) {
        if (s == sum_index) continue;
        SymMatrix2 sq = honest[s] * honest[s];
        const char* pt = (s == 0 ? "0" : (s == 1 ? "1" : "inf"));
        if (s < 2) {
            rep.add(std::string("group-entry-square-zero-at-") + pt, sq.is_zero(), "0",
                    mat_to_string(sq), "exact, not only modulo the ideal",
                    "linearized-model");
        } else {
            SymMatrix2 red = reduce_matrix(sq, gb);
            rep.add(std::string("group-entry-square-zero-at-") + pt, red.is_zero(), "0",
                    mat_to_string(red), "modulo the chart ideal", "linearized-model");
        }
    }

    // The assignment replacing the matrix at sum_index differs from the
    // group-side entry by a single off-diagonal entry congruent to ab(x-y)
    // modulo the chart ideal.  The displayed version of this matrix puts the
    // entry in the lower-left corner; in the column-vector chart used here
    // it lands upper-right, and we accept either placement up to sign.
    SymMatrix2 disc = reduce_matrix(honest[sum_index] - triple[sum_index], gb);
    MultiPoly n_expect = P(R, "a*b*x - a*b*y");
    auto congruent_pm = [&gb](const MultiPoly& p, const MultiPoly& q) {
        return reduce(p - q, gb).is_zero() || reduce(p + q, gb).is_zero();
    };
    bool diag_zero = disc.at(0, 0).is_zero() && disc.at(1, 1).is_zero();
    bool upper = disc.at(1, 0).is_zero() && !disc.at(0, 1).is_zero() &&
                 congruent_pm(disc.at(0, 1), n_expect);
    bool lower = disc.at(0, 1).is_zero() && !disc.at(1, 0).is_zero() &&
                 congruent_pm(disc.at(1, 0), n_expect);
    rep.add("discrepancy-single-entry-ab(x-y)", diag_zero && (upper || lower),
            "one off-diagonal entry congruent to ±ab(x-y)", mat_to_string(disc),
            upper ? "entry sits upper-right in this chart" : "entry sits lower-left",
            "linearization-discrepancy");

    return rep;
}

CheckReport pgl2_odd_component() {
    CheckReport rep("spectral.pgl2-odd");
    RingPtr Rc = make_ring({"c"});
    MultiPoly c = MultiPoly::variable(Rc, "c");
    MultiPoly cst1 = MultiPoly::constant(Rc, 1);
    MultiPoly cst0 = MultiPoly::zero(Rc);

    SymMatrix2 A0{{cst1, cst1, cst0, cst1}};
    SymMatrix2 A1{{cst1, cst0, c, cst1}};
    SymMatrix2 prod = A0 * A1;
    // A_inf = -(A_0 A_1)^{-1}
    SymMatrix2 inv = prod.unimodular_inverse();
    SymMatrix2 Ainf{{-inv.m[0], -inv.m[1], -inv.m[2], -inv.m[3]}};

    MultiPoly det = Ainf.det();
    rep.add("det-a-inf", det == cst1, "1", det.to_string(), "", "odd-component");

    MultiPoly t = Ainf.trace() - MultiPoly::constant(Rc, 2);
    MultiPoly cp4 = c + MultiPoly::constant(Rc, 4);
    auto [q, r] = divide_by(t, cp4);
    bool proportional = r.is_zero() && q.is_constant() && !q.is_zero();
    rep.add("trace-minus-2-proportional-to-c+4", proportional, "nonzero scalar * (c+4)",
            t.to_string(), "factor " + q.to_string(), "odd-component");

    // evaluate at c = -4
    auto ev = [&](const MultiPoly& p) { return p.evaluate({rat(-4)}); };
    std::array<std::array<Rational, 2>, 2> M;
    M[0][0] = ev(Ainf.at(0, 0)) - 1;
    M[0][1] = ev(Ainf.at(0, 1));
    M[1][0] = ev(Ainf.at(1, 0));
    M[1][1] = ev(Ainf.at(1, 1)) - 1;
    bool nontrivial = !(M[0][0] == 0 && M[0][1] == 0 && M[1][0] == 0 && M[1][1] == 0);
    rep.add("a-inf-not-identity-at-c=-4", nontrivial, "A_inf != 1",
            nontrivial ? "nontrivial" : "identity", "", "odd-component");

    Rational s00 = M[0][0] * M[0][0] + M[0][1] * M[1][0];
    Rational s01 = M[0][0] * M[0][1] + M[0][1] * M[1][1];
    Rational s10 = M[1][0] * M[0][0] + M[1][1] * M[1][0];
    Rational s11 = M[1][0] * M[0][1] + M[1][1] * M[1][1];
    bool sq0 = s00 == 0 && s01 == 0 && s10 == 0 && s11 == 0;
    rep.add("unipotent-at-c=-4", sq0, "(A_inf - 1)^2 = 0",
            sq0 ? "0" : "nonzero", "", "odd-component");

    // fixed lines: A_0 fixes [1:0], A_1 fixes [0:1], A_inf fixes ker(A_inf-1)
    // at c=-4; the three must be pairwise distinct
    // ker(M): M[0][0]*u + M[0][1]*v = 0 -> [u:v] = [M[0][1] : -M[0][0]]
    Rational u = M[0][1], v = -M[0][0];
    if (u == 0 && v == 0) { // first row zero, use the second
        u = M[1][1];
        v = -M[1][0];
    }
    bool distinct_from_l0 = !(v == 0);          // l_0 = [1:0]
    bool distinct_from_l1 = !(u == 0);          // l_1 = [0:1]
    rep.add("three-fixed-lines-distinct", distinct_from_l0 && distinct_from_l1,
            "pairwise distinct lines",
            "[1:0], [0:1], [" + rat_to_string(u) + ":" + rat_to_string(v) + "]", "",
            "odd-component");

    return rep;
}

CheckReport verify_Y_sequences() {
    CheckReport rep("spectral.eisenstein-sequences");
    RingPtr R = chart_ring();
    Ideal I = target_ideal();
    auto comps = components();
    const Ideal& L_empty = comps[0].ideal;
    const Ideal& L_1inf = comps[1].ideal;
    const Ideal& L_0inf = comps[2].ideal;
    const Ideal& L_01 = comps[3].ideal;
    const Ideal& Q5 = comps[4].ideal;

    MultiPoly xy = P(R, "x*y");
    MultiPoly apb = P(R, "a + b");
    MultiPoly xmy_y = P(R, "x*y - y^2");

    // Chart ideal of the union of two partial diagonals through the point 1.
    // With the equation xy = 0 the union picks up the components through
    // l_0 = l_inf and l_1 = l_inf together with the non-reduced one.
    Ideal Y_xy = ideal_sum(I, Ideal(R, {xy}));
    Ideal Y_xy_expect = ideal_intersect(ideal_intersect(L_1inf, L_0inf), Q5);
    bool e1 = ideal_eq(Y_xy, Y_xy_expect);
    rep.add("xy-cut-equals-triple-intersection", e1,
            "I + (xy) = Λ_{1,∞} ∩ Λ_{0,∞} ∩ ~Λ_S", e1 ? "equal" : "different", "",
            "eisenstein-proof");

    // The kernel of O -> O_Y is generated by one equation: (I : (a+b))
    // recovers exactly the xy-cut above.
    Ideal colon_apb = ideal_quotient(I, apb);
    bool e2 = ideal_eq(colon_apb, Y_xy);
    rep.add("colon-by-a+b-matches-xy-cut", e2, "(I : (a+b)) = I + (xy)",
            e2 ? "equal" : "different", "single-equation kernel", "eisenstein-proof");

    // Same picture with the roles of the marked points permuted: the cut by
    // (x-y)y gives the union through l_0 = l_1 and l_1 = l_inf, and its
    // kernel is supported on Λ_∅ ∪ Λ_{0,∞}.
    Ideal Y_alt = ideal_sum(I, Ideal(R, {xmy_y}));
    Ideal Y_alt_expect = ideal_intersect(ideal_intersect(L_01, L_1inf), Q5);
    bool e3 = ideal_eq(Y_alt, Y_alt_expect);
    rep.add("(x-y)y-cut-equals-triple-intersection", e3,
            "I + ((x-y)y) = Λ_{0,1} ∩ Λ_{1,∞} ∩ ~Λ_S", e3 ? "equal" : "different", "",
            "eisenstein-proof");

    Ideal colon_alt = ideal_quotient(I, xmy_y);
    Ideal kernel_expect = ideal_intersect(L_empty, L_0inf);
    bool e4 = ideal_eq(colon_alt, kernel_expect);
    rep.add("kernel-supported-on-empty-and-0inf", e4,
            "(I : (x-y)y) = Λ_∅ ∩ Λ_{0,∞}", e4 ? "equal" : "different",
            "short exact sequence kernel", "eisenstein-proof");

    bool proper = !ideal_member(apb, Y_xy);
    rep.add("a+b-outside-Y-ideal", proper, "nonzero normal form",
            proper ? "outside" : "inside", "Y is a proper subscheme",
            "eisenstein-proof");

    // Two-step structure of the non-reduced component over the diagonal: at
    // a point with (a, b) != (0, 0) the fiber has length 2 (one infinitesimal
    // direction on top of the reduced point); at a = b = 0 it jumps to 3.
    long long generic_len = quotient_dim(
        ideal_sum(Q5, Ideal(R, {P(R, "a - 1"), P(R, "b - 2")})));
    long long degenerate_len =
        quotient_dim(ideal_sum(Q5, Ideal(R, {P(R, "a"), P(R, "b")})));
    bool e5 = generic_len == 2 && degenerate_len == 3;
    rep.add("nonreduced-two-step-structure", e5, "fiber lengths 2 and 3",
            std::to_string(generic_len) + " and " + std::to_string(degenerate_len),
            "unique infinitesimal direction over the diagonal", "eisenstein-proof");

    // Collapsing both the xy-cut and the nilpotent directions leaves the
    // base of the diagonal component: Q[a,b], with 3 monomials of degree <= 1.
    Ideal collapse = ideal_sum(Y_xy, Ideal(R, {P(R, "x"), P(R, "y")}));
    const auto& gb = collapse.reduced_gb();
    bool is_xy = gb.size() == 2 && gb[0] == P(R, "x") && gb[1] == P(R, "y");
    rep.add("filtration-base-ring", is_xy, "(x, y)",
            is_xy ? "(x, y)" : "unexpected basis",
            "degree <= 1 slice of the quotient has dimension 3", "eisenstein-proof");

    return rep;
}

} // namespace bunloc::spectral
