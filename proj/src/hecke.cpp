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

#include "bunloc/hecke.hpp"

#include <sstream>

namespace bunloc::hecke {

namespace {

bool parity_ok(GroupKind kind, const DihedralElement& g) {
    return kind == GroupKind::PGL2 || (g.n % 2 == 0);
}

void require_parity(GroupKind kind, const DihedralElement& g) {
    if (!parity_ok(kind, g))
        throw InvalidClass("odd translation part is not an SL2 affine Weyl element");
}

} // namespace

DihedralElement dmul(const DihedralElement& g, const DihedralElement& h) {
    // (g*h)(u) = h(g(u)) with g(u) = eps*u + n
    return {h.eps * g.n + h.n, g.eps * h.eps};
}

DihedralElement dinv(const DihedralElement& g) { return {-g.eps * g.n, g.eps}; }

GroupAlgebraElement GroupAlgebraElement::basis(GroupKind kind, DihedralElement g,
                                               long long coeff) {
    require_parity(kind, g);
    GroupAlgebraElement e(kind);
    e.add_term(g, coeff);
    return e;
}

void GroupAlgebraElement::add_term(DihedralElement g, long long coeff) {
    if (coeff == 0) return;
    require_parity(kind_, g);
    auto [it, fresh] = terms_.emplace(g, 0);
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
    (void)fresh;
}

GroupAlgebraElement GroupAlgebraElement::operator+(const GroupAlgebraElement& o) const {
    if (kind_ != o.kind_) throw InvalidClass("group kinds differ");
    GroupAlgebraElement r = *this;
    for (auto& [g, c] : o.terms_) r.add_term(g, c);
    return r;
}

GroupAlgebraElement GroupAlgebraElement::operator-(const GroupAlgebraElement& o) const {
    if (kind_ != o.kind_) throw InvalidClass("group kinds differ");
    GroupAlgebraElement r = *this;
    for (auto& [g, c] : o.terms_) r.add_term(g, -c);
    return r;
}

GroupAlgebraElement GroupAlgebraElement::scaled(long long c) const {
    GroupAlgebraElement r(kind_);
    if (c != 0)
        for (auto& [g, k] : terms_) r.add_term(g, c * k);
    return r;
}

std::string GroupAlgebraElement::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto& [g, c] : terms_) {
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        long long a = c < 0 ? -c : c;
        if (a != 1) out << a << "*";
        out << "(" << g.n << "," << (g.eps > 0 ? "+" : "-") << ")";
    }
    return out.str();
}

GroupAlgebraElement ga_mul(const GroupAlgebraElement& u, const GroupAlgebraElement& v) {
    if (u.kind() != v.kind()) throw InvalidClass("ga_mul: group kinds differ");
    GroupAlgebraElement r(u.kind());
    for (auto& [g, c] : u.terms())
        for (auto& [h, d] : v.terms()) r.add_term(dmul(g, h), c * d);
    return r;
}

GroupAlgebraElement ga_inverse_of_group_element(const GroupAlgebraElement& u) {
    if (u.terms().size() != 1 || u.terms().begin()->second != 1)
        throw InvalidClass("not a group element");
    return GroupAlgebraElement::basis(u.kind(), dinv(u.terms().begin()->first));
}

GroupAlgebraElement ga_pow(const GroupAlgebraElement& u, long long k) {
    GroupAlgebraElement base = k >= 0 ? u : ga_inverse_of_group_element(u);
    long long reps = k >= 0 ? k : -k;
    GroupAlgebraElement acc =
        GroupAlgebraElement::basis(u.kind(), dihedral_identity());
    for (long long i = 0; i < reps; ++i) acc = ga_mul(acc, base);
    return acc;
}

GroupAlgebraElement k0_class(K0Name name, GroupKind kind) {
    switch (name) {
        case K0Name::delta:
            return GroupAlgebraElement::basis(kind, dihedral_identity());
        case K0Name::T0_star:
        case K0Name::T0_shriek:
            // both distinguished triangles force the class of r_0
            return GroupAlgebraElement::basis(kind, reflection_doubled(0));
        case K0Name::T1_star:
            if (kind != GroupKind::SL2)
                throw InvalidClass("T1_star is an SL2 generator");
            return GroupAlgebraElement::basis(kind, reflection_doubled(2));
        case K0Name::T_half:
            if (kind != GroupKind::PGL2)
                throw InvalidClass("T_half is a PGL2 generator");
            return GroupAlgebraElement::basis(kind, reflection_doubled(1));
        case K0Name::Avg: {
            GroupAlgebraElement avg =
                GroupAlgebraElement::basis(kind, reflection_doubled(0));
            avg.add_term(dihedral_identity(), -1);
            return avg;
        }
    }
    throw InvalidClass("unknown class name");
}

GroupAlgebraElement k0_wakimoto(long long k, GroupKind kind) {
    if (kind == GroupKind::SL2 && (k % 2) != 0)
        throw InvalidClass("SL2 Wakimoto classes have even index");
    return GroupAlgebraElement::basis(kind, translation(k));
}

CheckReport waki_monoid_check(int kmax) {
    if (kmax < 1) throw std::invalid_argument("waki_monoid_check: kmax >= 1 required");
    CheckReport rep("hecke.wakimoto-monoid");
    for (GroupKind kind : {GroupKind::SL2, GroupKind::PGL2}) {
        const int step = kind == GroupKind::SL2 ? 2 : 1;
        const char* kn = kind == GroupKind::SL2 ? "sl2" : "pgl2";
        bool additive = true, inverse = true, conj = true;
        std::string first_bad;
        for (int a = -kmax; a <= kmax; a += step) {
            for (int b = -kmax; b <= kmax; b += step) {
                auto lhs = ga_mul(k0_wakimoto(a, kind), k0_wakimoto(b, kind));
                if (!(lhs == k0_wakimoto(a + b, kind))) {
                    additive = false;
                    if (first_bad.empty())
                        first_bad = "(" + std::to_string(a) + "," + std::to_string(b) + ")";
                }
            }
            auto prod = ga_mul(k0_wakimoto(a, kind), k0_wakimoto(-a, kind));
            if (!(prod == k0_class(K0Name::delta, kind))) inverse = false;
            auto r0 = k0_class(K0Name::T0_star, kind);
            auto c = ga_mul(ga_mul(r0, k0_wakimoto(a, kind)), r0);
            if (!(c == k0_wakimoto(-a, kind))) conj = false;
        }
        rep.add(std::string("monoid-additivity-") + kn, additive, "J(a)J(b) = J(a+b)",
                additive ? "holds" : "fails at " + first_bad, "", "wakimoto");
        rep.add(std::string("translation-inverses-") + kn, inverse, "J(a)J(-a) = delta",
                inverse ? "holds" : "fails", "", "wakimoto");
        rep.add(std::string("reflection-conjugation-") + kn, conj,
                "r_0 J(k) r_0 = J(-k)", conj ? "holds" : "fails", "", "wakimoto");
    }
    return rep;
}

EisVector eis_basis(int lambda) { return {{lambda, 1}}; }

EisVector eis_action(const GroupAlgebraElement& g, const EisVector& v) {
    for (auto& [el, c] : g.terms())
        if (el.eps != +1)
            throw NotTranslation("reflection classes do not act on Eisenstein classes");
    EisVector out;
    for (auto& [el, c] : g.terms()) {
        for (auto& [lambda, k] : v) {
            long long target = lambda + el.n;
            out[static_cast<int>(target)] += c * k;
            if (out[static_cast<int>(target)] == 0) out.erase(static_cast<int>(target));
        }
    }
    return out;
}

AsphericalModule::Vec AsphericalModule::act(const GroupAlgebraElement& g,
                                            const Vec& v) const {
    if (g.kind() != kind_) throw InvalidClass("module kind mismatch");
    // class of the coset w{e, r_0}: translation (n,+) and reflection (n,-)
    // represent the cosets [n] and [-n] respectively
    Vec out;
    auto add = [&out](long long idx, long long c) {
        if (c == 0) return;
        auto [it, fresh] = out.emplace(idx, 0);
        it->second += c;
        if (it->second == 0) out.erase(it);
        (void)fresh;
    };
    for (auto& [el, c] : g.terms()) {
        for (auto& [k, m] : v) {
            DihedralElement w = dmul(el, translation(k)); // left action on Z[W]
            long long coset = w.eps > 0 ? w.n : -w.n;
            add(coset, c * m);
        }
    }
    return out;
}

GroupAlgebraElement central_class(
    const std::vector<std::pair<long long, long long>>& weights, GroupKind kind) {
    // weight multiset must be stable under negation
    std::map<long long, long long> tally;
    for (auto& [w, m] : weights) tally[w] += m;
    for (auto& [w, m] : tally) {
        auto it = tally.find(-w);
        if (it == tally.end() || it->second != m)
            throw NotSelfDual("weight multiset is not negation-symmetric");
    }
    GroupAlgebraElement out(kind);
    for (auto& [w, m] : tally) {
        if (m == 0) continue;
        out = out + k0_wakimoto(w, kind).scaled(m);
    }
    return out;
}

} // namespace bunloc::hecke
