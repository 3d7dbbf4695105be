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

#include "bunloc/groebner.hpp"

#include <algorithm>
#include <list>
#include <set>

namespace bunloc {

Ideal::Ideal(RingPtr ring, std::vector<MultiPoly> generators)
    : ring_(std::move(ring)), gens_(std::move(generators)),
      cache_(std::make_shared<GbCache>()) {
    for (auto& g : gens_)
        if (!(*g.ring() == *ring_)) throw RingMismatch("generator in wrong ring");
}

const std::vector<MultiPoly>& Ideal::reduced_gb() const {
    std::call_once(cache_->flag, [this] { cache_->gb = buchberger(*this); });
    return cache_->gb;
}

bool Ideal::is_unit_ideal() const {
    const auto& gb = reduced_gb();
    return gb.size() == 1 && gb[0].is_constant() && !gb[0].is_zero();
}

bool Ideal::is_zero_ideal() const { return reduced_gb().empty(); }

MultiPoly reduce(const MultiPoly& p, const std::vector<MultiPoly>& basis) {
    if (basis.empty()) throw std::invalid_argument("reduce: empty basis");
    const RingPtr& ring = p.ring();
    const int n = ring->nvars();
    for (auto& g : basis)
        if (!(*g.ring() == *ring)) throw RingMismatch("basis element in wrong ring");

    MultiPoly rem = MultiPoly::zero(ring);
    MultiPoly work = p;
    while (!work.is_zero()) {
        const Monomial& lm = work.leading_monomial();
        bool hit = false;
        for (auto& g : basis) {
            if (g.is_zero()) continue;
            if (mono_divides(g.leading_monomial(), lm, n)) {
                Rational c = work.leading_coeff() / g.leading_coeff();
                Monomial q = mono_div(lm, g.leading_monomial(), n);
                work = work - g.term_multiple(q, c);
                hit = true;
                break;
            }
        }
        if (!hit) {
            // move the leading term to the remainder
            MultiPoly lt = MultiPoly::from_terms(
                ring, {{work.leading_monomial(), work.leading_coeff()}});
            rem = rem + lt;
            work = work - lt;
        }
    }
    return rem;
}

std::pair<MultiPoly, MultiPoly> divide_by(const MultiPoly& p, const MultiPoly& f) {
    if (f.is_zero()) throw ZeroDivisor("division by zero polynomial");
    const RingPtr& ring = p.ring();
    if (!(*f.ring() == *ring)) throw RingMismatch("divisor in wrong ring");
    const int n = ring->nvars();
    MultiPoly quot = MultiPoly::zero(ring);
    MultiPoly rem = MultiPoly::zero(ring);
    MultiPoly work = p;
    while (!work.is_zero()) {
        const Monomial& lm = work.leading_monomial();
        if (mono_divides(f.leading_monomial(), lm, n)) {
            Rational c = work.leading_coeff() / f.leading_coeff();
            Monomial q = mono_div(lm, f.leading_monomial(), n);
            MultiPoly qt = MultiPoly::from_terms(ring, {{q, c}});
            quot = quot + qt;
            work = work - f.term_multiple(q, c);
        } else {
            MultiPoly lt = MultiPoly::from_terms(
                ring, {{work.leading_monomial(), work.leading_coeff()}});
            rem = rem + lt;
            work = work - lt;
        }
    }
    return {quot, rem};
}

namespace {

MultiPoly s_poly(const MultiPoly& f, const MultiPoly& g) {
    const int n = f.ring()->nvars();
    Monomial l = mono_lcm(f.leading_monomial(), g.leading_monomial(), n);
    Monomial uf = mono_div(l, f.leading_monomial(), n);
    Monomial ug = mono_div(l, g.leading_monomial(), n);
    return f.term_multiple(uf, Rational(1) / f.leading_coeff()) -
           g.term_multiple(ug, Rational(1) / g.leading_coeff());
}

struct Pair {
    size_t i, j; // indices into the working basis, i < j
    Monomial lcm;
    int deg;
};

// Reduces a basis to the unique reduced Groebner basis: minimal leading
// terms, monic, tails fully reduced, sorted by descending leading monomial.
std::vector<MultiPoly> make_reduced(std::vector<MultiPoly> G, const PolyRing& R) {
    const int n = R.nvars();
    // minimality: drop g whose leading term is divisible by another's
    std::vector<MultiPoly> minimal;
    for (size_t i = 0; i < G.size(); ++i) {
        if (G[i].is_zero()) continue;
        bool redundant = false;
        for (size_t j = 0; j < G.size(); ++j) {
            if (i == j || G[j].is_zero()) continue;
            if (mono_divides(G[j].leading_monomial(), G[i].leading_monomial(), n)) {
                if (G[j].leading_monomial() == G[i].leading_monomial() && j > i) continue;
                redundant = true;
                break;
            }
        }
        if (!redundant) minimal.push_back(G[i]);
    }
    // full tail reduction
    std::vector<MultiPoly> out;
    for (size_t i = 0; i < minimal.size(); ++i) {
        std::vector<MultiPoly> others;
        for (size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        MultiPoly r = others.empty() ? minimal[i] : reduce(minimal[i], others);
        if (!r.is_zero()) out.push_back(r.scaled(Rational(1) / r.leading_coeff()));
    }
    std::sort(out.begin(), out.end(), [&R](const MultiPoly& u, const MultiPoly& v) {
        return mono_less(v.leading_monomial(), u.leading_monomial(), R);
    });
    return out;
}

} // namespace

std::vector<MultiPoly> buchberger(const Ideal& I) {
    const RingPtr& ring = I.ring();
    const PolyRing& R = *ring;
    const int n = R.nvars();

    std::vector<MultiPoly> G;
    for (auto& g : I.generators())
        if (!g.is_zero()) G.push_back(g);
    if (G.empty()) return {};

    // Gebauer-Moeller style pair bookkeeping (Becker-Weispfenning UPDATE).
    std::list<Pair> pairs;
    auto lcm_of = [&](size_t i, size_t j) {
        return mono_lcm(G[i].leading_monomial(), G[j].leading_monomial(), n);
    };
    auto push_with_update = [&](size_t h) {
        // candidate pairs (g, h) for g already present
        std::vector<Pair> C;
        for (size_t g = 0; g < h; ++g) {
            Monomial l = lcm_of(g, h);
            C.push_back({g, h, l, l.total_degree(n)});
        }
        std::vector<Pair> D;
        for (size_t k = 0; k < C.size(); ++k) {
            bool keep = mono_coprime(G[C[k].i].leading_monomial(),
                                     G[h].leading_monomial(), n);
            if (!keep) {
                bool dominated = false;
                for (size_t k2 = 0; k2 < C.size() && !dominated; ++k2)
                    if (k2 != k && mono_divides(C[k2].lcm, C[k].lcm, n) &&
                        !(C[k2].lcm == C[k].lcm && k2 > k))
                        dominated = true;
                for (auto& d : D)
                    if (dominated) break;
                    else if (mono_divides(d.lcm, C[k].lcm, n))
                        dominated = true;
                keep = !dominated;
            }
            if (keep) D.push_back(C[k]);
        }
        // drop pairs whose leading monomials are coprime (Buchberger 1st crit)
        std::vector<Pair> E;
        for (auto& d : D)
            if (!mono_coprime(G[d.i].leading_monomial(), G[h].leading_monomial(), n))
                E.push_back(d);
        // prune old pairs via the chain criterion with the new element
        for (auto it = pairs.begin(); it != pairs.end();) {
            const Monomial l = it->lcm;
            if (mono_divides(G[h].leading_monomial(), l, n) &&
                !(lcm_of(it->i, h) == l) && !(lcm_of(it->j, h) == l)) {
                it = pairs.erase(it);
            } else {
                ++it;
            }
        }
        for (auto& e : E) pairs.push_back(e);
    };

    for (size_t h = 1; h < G.size(); ++h) push_with_update(h);

    size_t guard = 0;
    while (!pairs.empty()) {
        if (++guard > 200000) throw std::runtime_error("buchberger: pair budget exceeded");
        // normal selection: smallest lcm degree first (deterministic tie-break)
        auto best = pairs.begin();
        for (auto it = pairs.begin(); it != pairs.end(); ++it)
            if (it->deg < best->deg ||
                (it->deg == best->deg && mono_less(it->lcm, best->lcm, R)))
                best = it;
        Pair p = *best;
        pairs.erase(best);

        MultiPoly s = s_poly(G[p.i], G[p.j]);
        if (s.is_zero()) continue;
        MultiPoly h = reduce(s, G);
        if (h.is_zero()) continue;
        G.push_back(h.scaled(Rational(1) / h.leading_coeff()));
        push_with_update(G.size() - 1);
    }

    return make_reduced(std::move(G), R);
}

bool ideal_member(const MultiPoly& p, const Ideal& I) {
    if (!(*p.ring() == *I.ring())) throw RingMismatch("ideal_member: ring mismatch");
    if (p.is_zero()) return true;
    const auto& gb = I.reduced_gb();
    if (gb.empty()) return false;
    return reduce(p, gb).is_zero();
}

bool ideal_eq(const Ideal& I, const Ideal& J) {
    if (!(*I.ring() == *J.ring())) throw RingMismatch("ideal_eq: ring mismatch");
    return I.reduced_gb() == J.reduced_gb();
}

Ideal ideal_sum(const Ideal& I, const Ideal& J) {
    if (!(*I.ring() == *J.ring())) throw RingMismatch("ideal_sum: ring mismatch");
    std::vector<MultiPoly> gens = I.generators();
    for (auto& g : J.generators()) gens.push_back(g);
    return Ideal(I.ring(), std::move(gens));
}

namespace {

// Fresh auxiliary variable for elimination tricks.
std::string aux_var_for(const PolyRing& R) {
    for (const char* cand : {"t", "c", "y", "x", "b", "a"})
        if (!R.has_var(cand)) return cand;
    throw std::invalid_argument("no free auxiliary variable available");
}

// Ring with the auxiliary variable first and lex order, so that leading
// terms free of the auxiliary variable certify elimination.
RingPtr elimination_ring(const PolyRing& R, const std::string& aux) {
    std::vector<std::string> vars = {aux};
    for (auto& v : R.vars()) vars.push_back(v);
    return make_ring(std::move(vars), MonomialOrder::lex);
}

bool involves_var(const MultiPoly& p, int idx) {
    for (auto& [m, c] : p.terms())
        if (m.e[idx] != 0) return true;
    return false;
}

// GB of the lifted generators, keeping only elements free of the auxiliary
// variable, mapped back to the original ring.
std::vector<MultiPoly> eliminate_aux(const RingPtr& ring2,
                                     std::vector<MultiPoly> lifted,
                                     const RingPtr& orig) {
    Ideal J(ring2, std::move(lifted));
    std::vector<MultiPoly> kept;
    for (auto& g : J.reduced_gb())
        if (!involves_var(g, 0)) kept.push_back(g.map_to_ring(orig));
    return kept;
}

} // namespace

Ideal ideal_intersect(const Ideal& I, const Ideal& J) {
    if (!(*I.ring() == *J.ring())) throw RingMismatch("ideal_intersect: ring mismatch");
    const RingPtr& ring = I.ring();
    const std::string aux = aux_var_for(*ring);
    RingPtr ring2 = elimination_ring(*ring, aux);
    MultiPoly t = MultiPoly::variable(ring2, aux);
    MultiPoly one_minus_t = MultiPoly::constant(ring2, 1) - t;
    std::vector<MultiPoly> lifted;
    for (auto& f : I.generators()) lifted.push_back(t * f.map_to_ring(ring2));
    for (auto& g : J.generators()) lifted.push_back(one_minus_t * g.map_to_ring(ring2));
    return Ideal(ring, eliminate_aux(ring2, std::move(lifted), ring));
}

Ideal ideal_quotient(const Ideal& I, const MultiPoly& f) {
    if (!(*f.ring() == *I.ring())) throw RingMismatch("ideal_quotient: ring mismatch");
    if (f.is_zero()) throw ZeroDivisor("ideal_quotient: zero divisor polynomial");
    // (I : f) = (1/f) * (I  cap  (f))
    Ideal K = ideal_intersect(I, Ideal(I.ring(), {f}));
    std::vector<MultiPoly> gens;
    for (auto& g : K.generators()) {
        auto [q, r] = divide_by(g, f);
        if (!r.is_zero())
            throw std::logic_error("ideal_quotient: inexact division in I cap (f)");
        if (!q.is_zero()) gens.push_back(q);
    }
    if (gens.empty()) gens.push_back(MultiPoly::zero(I.ring()));
    return Ideal(I.ring(), std::move(gens));
}

Ideal ideal_saturate(const Ideal& I, const MultiPoly& f) {
    if (!(*f.ring() == *I.ring())) throw RingMismatch("ideal_saturate: ring mismatch");
    if (f.is_zero()) throw ZeroDivisor("ideal_saturate: zero divisor polynomial");
    // Rabinowitsch: I + (1 - t f), then eliminate t.
    const RingPtr& ring = I.ring();
    const std::string aux = aux_var_for(*ring);
    RingPtr ring2 = elimination_ring(*ring, aux);
    MultiPoly t = MultiPoly::variable(ring2, aux);
    std::vector<MultiPoly> lifted;
    for (auto& g : I.generators()) lifted.push_back(g.map_to_ring(ring2));
    lifted.push_back(MultiPoly::constant(ring2, 1) - t * f.map_to_ring(ring2));
    return Ideal(ring, eliminate_aux(ring2, std::move(lifted), ring));
}

int krull_dim(const Ideal& I) {
    if (I.is_unit_ideal()) throw UnitIdeal("krull_dim of the unit ideal");
    const int n = I.ring()->nvars();
    std::vector<Monomial> lead;
    for (auto& g : I.reduced_gb()) lead.push_back(g.leading_monomial());
    // dimension of the leading-term staircase: largest subset S of the
    // variables such that no leading monomial is supported inside S
    int best = 0;
    for (int mask = 0; mask < (1 << n); ++mask) {
        bool independent = true;
        for (auto& m : lead) {
            bool inside = true;
            for (int i = 0; i < n && inside; ++i)
                if (m.e[i] != 0 && !(mask & (1 << i))) inside = false;
            if (inside) {
                independent = false;
                break;
            }
        }
        if (independent) best = std::max(best, __builtin_popcount(mask));
    }
    return best;
}

long long quotient_dim(const Ideal& I) {
    const int n = I.ring()->nvars();
    std::vector<Monomial> lead;
    for (auto& g : I.reduced_gb()) lead.push_back(g.leading_monomial());
    // finite iff each variable has a pure power among the leading terms
    std::vector<int> cap(n, -1);
    for (auto& m : lead) {
        for (int i = 0; i < n; ++i) {
            if (m.e[i] == 0) continue;
            bool pure = true;
            for (int j = 0; j < n; ++j)
                if (j != i && m.e[j] != 0) pure = false;
            if (pure && (cap[i] < 0 || m.e[i] < cap[i])) cap[i] = m.e[i];
        }
    }
    for (int i = 0; i < n; ++i)
        if (cap[i] < 0) return -1;
    // enumerate candidates below the caps
    long long count = 0;
    std::vector<int> e(n, 0);
    while (true) {
        Monomial m;
        for (int i = 0; i < n; ++i) m.e[i] = static_cast<uint16_t>(e[i]);
        bool standard = true;
        for (auto& l : lead)
            if (mono_divides(l, m, n)) {
                standard = false;
                break;
            }
        if (standard) ++count;
        int i = 0;
        while (i < n && ++e[i] >= cap[i]) e[i++] = 0;
        if (i == n) break;
    }
    return count;
}

bool radical_member(const MultiPoly& p, const Ideal& I) {
    if (!(*p.ring() == *I.ring())) throw RingMismatch("radical_member: ring mismatch");
    if (p.is_zero()) return true;
    if (ideal_member(p, I)) return true;
    // Rabinowitsch trick: p in rad(I) iff 1 in I + (1 - t p).
    const RingPtr& ring = I.ring();
    const std::string aux = aux_var_for(*ring);
    RingPtr ring2 = elimination_ring(*ring, aux);
    MultiPoly t = MultiPoly::variable(ring2, aux);
    std::vector<MultiPoly> lifted;
    for (auto& g : I.generators()) lifted.push_back(g.map_to_ring(ring2));
    lifted.push_back(MultiPoly::constant(ring2, 1) - t * p.map_to_ring(ring2));
    return Ideal(ring2, std::move(lifted)).is_unit_ideal();
}

} // namespace bunloc
