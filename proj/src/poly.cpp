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

#include "bunloc/poly.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace bunloc {

namespace {

const std::set<std::string> kAllowedNames = {"a", "b", "x", "y", "c", "t"};

} // namespace

PolyRing::PolyRing(std::vector<std::string> vars, MonomialOrder order)
    : vars_(std::move(vars)), order_(order) {
    if (vars_.empty() || vars_.size() > kMaxVars)
        throw std::invalid_argument("ring must have between 1 and 6 variables");
    std::set<std::string> seen;
    for (auto& v : vars_) {
        if (!kAllowedNames.count(v))
            throw std::invalid_argument("variable name not in alphabet {a,b,x,y,c,t}: " + v);
        if (!seen.insert(v).second)
            throw std::invalid_argument("duplicate variable name: " + v);
    }
}

int PolyRing::index(const std::string& name) const {
    for (size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return static_cast<int>(i);
    return -1;
}

RingPtr make_ring(std::vector<std::string> vars, MonomialOrder order) {
    return std::make_shared<const PolyRing>(std::move(vars), order);
}

bool mono_less(const Monomial& a, const Monomial& b, const PolyRing& ring) {
    const int n = ring.nvars();
    if (ring.order() == MonomialOrder::lex) {
        for (int i = 0; i < n; ++i) {
            if (a.e[i] != b.e[i]) return a.e[i] < b.e[i];
        }
        return false;
    }
    // grevlex: compare total degree, then the last nonzero entry of a-b
    // must be positive for a < b.
    const int da = a.total_degree(n), db = b.total_degree(n);
    if (da != db) return da < db;
    for (int i = n - 1; i >= 0; --i) {
        if (a.e[i] != b.e[i]) return a.e[i] > b.e[i];
    }
    return false;
}

bool mono_divides(const Monomial& a, const Monomial& b, int nvars) {
    for (int i = 0; i < nvars; ++i)
        if (a.e[i] > b.e[i]) return false;
    return true;
}

Monomial mono_mul(const Monomial& a, const Monomial& b, int nvars) {
    Monomial r;
    for (int i = 0; i < nvars; ++i) r.e[i] = static_cast<uint16_t>(a.e[i] + b.e[i]);
    return r;
}

Monomial mono_div(const Monomial& a, const Monomial& b, int nvars) {
    Monomial r;
    for (int i = 0; i < nvars; ++i) {
        if (b.e[i] > a.e[i]) throw std::logic_error("monomial division not exact");
        r.e[i] = static_cast<uint16_t>(a.e[i] - b.e[i]);
    }
    return r;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b, int nvars) {
    Monomial r;
    for (int i = 0; i < nvars; ++i) r.e[i] = std::max(a.e[i], b.e[i]);
    return r;
}

bool mono_coprime(const Monomial& a, const Monomial& b, int nvars) {
    for (int i = 0; i < nvars; ++i)
        if (a.e[i] != 0 && b.e[i] != 0) return false;
    return true;
}

MultiPoly MultiPoly::constant(RingPtr ring, const Rational& c) {
    MultiPoly p(std::move(ring));
    if (c != 0) p.terms_.push_back({Monomial{}, c});
    return p;
}

MultiPoly MultiPoly::variable(RingPtr ring, const std::string& name, int power) {
    const int idx = ring->index(name);
    if (idx < 0) throw RingMismatch("variable not in ring: " + name);
    if (power < 0) throw std::invalid_argument("negative power");
    MultiPoly p(std::move(ring));
    if (power == 0) return constant(p.ring_, 1);
    Monomial m;
    m.e[idx] = static_cast<uint16_t>(power);
    p.terms_.push_back({m, Rational(1)});
    return p;
}

MultiPoly MultiPoly::from_terms(RingPtr ring, std::vector<Term> terms) {
    // Collect, merge duplicates, drop zeros, sort descending.
    std::vector<Term> merged;
    const PolyRing& R = *ring;
    std::sort(terms.begin(), terms.end(), [&R](const Term& u, const Term& v) {
        return mono_less(v.first, u.first, R);
    });
    for (auto& t : terms) {
        if (!merged.empty() && merged.back().first == t.first) {
            merged.back().second += t.second;
        } else {
            merged.push_back(t);
        }
    }
    merged.erase(std::remove_if(merged.begin(), merged.end(),
                                [](const Term& t) { return t.second == 0; }),
                 merged.end());
    MultiPoly p(std::move(ring));
    p.terms_ = std::move(merged);
    return p;
}

bool MultiPoly::is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && terms_[0].first.total_degree(ring_->nvars()) == 0);
}

int MultiPoly::total_degree() const {
    int d = 0;
    for (auto& t : terms_) d = std::max(d, t.first.total_degree(ring_->nvars()));
    return d;
}

const Monomial& MultiPoly::leading_monomial() const {
    if (terms_.empty()) throw std::logic_error("leading monomial of zero polynomial");
    return terms_.front().first;
}

const Rational& MultiPoly::leading_coeff() const {
    if (terms_.empty()) throw std::logic_error("leading coeff of zero polynomial");
    return terms_.front().second;
}

void MultiPoly::assert_same_ring(const MultiPoly& o) const {
    if (!(*ring_ == *o.ring_)) throw RingMismatch("operands live in different rings");
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    assert_same_ring(o);
    const PolyRing& R = *ring_;
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        if (terms_[i].first == o.terms_[j].first) {
            Rational c = terms_[i].second + o.terms_[j].second;
            if (c != 0) out.push_back({terms_[i].first, c});
            ++i, ++j;
        } else if (mono_less(o.terms_[j].first, terms_[i].first, R)) {
            out.push_back(terms_[i++]);
        } else {
            out.push_back(o.terms_[j++]);
        }
    }
    while (i < terms_.size()) out.push_back(terms_[i++]);
    while (j < o.terms_.size()) out.push_back(o.terms_[j++]);
    MultiPoly p(ring_);
    p.terms_ = std::move(out);
    return p;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly p(ring_);
    p.terms_ = terms_;
    for (auto& t : p.terms_) t.second = -t.second;
    return p;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::scaled(const Rational& c) const {
    if (c == 0) return zero(ring_);
    MultiPoly p(ring_);
    p.terms_ = terms_;
    for (auto& t : p.terms_) t.second *= c;
    return p;
}

MultiPoly MultiPoly::term_multiple(const Monomial& m, const Rational& c) const {
    if (c == 0) return zero(ring_);
    MultiPoly p(ring_);
    p.terms_ = terms_;
    const int n = ring_->nvars();
    for (auto& t : p.terms_) {
        t.first = mono_mul(t.first, m, n);
        t.second *= c;
    }
    return p;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    assert_same_ring(o);
    const int n = ring_->nvars();
    std::vector<Term> acc;
    acc.reserve(terms_.size() * o.terms_.size());
    for (auto& t1 : terms_)
        for (auto& t2 : o.terms_)
            acc.push_back({mono_mul(t1.first, t2.first, n), t1.second * t2.second});
    return from_terms(ring_, std::move(acc));
}

bool MultiPoly::operator==(const MultiPoly& o) const {
    if (!(*ring_ == *o.ring_)) return false;
    return terms_ == o.terms_;
}

Rational MultiPoly::evaluate(const std::vector<Rational>& values) const {
    const int n = ring_->nvars();
    if (static_cast<int>(values.size()) != n)
        throw std::invalid_argument("evaluate: wrong number of values");
    Rational sum = 0;
    for (auto& [m, c] : terms_) {
        Rational term = c;
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < m.e[i]; ++k) term *= values[i];
        sum += term;
    }
    return sum;
}

MultiPoly MultiPoly::rename_vars(const std::vector<int>& perm) const {
    const int n = ring_->nvars();
    if (static_cast<int>(perm.size()) != n)
        throw std::invalid_argument("rename_vars: wrong permutation size");
    std::vector<Term> acc;
    acc.reserve(terms_.size());
    for (auto& [m, c] : terms_) {
        Monomial r;
        for (int i = 0; i < n; ++i) r.e[perm[i]] = m.e[i];
        acc.push_back({r, c});
    }
    return from_terms(ring_, std::move(acc));
}

MultiPoly MultiPoly::map_to_ring(const RingPtr& other) const {
    const int n = ring_->nvars();
    std::vector<int> where(n);
    for (int i = 0; i < n; ++i) where[i] = other->index(ring_->vars()[i]);
    std::vector<Term> acc;
    acc.reserve(terms_.size());
    for (auto& [m, c] : terms_) {
        Monomial r;
        for (int i = 0; i < n; ++i) {
            if (m.e[i] == 0) continue;
            if (where[i] < 0)
                throw RingMismatch("target ring lacks variable " + ring_->vars()[i]);
            r.e[where[i]] = m.e[i];
        }
        acc.push_back({r, c});
    }
    return from_terms(other, std::move(acc));
}

MultiPoly poly_mul(const MultiPoly& p, const MultiPoly& q) { return p * q; }

// ---------------------------------------------------------------------------
// Text format: "3/2*a^2*x - b*y + 1", whitespace-insensitive.

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    const int n = ring_->nvars();
    bool first = true;
    for (auto& [m, c] : terms_) {
        Rational ac = abs(c);
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        const bool is_const = m.total_degree(n) == 0;
        const bool unit_coeff = (ac == 1);
        if (!unit_coeff || is_const) out << ac.get_str();
        bool need_star = !unit_coeff || is_const;
        for (int i = 0; i < n; ++i) {
            if (m.e[i] == 0) continue;
            if (need_star) out << "*";
            out << ring_->vars()[i];
            if (m.e[i] > 1) out << "^" << m.e[i];
            need_star = true;
        }
    }
    return out.str();
}

namespace {

struct Lexer {
    std::string s;
    size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool done() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    char get() {
        skip_ws();
        return s[i++];
    }
    std::string integer() {
        skip_ws();
        size_t j = i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        if (j == i) throw ParseError("expected integer at position " + std::to_string(i));
        std::string r = s.substr(i, j - i);
        i = j;
        return r;
    }
};

} // namespace

MultiPoly MultiPoly::parse(RingPtr ring, const std::string& text) {
    Lexer lx{text};
    std::vector<Term> acc;
    const int n = ring->nvars();

    bool expect_term = true;
    int sign = 1;
    while (!lx.done()) {
        char ch = lx.peek();
        if (ch == '+' || ch == '-') {
            lx.get();
            if (ch == '-') sign = -sign;
            expect_term = true;
            continue;
        }
        if (!expect_term) throw ParseError("missing operator before position " +
                                           std::to_string(lx.i));
        // one term: optional rational, then *-separated variable powers
        Rational coeff = sign;
        sign = 1;
        Monomial m;
        bool saw_factor = false;
        bool expect_factor = true;
        while (true) {
            char p = lx.peek();
            if (expect_factor && std::isdigit(static_cast<unsigned char>(p))) {
                std::string num = lx.integer();
                std::string den = "1";
                if (lx.peek() == '/') {
                    lx.get();
                    den = lx.integer();
                }
                coeff *= rat_from_string(num + "/" + den);
                saw_factor = true;
            } else if (expect_factor && std::isalpha(static_cast<unsigned char>(p))) {
                std::string name(1, lx.get());
                int idx = ring->index(name);
                if (idx < 0) throw ParseError("unknown variable: " + name);
                int pw = 1;
                if (lx.peek() == '^') {
                    lx.get();
                    pw = std::stoi(lx.integer());
                }
                m.e[idx] = static_cast<uint16_t>(m.e[idx] + pw);
                saw_factor = true;
            } else if (!expect_factor && p == '*') {
                lx.get();
                expect_factor = true;
                continue;
            } else {
                break;
            }
            expect_factor = false;
        }
        if (!saw_factor) throw ParseError("empty term at position " + std::to_string(lx.i));
        acc.push_back({m, coeff});
        (void)n;
        expect_term = false;
    }
    if (expect_term && !acc.empty()) throw ParseError("dangling operator");
    return from_terms(std::move(ring), std::move(acc));
}

} // namespace bunloc
