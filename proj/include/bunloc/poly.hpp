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
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "bunloc/errors.hpp"
#include "bunloc/rational.hpp"

namespace bunloc {

enum class MonomialOrder { lex, grevlex };

// Polynomial rings are tiny here: at most six variables drawn from a fixed
// alphabet.  The chart rings are Q[a,b,x,y] and Q[c]; t serves as the
// auxiliary elimination variable.
constexpr int kMaxVars = 6;

class PolyRing {
  public:
    PolyRing(std::vector<std::string> vars, MonomialOrder order = MonomialOrder::grevlex);

    int nvars() const { return static_cast<int>(vars_.size()); }
    const std::vector<std::string>& vars() const { return vars_; }
    MonomialOrder order() const { return order_; }
    int index(const std::string& name) const; // -1 if absent
    bool has_var(const std::string& name) const { return index(name) >= 0; }

    bool operator==(const PolyRing& o) const {
        return vars_ == o.vars_ && order_ == o.order_;
    }

  private:
    std::vector<std::string> vars_;
    MonomialOrder order_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

RingPtr make_ring(std::vector<std::string> vars,
                  MonomialOrder order = MonomialOrder::grevlex);

struct Monomial {
    std::array<uint16_t, kMaxVars> e{};

    int total_degree(int nvars) const {
        int d = 0;
        for (int i = 0; i < nvars; ++i) d += e[i];
        return d;
    }
    bool operator==(const Monomial& o) const { return e == o.e; }
};

// Strict comparison in the ring's monomial order: returns true iff a < b.
bool mono_less(const Monomial& a, const Monomial& b, const PolyRing& ring);

bool mono_divides(const Monomial& a, const Monomial& b, int nvars); // a | b
Monomial mono_mul(const Monomial& a, const Monomial& b, int nvars);
Monomial mono_div(const Monomial& a, const Monomial& b, int nvars); // requires b | a
Monomial mono_lcm(const Monomial& a, const Monomial& b, int nvars);
bool mono_coprime(const Monomial& a, const Monomial& b, int nvars);

class MultiPoly {
  public:
    using Term = std::pair<Monomial, Rational>;

    explicit MultiPoly(RingPtr ring) : ring_(std::move(ring)) {}

    static MultiPoly zero(RingPtr ring) { return MultiPoly(std::move(ring)); }
    static MultiPoly constant(RingPtr ring, const Rational& c);
    static MultiPoly variable(RingPtr ring, const std::string& name, int power = 1);
    static MultiPoly from_terms(RingPtr ring, std::vector<Term> terms);

    const RingPtr& ring() const { return ring_; }
    // Terms in strictly descending monomial order, no zero coefficients.
    const std::vector<Term>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    int total_degree() const;

    const Monomial& leading_monomial() const;
    const Rational& leading_coeff() const;

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator-() const;
    MultiPoly scaled(const Rational& c) const;
    MultiPoly term_multiple(const Monomial& m, const Rational& c) const;

    bool operator==(const MultiPoly& o) const;
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    // Substitutes values for all ring variables.
    Rational evaluate(const std::vector<Rational>& values) const;
    // Applies a permutation of the ring variables: var i -> var perm[i].
    MultiPoly rename_vars(const std::vector<int>& perm) const;
    // Transplants the polynomial into another ring containing the same
    // variable names (used by the elimination machinery).
    MultiPoly map_to_ring(const RingPtr& other) const;

    std::string to_string() const;
    static MultiPoly parse(RingPtr ring, const std::string& text);

  private:
    void assert_same_ring(const MultiPoly& o) const;
    void normalize(std::map<Monomial, Rational, bool (*)(const Monomial&, const Monomial&)>&) = delete;

    RingPtr ring_;
    std::vector<Term> terms_;
};

MultiPoly poly_mul(const MultiPoly& p, const MultiPoly& q);

} // namespace bunloc
