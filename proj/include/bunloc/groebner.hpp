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

#include <memory>
#include <mutex>
#include <vector>

#include "bunloc/poly.hpp"

namespace bunloc {

// An ideal with lazily computed, write-once reduced Groebner basis.  Values
// are immutable after construction; the cache is filled at most once and is
// safe for concurrent readers.
class Ideal {
  public:
    Ideal(RingPtr ring, std::vector<MultiPoly> generators);

    const RingPtr& ring() const { return ring_; }
    const std::vector<MultiPoly>& generators() const { return gens_; }

    // The unique reduced Groebner basis: monic leading coefficients, no
    // leading term divides another, tails fully reduced.
    const std::vector<MultiPoly>& reduced_gb() const;

    bool is_unit_ideal() const; // 1 in I
    bool is_zero_ideal() const;

  private:
    struct GbCache {
        std::once_flag flag;
        std::vector<MultiPoly> gb;
    };

    RingPtr ring_;
    std::vector<MultiPoly> gens_;
    std::shared_ptr<GbCache> cache_;
};

// Normal form of p with respect to a basis: no term of the result is
// divisible by any leading term of the basis.  Deterministic given the
// monomial order and the listed basis order.
MultiPoly reduce(const MultiPoly& p, const std::vector<MultiPoly>& basis);

// Multivariate division with quotient tracking against a single divisor.
// Returns (quotient, remainder) with p = q*f + r.
std::pair<MultiPoly, MultiPoly> divide_by(const MultiPoly& p, const MultiPoly& f);

std::vector<MultiPoly> buchberger(const Ideal& I);

bool ideal_member(const MultiPoly& p, const Ideal& I);
bool ideal_eq(const Ideal& I, const Ideal& J);
Ideal ideal_intersect(const Ideal& I, const Ideal& J);
Ideal ideal_quotient(const Ideal& I, const MultiPoly& f);
Ideal ideal_saturate(const Ideal& I, const MultiPoly& f);
int krull_dim(const Ideal& I);
bool radical_member(const MultiPoly& p, const Ideal& I);

Ideal ideal_sum(const Ideal& I, const Ideal& J);

// Dimension of ring/I as a Q-vector space (count of standard monomials);
// -1 when infinite.
long long quotient_dim(const Ideal& I);

} // namespace bunloc
