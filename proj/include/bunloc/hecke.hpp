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
#include <string>
#include <vector>

#include "bunloc/errors.hpp"
#include "bunloc/report.hpp"

namespace bunloc::hecke {

enum class GroupKind { SL2, PGL2 };

// Element of the infinite dihedral group acting on the real line:
// (n, +1) is the translation u -> u + n, and (n, -1) the reflection
// u -> n - u (center n/2).  SL2 uses the even-translation subgroup, so
// r_0 = (0,-), r_1 = (2,-); PGL2 adds r_{1/2} = (1,-).
struct DihedralElement {
    long long n = 0;
    int eps = +1;

    bool operator==(const DihedralElement& o) const { return n == o.n && eps == o.eps; }
    bool operator<(const DihedralElement& o) const {
        return n != o.n ? n < o.n : eps < o.eps;
    }
};

inline DihedralElement dihedral_identity() { return {0, +1}; }
inline DihedralElement translation(long long k) { return {k, +1}; }
inline DihedralElement reflection_doubled(long long two_center) {
    return {two_center, -1};
}

// Product read left to right as successive applications: (g*h)(u) = h(g(u)).
// This orientation makes r_0 * r_{1/2} the translation by +1, so dominant
// Wakimoto classes come out with positive index.
DihedralElement dmul(const DihedralElement& g, const DihedralElement& h);
DihedralElement dinv(const DihedralElement& g);

// Finite Z-linear combination of dihedral elements.
class GroupAlgebraElement {
  public:
    explicit GroupAlgebraElement(GroupKind kind) : kind_(kind) {}
    static GroupAlgebraElement basis(GroupKind kind, DihedralElement g,
                                     long long coeff = 1);
    static GroupAlgebraElement zero(GroupKind kind) { return GroupAlgebraElement(kind); }

    GroupKind kind() const { return kind_; }
    const std::map<DihedralElement, long long>& terms() const { return terms_; }

    void add_term(DihedralElement g, long long coeff);
    bool is_zero() const { return terms_.empty(); }

    GroupAlgebraElement operator+(const GroupAlgebraElement& o) const;
    GroupAlgebraElement operator-(const GroupAlgebraElement& o) const;
    GroupAlgebraElement scaled(long long c) const;
    bool operator==(const GroupAlgebraElement& o) const {
        return kind_ == o.kind_ && terms_ == o.terms_;
    }

    std::string to_string() const; // "+(n,+)/-(n,-)" style, ascending n

  private:
    GroupKind kind_;
    std::map<DihedralElement, long long> terms_;
};

GroupAlgebraElement ga_mul(const GroupAlgebraElement& u, const GroupAlgebraElement& v);
GroupAlgebraElement ga_pow(const GroupAlgebraElement& u, long long k); // k may be < 0
GroupAlgebraElement ga_inverse_of_group_element(const GroupAlgebraElement& u);

enum class K0Name { delta, T0_star, T0_shriek, T1_star, T_half, Avg };

GroupAlgebraElement k0_class(K0Name name, GroupKind kind);
GroupAlgebraElement k0_wakimoto(long long k, GroupKind kind); // J(k)

CheckReport waki_monoid_check(int kmax);

// Eisenstein lattice: finitely supported Z-vectors on basis e_lambda.
using EisVector = std::map<int, long long>;
EisVector eis_basis(int lambda);
// Action of a translation-supported algebra element: J(mu) e_l = e_{l+mu}.
// Rejects any reflection term.
EisVector eis_action(const GroupAlgebraElement& g, const EisVector& v);

// Left module Z[W] / Z[W](r_0 - e); basis indexed by translations.
class AsphericalModule {
  public:
    using Vec = std::map<long long, long long>;

    explicit AsphericalModule(GroupKind kind) : kind_(kind) {}
    GroupKind kind() const { return kind_; }

    Vec wh() const { return {{0, 1}}; }
    Vec basis(long long k) const { return {{k, 1}}; }
    Vec act(const GroupAlgebraElement& g, const Vec& v) const;

  private:
    GroupKind kind_;
};

GroupAlgebraElement central_class(
    const std::vector<std::pair<long long, long long>>& weights, GroupKind kind);

} // namespace bunloc::hecke
