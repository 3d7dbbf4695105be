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

#include "bunloc/fqlaurent.hpp"
#include "bunloc/rational.hpp"

namespace bunloc::fq {

// The three marked points 0, 1, infinity.
enum MarkedPoint { kP0 = 0, kP1 = 1, kPInf = 2 };

// Configuration tag of an isomorphism class at splitting gap d.
//   d == 0: a coincidence pattern of the three lines,
//   d >= 1: the subset R of points whose line sits in the top summand,
//           with the extra generic tag (*) at d == 1.
struct OrbitLabel {
    int d = 0;
    // d == 0: 0 = all distinct, 1/2/3 = exactly the pair {0,1}/{0,inf}/{1,inf},
    //         4 = all three coincide
    // d >= 1: bitmask of R (bit s = line at s in the top summand), 8 = generic (*)
    int cfg = 0;

    bool operator==(const OrbitLabel& o) const { return d == o.d && cfg == o.cfg; }
    bool operator<(const OrbitLabel& o) const {
        return d != o.d ? d < o.d : cfg < o.cfg;
    }
};

constexpr int kCfgStar = 8;

std::string label_to_string(const OrbitLabel& l);

// All labels at gap d, in canonical order (the deterministic merge order).
std::vector<OrbitLabel> labels_at_gap(int d);

// Lines are points of P^1(F_q) in the normalized fiber frame of
// O(d) + O: index v < q encodes [v : 1], index q encodes the top line [1 : 0].
struct ParabolicPoint {
    int d = 0;
    std::array<int, 3> lines{};
};

OrbitLabel classify(const ParabolicPoint& p, const FqConfig& F);

// A deterministic representative of the orbit.
ParabolicPoint representative(const OrbitLabel& l, const FqConfig& F);

// Every parabolic point with the given label (exhaustive enumeration).
std::vector<ParabolicPoint> all_points_with_label(const OrbitLabel& l, const FqConfig& F);

// Stabilizer order of a point in the orbit over F_q.
long long aut_order(const OrbitLabel& l, int q);
// #Aut(E)(F_q) of the underlying bundle at gap d.
long long full_aut_order(int d, int q);

// Orbit sizes from exhaustive enumeration of the (q+1)^3 line triples.
// The parallel version uses OpenMP when available; both merge their counts
// in canonical label order and agree exactly.
std::map<OrbitLabel, long long> orbit_census(int d, const FqConfig& F);
std::map<OrbitLabel, long long> orbit_census_serial(int d, const FqConfig& F);

// Sum over orbits at gap d of 1/#Aut of the point.
Rational groupoid_mass(int d, const FqConfig& F);

// Lower Hecke modification at an unramified point x (x not in {0, 1, inf}):
// counts of target labels over the q+1 choices of the modified line.
std::map<OrbitLabel, long long> hecke_fiber_counts(const OrbitLabel& b, uint8_t x,
                                                   const FqConfig& F, int window = 0);
// Same, starting from a chosen representative point.
std::map<OrbitLabel, long long> hecke_fiber_counts_from(const ParabolicPoint& p,
                                                        uint8_t x, const FqConfig& F,
                                                        int window = 0);

// Atkin-Lehner modification at a marked point.
ParabolicPoint atkin_lehner(const ParabolicPoint& p, MarkedPoint r, const FqConfig& F,
                            int window = 0);

// Specialization ("arrow") poset of the labels at a fixed gap, as in the
// configuration diagrams: covers[l] lists labels directly in the closure of l.
std::vector<OrbitLabel> closure_covers(const OrbitLabel& l);
// Transitive closure of a set of labels, intersected with `within` when
// non-empty (closure taken inside the open union of the given strata).
std::vector<OrbitLabel> poset_closure(const std::vector<OrbitLabel>& seed,
                                      const std::vector<OrbitLabel>& within);

} // namespace bunloc::fq
