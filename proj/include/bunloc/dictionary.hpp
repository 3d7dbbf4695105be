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
#include <string>
#include <vector>

#include "bunloc/bundles.hpp"
#include "bunloc/report.hpp"

namespace bunloc::dict {

struct SpectralDescriptor {
    enum class Kind { structure_sheaf, line_bundle_on_loc, o_delta, o_component };
    Kind kind = Kind::structure_sheaf;
    std::array<int, 3> twist{0, 0, 0}; // ordered (0, 1, inf)
    int n = 0;                         // for o_delta
    std::string component;             // for o_component

    std::string to_string() const;
    bool operator==(const SpectralDescriptor& o) const = default;
};

struct AutomorphicDescriptor {
    enum class Kind { wh, eis, ic, f_sheaf, j_translate };
    Kind kind = Kind::wh;
    int n = 0;           // for eis
    fq::OrbitLabel label; // for ic / f_sheaf
    int s = 0, k = 0;    // for j_translate: J_k at the marked point s

    std::string to_string() const;
    bool operator==(const AutomorphicDescriptor& o) const = default;
};

struct MatchEntry {
    SpectralDescriptor spectral;
    AutomorphicDescriptor automorphic;
    std::vector<std::string> anchors;
    std::vector<std::string> checks; // empty means declarative
    bool declarative = false;
};

std::vector<MatchEntry> dictionary_table();

CheckReport verify_dictionary_rows(int q);
CheckReport verify_hom_table(int n_max);
CheckReport verify_wakimoto_equivariance(int kmax);
CheckReport verify_newform_sequences(int n_max, int q, int cutoff);
CheckReport verify_support_disjointness(int d_max);

struct VerifyConfig {
    int q = 3;
    int dmax = 3;
    int cutoff = 10;
};

CheckReport run_spectral_suite();
CheckReport run_sl2rep_suite(const VerifyConfig& cfg);
CheckReport run_hecke_suite();
CheckReport run_fqbun_suite(const VerifyConfig& cfg);
CheckReport run_dictionary_suite(const VerifyConfig& cfg);
std::vector<CheckReport> run_suites(const std::string& which, const VerifyConfig& cfg);

} // namespace bunloc::dict
