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

#include "bunloc/report.hpp"

#include <sstream>

namespace bunloc {

std::string status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::skip: return "skip";
    }
    return "?";
}

nlohmann::ordered_json CheckReport::to_json() const {
    nlohmann::ordered_json j;
    j["suite"] = suite_;
    j["checks"] = nlohmann::ordered_json::array();
    for (auto& e : entries_) {
        nlohmann::ordered_json c;
        c["id"] = e.id;
        c["status"] = status_name(e.status);
        c["expected"] = e.expected;
        c["got"] = e.got;
        c["details"] = e.details;
        c["paper_anchor"] = e.anchor;
        j["checks"].push_back(std::move(c));
    }
    return j;
}

std::string CheckReport::to_text() const {
    std::ostringstream out;
    out << "suite " << suite_ << "\n";
    for (auto& e : entries_) {
        out << "  [" << status_name(e.status) << "] " << e.id;
        if (e.status == CheckStatus::fail)
            out << "  expected=" << e.expected << " got=" << e.got;
        if (!e.details.empty()) out << "  (" << e.details << ")";
        out << "\n";
    }
    out << "  => " << (ok() ? "PASS" : "FAIL") << "\n";
    return out.str();
}

std::string reports_to_json(const std::vector<CheckReport>& reports) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (auto& r : reports) arr.push_back(r.to_json());
    return arr.dump(2) + "\n";
}

std::string reports_to_text(const std::vector<CheckReport>& reports) {
    std::ostringstream out;
    bool all_ok = true;
    for (auto& r : reports) {
        out << r.to_text();
        all_ok = all_ok && r.ok();
    }
    out << (all_ok ? "ALL SUITES PASS" : "SUITE FAILURES PRESENT") << "\n";
    return out.str();
}

} // namespace bunloc
