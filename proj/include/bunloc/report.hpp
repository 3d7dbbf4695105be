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

#include <string>
#include <vector>

#include <json.hpp>

namespace bunloc {

enum class CheckStatus { pass, fail, skip };

struct CheckEntry {
    std::string id;
    CheckStatus status = CheckStatus::skip;
    std::string expected;
    std::string got;
    std::string details;
    std::string anchor;
};

// Deterministic, append-only result container.  Serialization uses a fixed
// key order so reports are byte-stable across runs and thread counts.
class CheckReport {
  public:
    explicit CheckReport(std::string suite) : suite_(std::move(suite)) {}

    void add(const std::string& id, bool ok, const std::string& expected,
             const std::string& got, const std::string& details = "",
             const std::string& anchor = "") {
        entries_.push_back({id, ok ? CheckStatus::pass : CheckStatus::fail, expected,
                            got, details, anchor});
    }

    void skip(const std::string& id, const std::string& details) {
        entries_.push_back({id, CheckStatus::skip, "", "", details, ""});
    }

    const std::string& suite() const { return suite_; }
    const std::vector<CheckEntry>& entries() const { return entries_; }

    bool ok() const {
        for (auto& e : entries_)
            if (e.status == CheckStatus::fail) return false;
        return true;
    }

    std::vector<std::string> failed_ids() const {
        std::vector<std::string> out;
        for (auto& e : entries_)
            if (e.status == CheckStatus::fail) out.push_back(e.id);
        return out;
    }

    nlohmann::ordered_json to_json() const;
    std::string to_text() const;

  private:
    std::string suite_;
    std::vector<CheckEntry> entries_;
};

std::string status_name(CheckStatus s);

// Serializes several suite reports into the wire format: a JSON array of
// suite objects {suite, checks:[{id, status, expected, got, details,
// paper_anchor}]}, UTF-8, keys in fixed order.
std::string reports_to_json(const std::vector<CheckReport>& reports);
std::string reports_to_text(const std::vector<CheckReport>& reports);

} // namespace bunloc
