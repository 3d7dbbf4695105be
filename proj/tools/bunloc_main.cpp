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

#include <fstream>
#include <iostream>
#include <set>
#include <string>

#include <CLI11.hpp>

#include "bunloc/dictionary.hpp"
#include "bunloc/report.hpp"

int main(int argc, char** argv) {
    CLI::App app{"exact verification suites for the two sides of the three-point "
                 "rank-one correspondence"};
    app.require_subcommand(1);

    std::string suite = "all";
    bunloc::dict::VerifyConfig cfg;
    std::string format = "text";
    std::string out_path;

    CLI::App* verify = app.add_subcommand("verify", "run verification suites");
    verify->add_option("suite", suite, "spectral|sl2rep|hecke|fqbun|dictionary|all")
        ->check(CLI::IsMember({"spectral", "sl2rep", "hecke", "fqbun", "dictionary",
                               "all"}));
    verify->add_option("--q", cfg.q, "finite field size")->check(CLI::IsMember({2, 3, 5}));
    verify->add_option("--dmax", cfg.dmax, "largest splitting gap")
        ->check(CLI::Range(0, 8));
    verify->add_option("--cutoff", cfg.cutoff, "section cutoff")->check(CLI::Range(0, 64));
    verify->add_option("--format", format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));
    verify->add_option("--out", out_path, "write the report to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        auto reports = bunloc::dict::run_suites(suite, cfg);
        std::string rendered = format == "json" ? bunloc::reports_to_json(reports)
                                                : bunloc::reports_to_text(reports);
        if (!out_path.empty()) {
            std::ofstream out(out_path, std::ios::binary);
            if (!out) {
                std::cerr << "cannot open output file: " << out_path << "\n";
                return 2;
            }
            out << rendered;
        } else {
            std::cout << rendered;
        }
        for (auto& r : reports)
            if (!r.ok()) return 1;
        return 0;
    } catch (const bunloc::UnsupportedParams& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
