/*
   Copyright 2026 The plaitalex Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// plaitalex command-line front end.
//
// Exit codes: 0 success, 1 property or fixture failure, 2 usage or parse error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "plaitalex/alexmodule.hpp"
#include "plaitalex/braid.hpp"
#include "plaitalex/error.hpp"
#include "plaitalex/invariant.hpp"
#include "plaitalex/io.hpp"
#include "plaitalex/rep.hpp"
#include "plaitalex/suites.hpp"

namespace px = plaitalex;

namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;

struct WordArgs {
    int n = 2;
    std::optional<std::string> word;
    std::optional<std::string> sigma_word;
};

void add_word_options(CLI::App* cmd, WordArgs& args) {
    cmd->add_option("--n", args.n, "number of strand pairs (the braid has 2n strands)")->required();
    auto* w = cmd->add_option("--word", args.word, "colored token word, e.g. \"P1^-1 M1 P1^-1\"");
    auto* s = cmd->add_option("--sigma-word", args.sigma_word, "Artin word in letters x{j}, e.g. \"x2 x2\"");
    w->excludes(s);
    s->excludes(w);
}

px::BraidWord read_word(const WordArgs& args) {
    if (args.sigma_word) return px::parse_sigma_word(*args.sigma_word, args.n);
    if (!args.word) throw px::SyntaxError("one of --word or --sigma-word is required");
    return px::parse_word(*args.word, args.n);
}

int cmd_compute(const WordArgs& args, const std::string& format) {
    const px::InvariantResult r = px::u_link(read_word(args));
    if (format == "text")
        std::cout << px::to_string(r.u_link) << '\n';
    else if (format == "z")
        std::cout << px::to_string(r.conway) << '\n';
    else
        std::cout << px::to_json(r).dump() << '\n';
    return kOk;
}

int cmd_matrix(const WordArgs& args) {
    std::cout << px::to_json(px::word_matrix(read_word(args))).dump() << '\n';
    return kOk;
}

int cmd_module(const WordArgs& args, std::optional<int> k) {
    const px::PresentationData p = px::presentation_matrix(read_word(args));
    const int order = k.value_or(p.n - 1);
    const auto minors = px::elementary_ideal_minors(p, order);
    std::cout << px::module_json(p, order, minors, px::gcd_of(minors)).dump() << '\n';
    return kOk;
}

int cmd_check(const std::string& suite, const px::SuiteConfig& config) {
    std::vector<px::Suite> suites;
    if (suite == "all") {
        suites = px::all_suites();
    } else if (auto s = px::suite_from_name(suite)) {
        suites.push_back(*s);
    } else {
        std::cerr << "error: unknown suite '" << suite << "'\n";
        return kUsage;
    }
    bool ok = true;
    for (px::Suite s : suites) {
        const px::SuiteReport report = px::run_suite(s, config);
        std::cout << px::suite_name(s) << ": " << report.passed << " passed, " << report.failures.size()
                  << " failed\n";
        for (const auto& f : report.failures) {
            std::cout << "  sample " << f.sample << " seed " << f.sample_seed << " n=" << f.word.n << " word \""
                      << px::to_string(f.word) << "\": " << f.detail << '\n';
        }
        ok = ok && report.failures.empty();
    }
    return ok ? kOk : kFailure;
}

int cmd_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "error: cannot open fixture file " << path << '\n';
        return kUsage;
    }
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: malformed fixture file: " << e.what() << '\n';
        return kUsage;
    }
    std::vector<px::FixtureEntry> entries;
    std::vector<px::BraidWord> words;
    try {
        entries = px::parse_fixtures(doc);
        for (const auto& f : entries) words.push_back(px::parse_word(f.word, f.n));
    } catch (const px::Error& e) {
        std::cerr << "error: malformed fixture file: " << e.what() << '\n';
        return kUsage;
    }

    std::size_t failed = 0;
    for (std::size_t k = 0; k < entries.size(); ++k) {
        const auto& f = entries[k];
        const px::HalfLaurent got = px::u_link(words[k]).u_link;
        if (got == f.expected_u_link) {
            std::cout << "PASS " << f.name << '\n';
        } else {
            ++failed;
            std::cout << "FAIL " << f.name << ": expected " << px::to_string(f.expected_u_link) << ", got "
                      << px::to_string(got) << '\n';
        }
    }
    std::cout << entries.size() - failed << " passed, " << failed << " failed\n";
    return failed == 0 ? kOk : kFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Alexander-Conway polynomials of plait closures of colored braids"};
    app.require_subcommand(1);

    WordArgs compute_args;
    std::string format = "json";
    auto* compute = app.add_subcommand("compute", "compute the normalized invariant of a word");
    add_word_options(compute, compute_args);
    compute->add_option("--format", format, "output format")->check(CLI::IsMember({"json", "text", "z"}));

    WordArgs matrix_args;
    auto* matrix = app.add_subcommand("matrix", "dump the 2n x 2n representation matrix as JSON");
    add_word_options(matrix, matrix_args);

    WordArgs module_args;
    std::optional<int> ideal_k;
    auto* module = app.add_subcommand("module", "presentation matrix and k x k minors of B'");
    add_word_options(module, module_args);
    module->add_option("--k", ideal_k, "minor size (default n - 1)");

    std::string suite = "all";
    px::SuiteConfig config;
    auto* check = app.add_subcommand("check", "run seeded property suites");
    check->add_option("--suite", suite, "skein, moves, stab, hang, matrix, minors or all");
    check->add_option("--samples", config.samples, "samples per suite");
    check->add_option("--max-n", config.max_n, "largest number of strand pairs");
    check->add_option("--max-len", config.max_len, "longest random word");
    check->add_option("--seed", config.seed, "base seed");

    std::string fixtures;
    auto* table = app.add_subcommand("table", "compare computed invariants with a fixture table");
    table->add_option("--fixtures", fixtures, "JSON array of fixture entries")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*compute) return cmd_compute(compute_args, format);
        if (*matrix) return cmd_matrix(matrix_args);
        if (*module) return cmd_module(module_args, ideal_k);
        if (*check) return cmd_check(suite, config);
        if (*table) return cmd_table(fixtures);
    } catch (const px::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
