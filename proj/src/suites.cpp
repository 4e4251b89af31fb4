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

#include "plaitalex/suites.hpp"

#include <random>

#include "plaitalex/alexmodule.hpp"
#include "plaitalex/error.hpp"
#include "plaitalex/invariant.hpp"
#include "plaitalex/rep.hpp"

namespace plaitalex {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

HalfLaurent link_value(const BraidWord& w) { return u_link(w).u_link; }

// Empty string on success, otherwise a description of the violated property.
std::string check_skein(const Sample& s) {
    return skein_check(s.word, s.position) ? "" : "skein identity fails at position " + std::to_string(s.position);
}

std::string check_moves(const Sample& s) {
    const HalfLaurent base = link_value(s.word);
    for (const auto& g : rn_generators(s.word.n)) {
        if (link_value(concat(g, s.word)) != base) return "prefix " + to_string(g) + " changes the invariant";
        if (link_value(concat(s.word, g)) != base) return "suffix " + to_string(g) + " changes the invariant";
    }
    return "";
}

std::string check_stab(const Sample& s) {
    return link_value(stabilize(s.word)) == link_value(s.word) ? "" : "stabilization changes the invariant";
}

std::string check_hang(const Sample& s) {
    return link_value(hang_circle(s.word)) == hopf_value() * link_value(s.word)
               ? ""
               : "hanging a circle does not multiply by the Hopf value";
}

std::string check_matrix(const Sample& s) {
    const RepMatrix m = word_matrix(s.word);
    if (!fixed_vector_check(m)) return "sum of s or sum of d is not fixed";
    const BPrime b = b_prime(m);
    if (!is_pseudostochastic(b.entries)) return "B' is not pseudostochastic";
    if (!det_division_free(b.entries).is_zero()) return "det B' is nonzero";
    const HalfLaurent v = link_value(s.word);
    if (conway_involution(v) != v) return "invariant is not fixed by u -> -1/u";
    return "";
}

std::string check_minors(const Sample& s) {
    const BPrime b = b_prime(word_matrix(s.word));
    const PolyMatrix minors = all_first_minors(b);
    const auto n = minors.rows();
    const HalfLaurent ref = minors(n - 1, n - 1);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const HalfLaurent signed_minor = (i + j) % 2 == 0 ? minors(i, j) : -minors(i, j);
            if (signed_minor != ref) return "signed first minors differ at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
        }
    const HalfLaurent ub = u_beta(s.word);
    if (ref != ub) return "leading minor disagrees with the (n,n) cofactor";
    if (!ub.is_zero() && alexander_via_gcd(s.word) != normalize_unit(ub).first) return "gcd of minors disagrees with U_beta";
    return "";
}

}  // namespace

std::string suite_name(Suite s) {
    switch (s) {
        case Suite::Skein: return "skein";
        case Suite::Moves: return "moves";
        case Suite::Stab: return "stab";
        case Suite::Hang: return "hang";
        case Suite::Matrix: return "matrix";
        case Suite::Minors: return "minors";
    }
    return "?";
}

std::optional<Suite> suite_from_name(std::string_view name) {
    for (Suite s : all_suites())
        if (suite_name(s) == name) return s;
    return std::nullopt;
}

std::vector<Suite> all_suites() {
    return {Suite::Skein, Suite::Moves, Suite::Stab, Suite::Hang, Suite::Matrix, Suite::Minors};
}

Sample draw_sample(Suite suite, const SuiteConfig& config, std::size_t k) {
    if (config.max_n < 2) throw NTooSmall("--max-n must be at least 2");
    Sample s;
    s.seed = splitmix64(config.seed ^ splitmix64((static_cast<std::uint64_t>(suite) << 40) + k));
    std::mt19937_64 rng(s.seed);
    const int n = std::uniform_int_distribution<int>(2, config.max_n)(rng);
    const auto len = std::uniform_int_distribution<std::size_t>(0, config.max_len)(rng);
    s.position = std::uniform_int_distribution<int>(1, n - 1)(rng);
    s.word = random_word(n, len, rng());
    return s;
}

SuiteReport run_suite(Suite suite, const SuiteConfig& config) {
    std::vector<Sample> samples;
    samples.reserve(config.samples);
    for (std::size_t k = 0; k < config.samples; ++k) samples.push_back(draw_sample(suite, config, k));

    std::vector<std::string> verdicts(samples.size());
    const auto count = static_cast<std::int64_t>(samples.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t k = 0; k < count; ++k) {
        const Sample& s = samples[static_cast<std::size_t>(k)];
        std::string& out = verdicts[static_cast<std::size_t>(k)];
        try {
            switch (suite) {
                case Suite::Skein: out = check_skein(s); break;
                case Suite::Moves: out = check_moves(s); break;
                case Suite::Stab: out = check_stab(s); break;
                case Suite::Hang: out = check_hang(s); break;
                case Suite::Matrix: out = check_matrix(s); break;
                case Suite::Minors: out = check_minors(s); break;
            }
        } catch (const std::exception& e) {
            out = std::string("exception: ") + e.what();
        }
    }

    SuiteReport report;
    report.suite = suite;
    for (std::size_t k = 0; k < samples.size(); ++k) {
        if (verdicts[k].empty())
            ++report.passed;
        else
            report.failures.push_back({k, samples[k].seed, samples[k].word, verdicts[k]});
    }
    return report;
}

}  // namespace plaitalex
