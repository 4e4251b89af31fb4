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

// Seeded property suites driven by `plaitalex check`.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "plaitalex/braid.hpp"

namespace plaitalex {

enum class Suite { Skein, Moves, Stab, Hang, Matrix, Minors };

std::string suite_name(Suite s);
std::optional<Suite> suite_from_name(std::string_view name);
std::vector<Suite> all_suites();

struct SuiteConfig {
    std::size_t samples = 50;
    int max_n = 4;
    std::size_t max_len = 20;
    std::uint64_t seed = 0;
};

struct SampleFailure {
    std::size_t sample = 0;
    std::uint64_t sample_seed = 0;
    BraidWord word;
    std::string detail;
};

struct SuiteReport {
    Suite suite = Suite::Skein;
    std::size_t passed = 0;
    std::vector<SampleFailure> failures;  // ordered by sample index
};

/// Sample k draws n in [2, max_n] and a length in [0, max_len] from a seed
/// derived from (seed, suite, k), so reports do not depend on thread count.
SuiteReport run_suite(Suite suite, const SuiteConfig& config);

/// The word and auxiliary position used by sample k of a suite.
struct Sample {
    std::uint64_t seed = 0;
    BraidWord word;
    int position = 1;  // skein position, 1 <= position <= n - 1
};
Sample draw_sample(Suite suite, const SuiteConfig& config, std::size_t k);

}  // namespace plaitalex
