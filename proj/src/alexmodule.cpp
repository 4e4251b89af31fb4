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

#include "plaitalex/alexmodule.hpp"

#include <algorithm>
#include <cstdint>

#include "plaitalex/error.hpp"
#include "plaitalex/matrix.hpp"

namespace plaitalex {

namespace {

// Lexicographic order on canonical term lists, for sorting and deduplication.
bool poly_less(const HalfLaurent& a, const HalfLaurent& b) {
    return std::lexicographical_compare(a.terms().begin(), a.terms().end(), b.terms().begin(), b.terms().end(),
                                        [](const Term& x, const Term& y) {
                                            if (x.exp != y.exp) return x.exp < y.exp;
                                            return x.coef < y.coef;
                                        });
}

std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> pick(k);
    for (std::size_t i = 0; i < k; ++i) pick[i] = i;
    while (true) {
        out.push_back(pick);
        std::size_t i = k;
        while (i > 0 && pick[i - 1] == n - k + (i - 1)) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
    return out;
}

}  // namespace

PresentationData presentation_matrix(const BraidWord& w) {
    if (w.n < 2) throw NTooSmall("a presentation matrix needs n >= 2");
    PresentationData p;
    p.n = w.n;
    for (int i = 1; i <= w.n; ++i) p.generators.push_back("d" + std::to_string(i));
    p.matrix = b_prime(word_matrix(w));
    p.relation_note = "column j lists the d-coordinates of [beta s_j], which vanishes in the cyclic cover";
    return p;
}

std::vector<HalfLaurent> elementary_ideal_minors(const PresentationData& p, int k) {
    if (k < 1 || k > p.n) throw BadSize("minor size must lie in 1.." + std::to_string(p.n));
    const auto picks = combinations(static_cast<std::size_t>(p.n), static_cast<std::size_t>(k));
    const auto count = static_cast<std::int64_t>(picks.size());
    std::vector<HalfLaurent> pairs(picks.size() * picks.size());
#pragma omp parallel for schedule(dynamic) collapse(2)
    for (std::int64_t r = 0; r < count; ++r)
        for (std::int64_t c = 0; c < count; ++c) {
            const HalfLaurent v = det_division_free_serial(
                p.matrix.entries.submatrix(picks[static_cast<std::size_t>(r)], picks[static_cast<std::size_t>(c)]));
            if (!v.is_zero()) pairs[static_cast<std::size_t>(r * count + c)] = normalize_unit(v).first;
        }
    std::vector<HalfLaurent> out;
    for (auto& v : pairs)
        if (!v.is_zero()) out.push_back(std::move(v));
    if (out.empty()) return {HalfLaurent{}};
    std::sort(out.begin(), out.end(), poly_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

HalfLaurent gcd_of(const std::vector<HalfLaurent>& values) {
    HalfLaurent g;
    for (const auto& v : values) g = hl_gcd(g, v);
    return g;
}

HalfLaurent alexander_via_gcd(const BraidWord& w) {
    const PresentationData p = presentation_matrix(w);
    return gcd_of(elementary_ideal_minors(p, p.n - 1));
}

}  // namespace plaitalex
