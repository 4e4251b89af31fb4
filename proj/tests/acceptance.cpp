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

// Acceptance run: one PASS/FAIL line per criterion, exact comparisons only.
// Exits 0 iff every criterion passes.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "plaitalex/alexmodule.hpp"
#include "plaitalex/braid.hpp"
#include "plaitalex/error.hpp"
#include "plaitalex/invariant.hpp"
#include "plaitalex/rep.hpp"

namespace px = plaitalex;
using px::BraidWord;
using px::HalfLaurent;

namespace {

struct Verdict {
    bool pass = true;
    std::string detail;
};

HalfLaurent u(px::Exponent k = 1) { return HalfLaurent::u_power(k); }
HalfLaurent link(const BraidWord& w) { return px::u_link(w).u_link; }

// Words for criterion c, sample k: reproducible and independent across criteria.
BraidWord sample(int criterion, std::uint64_t k, int min_n, int max_n, std::size_t max_len) {
    std::mt19937_64 rng((static_cast<std::uint64_t>(criterion) << 32) ^ (k * 0x9e3779b97f4a7c15ULL));
    const int n = std::uniform_int_distribution<int>(min_n, max_n)(rng);
    const auto len = std::uniform_int_distribution<std::size_t>(0, max_len)(rng);
    return px::random_word(n, len, rng());
}

std::string describe(const BraidWord& w) { return "n=" + std::to_string(w.n) + " \"" + px::to_string(w) + "\""; }

Verdict trefoil() {
    const auto start = std::chrono::steady_clock::now();
    const px::InvariantResult r = px::u_link(px::parse_word("P1^-1 M1 P1^-1", 2));
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream d;
    d << "u_link = " << px::to_string(r.u_link) << ", e = " << px::to_string(r.e.to_poly()) << ", " << ms << " ms";
    return {r.u_link == u(2) + u(-2) - 1 && r.e == px::Unit{1, 1} && ms < 10.0, d.str()};
}

Verdict hopf() {
    const px::InvariantResult r = px::u_link(px::parse_word("P1", 2));
    const bool ok = r.u_link == u(-1) - u() && r.e == px::Unit{} && px::to_string(r.conway) == "-z";
    return {ok, "u_link = " + px::to_string(r.u_link) + ", e = " + px::to_string(r.e.to_poly()) +
                    ", conway = " + px::to_string(r.conway)};
}

Verdict unlink_unknot() {
    const HalfLaurent unlink = link(BraidWord{2, {}});
    const HalfLaurent unknot = link(px::parse_word("N1", 2));
    return {unlink.is_zero() && unknot == HalfLaurent(1),
            "identity -> " + px::to_string(unlink) + ", N1 -> " + px::to_string(unknot)};
}

Verdict skein() {
    for (std::uint64_t k = 0; k < 200; ++k) {
        const BraidWord w = sample(4, k, 2, 5, 30);
        std::mt19937_64 rng(k);
        const int i = std::uniform_int_distribution<int>(1, w.n - 1)(rng);
        if (!px::skein_check(w, i)) return {false, "fails at position " + std::to_string(i) + " for " + describe(w)};
    }
    return {true, "200 (word, position) pairs, n <= 5, length <= 30"};
}

Verdict rn_moves() {
    // Families: Q_i, sigma_1 A sigma_1, A, A_i, E_i.
    const std::vector<std::pair<std::string, std::function<bool(const BraidWord&)>>> families = {
        {"Q", [](const BraidWord& g) { return g.tokens[0].kind == px::TokenKind::Q; }},
        {"X", [](const BraidWord& g) { return g.tokens[0].kind == px::TokenKind::X; }},
        {"A", [](const BraidWord& g) { return g.tokens[0].kind == px::TokenKind::A; }},
        {"A_i", [](const BraidWord& g) { return g.tokens[0].kind == px::TokenKind::Ai; }},
        {"E", [](const BraidWord& g) { return g.tokens[0].kind == px::TokenKind::E; }},
    };
    std::size_t checks = 0;
    for (std::size_t f = 0; f < families.size(); ++f) {
        for (std::uint64_t k = 0; k < 50; ++k) {
            const BraidWord w = sample(5, f * 1000 + k, 2, 4, 20);
            const HalfLaurent v = link(w);
            for (const BraidWord& g : px::rn_generators(w.n)) {
                if (!families[f].second(g)) continue;
                checks += 2;
                if (link(px::concat(g, w)) != v) return {false, "prefix " + px::to_string(g) + " on " + describe(w)};
                if (link(px::concat(w, g)) != v) return {false, "suffix " + px::to_string(g) + " on " + describe(w)};
            }
        }
    }
    return {true, "5 families x 50 words, " + std::to_string(checks) + " prefix/suffix checks"};
}

Verdict stab_and_hang() {
    // The stated factor for hanging a circle.
    const HalfLaurent factor = u() - u(-1);
    std::size_t stab_ok = 0, hang_ok = 0, opposite_ok = 0;
    std::string witness;
    for (std::uint64_t k = 0; k < 50; ++k) {
        const BraidWord w = sample(6, k, 2, 4, 20);
        const HalfLaurent v = link(w);
        if (link(px::stabilize(w)) == v) ++stab_ok;
        const HalfLaurent hung = link(px::hang_circle(w));
        if (hung == px::hopf_value() * v) ++opposite_ok;
        if (hung == factor * v) {
            ++hang_ok;
        } else if (witness.empty()) {
            witness = "; first hang witness " + describe(w) + ": u_link = " + px::to_string(v) + ", after hang " +
                      px::to_string(hung) + ", expected " + px::to_string(factor * v);
        }
    }
    std::ostringstream d;
    d << "stabilize " << stab_ok << "/50, hang_circle with factor t^1/2 - t^-1/2 " << hang_ok
      << "/50 (with t^-1/2 - t^1/2: " << opposite_ok << "/50)" << witness;
    return {stab_ok == 50 && hang_ok == 50, d.str()};
}

Verdict matrix_level() {
    for (std::uint64_t k = 0; k < 100; ++k) {
        const BraidWord w = sample(7, k, 2, 5, 30);
        const px::RepMatrix m = px::word_matrix(w);
        const px::BPrime b = px::b_prime(m);
        if (!px::is_pseudostochastic(b.entries)) return {false, "B' not pseudostochastic for " + describe(w)};
        if (!px::fixed_vector_check(m)) return {false, "fixed vectors moved by " + describe(w)};
        if (!px::det_division_free(b.entries).is_zero()) return {false, "det B' != 0 for " + describe(w)};
        const px::PolyMatrix minors = px::all_first_minors(b);
        const HalfLaurent ref = minors(0, 0);
        for (std::size_t i = 0; i < minors.rows(); ++i)
            for (std::size_t j = 0; j < minors.cols(); ++j) {
                const HalfLaurent signed_minor = (i + j) % 2 == 0 ? minors(i, j) : -minors(i, j);
                if (signed_minor != ref) return {false, "signed minors differ for " + describe(w)};
            }
    }
    return {true, "100 words, n <= 5, length <= 30"};
}

Verdict composites() {
    using px::TokenKind;
    auto rho = [](std::vector<px::MoveToken> toks, int n) { return px::word_matrix(BraidWord{n, std::move(toks)}); };
    std::size_t checks = 0;
    for (int n = 1; n <= 6; ++n) {
        const auto id = px::PolyMatrix::identity(static_cast<std::size_t>(2 * n));
        if (n >= 2) {
            if (rho({{TokenKind::A, 0, 1}}, n) != rho({{TokenKind::M, 1, 1}, {TokenKind::P, 1, -1}, {TokenKind::M, 1, 1}}, n))
                return {false, "A at n=" + std::to_string(n)};
            if (rho({{TokenKind::X, 0, 1}}, n) != rho({{TokenKind::M, 1, 1}, {TokenKind::M, 1, 1}}, n))
                return {false, "X at n=" + std::to_string(n)};
            checks += 2;
            for (int i = 1; i < n; ++i) {
                if (rho({{TokenKind::Ai, i, 1}}, n) !=
                    rho({{TokenKind::M, i, 1}, {TokenKind::P, i, -1}, {TokenKind::N, i, 1}}, n))
                    return {false, "A_" + std::to_string(i) + " at n=" + std::to_string(n)};
                if (rho({{TokenKind::SP, i, 1}}, n) !=
                    rho({{TokenKind::Q, i, 1}, {TokenKind::M, i, -1}, {TokenKind::Q, i, 1}}, n))
                    return {false, "SP_" + std::to_string(i) + " at n=" + std::to_string(n)};
                checks += 2;
            }
        }
        for (TokenKind kind : {TokenKind::M, TokenKind::N, TokenKind::P, TokenKind::Q, TokenKind::A, TokenKind::Ai,
                               TokenKind::X, TokenKind::E, TokenKind::SP}) {
            if (n < px::min_pairs(kind)) continue;
            const int lo = px::has_index(kind) ? 1 : 0;
            const int hi = px::has_index(kind) ? px::max_index(kind, n) : 0;
            for (int i = lo; i <= hi; ++i) {
                const px::MoveToken t{kind, i, 1};
                if (rho({t, t.inverse()}, n).entries != id || rho({t.inverse(), t}, n).entries != id)
                    return {false, "inverse of " + px::to_string(t) + " at n=" + std::to_string(n)};
                ++checks;
            }
        }
    }
    return {true, std::to_string(checks) + " exact matrix identities, n <= 6"};
}

Verdict conway() {
    for (std::uint64_t k = 0; k < 100; ++k) {
        const BraidWord w = sample(9, k, 2, 5, 30);
        const HalfLaurent v = link(w);
        if (px::conway_involution(v) != v) return {false, "not symmetric: " + describe(w)};
        try {
            if (px::to_conway(v).expand() != v) return {false, "round trip fails: " + describe(w)};
        } catch (const px::Error& e) {
            return {false, std::string(e.what()) + ": " + describe(w)};
        }
    }
    return {true, "100 words, n <= 5, length <= 30"};
}

Verdict module_gcd() {
    std::size_t found = 0;
    for (std::uint64_t k = 0; found < 50 && k < 10000; ++k) {
        const BraidWord w = sample(10, k, 2, 5, 25);
        const HalfLaurent ub = px::u_beta(w);
        if (ub.is_zero()) continue;
        ++found;
        if (px::alexander_via_gcd(w) != px::normalize_unit(ub).first) return {false, "gcd disagrees: " + describe(w)};
    }
    return {found == 50, std::to_string(found) + " words with nonzero U_beta"};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
        {"trefoil reproduction", trefoil},
        {"Hopf reproduction", hopf},
        {"unlink and unknot", unlink_unknot},
        {"skein suite", skein},
        {"R_n move suite", rn_moves},
        {"stabilization and hang-circle", stab_and_hang},
        {"matrix-level suite", matrix_level},
        {"composite consistency", composites},
        {"Conway representability", conway},
        {"Alexander-module agreement", module_gcd},
    };
    const auto start = std::chrono::steady_clock::now();
    int failed = 0;
    for (std::size_t c = 0; c < criteria.size(); ++c) {
        Verdict v;
        try {
            v = criteria[c].second();
        } catch (const std::exception& e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        if (!v.pass) ++failed;
        std::cout << "criterion " << (c + 1) << " " << (v.pass ? "PASS" : "FAIL") << "  " << criteria[c].first
                  << ": " << v.detail << '\n';
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria passed in "
              << secs << " s\n";
    return failed == 0 ? 0 : 1;
}
