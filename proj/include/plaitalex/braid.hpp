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

// Colored braid words on 2n strands.
//
// A word is a list of colored generator tokens read left to right, the
// leftmost token sitting at the bottom of the braid. Odd strands are black,
// even strands white; every token permutes strands within their color.

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "plaitalex/ring.hpp"

namespace plaitalex {

enum class TokenKind {
    M,   // s(2i-1) s(2i) s(2i-1): swap two black strands
    N,   // s(2i) s(2i+1) s(2i): swap two white strands
    P,   // s(2i)^2
    Q,   // s(2i-1)^2
    A,   // s2 s1^2 s2
    Ai,  // s(2i) s(2i-1) s(2i+1) s(2i)
    X,   // s1 A s1
    E,   // s(2i-1) A_i s(2i+1)
    SP,  // s(2i-1) s(2i)^-1 s(2i-1)
};

struct MoveToken {
    TokenKind kind = TokenKind::M;
    int index = 0;  // 0 for A and X
    int power = 1;

    MoveToken inverse() const { return {kind, index, -power}; }
    friend bool operator==(const MoveToken&, const MoveToken&) = default;
};

bool has_index(TokenKind kind);
/// Largest valid index for the kind at n strand pairs (0 when the kind has no index).
int max_index(TokenKind kind, int n);
/// Smallest n for which the kind has any valid instance.
int min_pairs(TokenKind kind);
/// Throws IndexOutOfRange if the token is not valid at n strand pairs.
void validate(const MoveToken& tok, int n);

struct BraidWord {
    int n = 1;  // strand pairs; the braid has 2n strands
    std::vector<MoveToken> tokens;

    friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

/// Concatenation: a below b. Both must share n.
BraidWord concat(const BraidWord& a, const BraidWord& b);
/// The inverse braid: reversed tokens with negated powers.
BraidWord inverse(const BraidWord& w);
/// Rewrites every token with |power| > 1 as repeated power +-1 tokens.
BraidWord expand_powers(const BraidWord& w);

/// Parses the colored token grammar, e.g. "P1^-1 M1 P1^-1", "A", "A2", "SP1^3".
BraidWord parse_word(std::string_view text, int n);

/// Parses a word in sigma letters ("x2^-1 x1 x2^-1") and rewrites it into
/// colored tokens by greedy longest-match against a fixed pattern table.
BraidWord parse_sigma_word(std::string_view text, int n);

/// Canonical spelling accepted back by parse_word.
std::string to_string(const MoveToken& tok);
std::string to_string(const BraidWord& w);

/// Signed sigma letters of a token: +j for s_j, -j for s_j^-1.
std::vector<int> sigma_letters(const MoveToken& tok);
std::vector<int> sigma_letters(const BraidWord& w);

/// Strand permutation of a sigma-letter word on `strands` strands:
/// result[p] is the bottom position of the strand that ends at top position p.
std::vector<int> strand_permutation(const std::vector<int>& letters, int strands);
bool is_color_preserving(const std::vector<int>& permutation);

/// Exponent sums of the black-strand and white-strand sub-braids.
struct WritheCounts {
    std::int64_t phi_odd = 0;
    std::int64_t phi_even = 0;

    friend WritheCounts operator+(WritheCounts a, WritheCounts b) {
        return {a.phi_odd + b.phi_odd, a.phi_even + b.phi_even};
    }
    friend WritheCounts operator-(WritheCounts a) { return {-a.phi_odd, -a.phi_even}; }
    friend bool operator==(const WritheCounts&, const WritheCounts&) = default;
};

WritheCounts writhe_counts(const BraidWord& w);

/// The normalizing unit e(w) = t^(phi_odd/2) * (-t^(-1/2))^phi_even.
Unit e_of(const BraidWord& w);

/// Adds a trivial strand pair joined by N_n at the very bottom.
BraidWord stabilize(const BraidWord& w);
/// Adds a strand pair linked once to strand 2n by P_n at the very top.
BraidWord hang_circle(const BraidWord& w);

struct SkeinTriple {
    BraidWord plus;   // SP_i w
    BraidWord minus;  // M_i w
    BraidWord zero;   // Q_i w
};
SkeinTriple skein_triple(const BraidWord& w, int i);

/// One-token words for the move-subgroup generators at n >= 2:
/// Q_1..Q_n, X, A, A_1..A_(n-1), E_1..E_(n-1).
std::vector<BraidWord> rn_generators(int n);

/// Deterministic random word over M, N, P, Q with powers +-1.
BraidWord random_word(int n, std::size_t length, std::uint64_t seed);

}  // namespace plaitalex
