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

#include "plaitalex/braid.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <optional>
#include <random>
#include <sstream>

#include "plaitalex/error.hpp"

namespace plaitalex {

namespace {

const char* kind_name(TokenKind kind) {
    switch (kind) {
        case TokenKind::M: return "M";
        case TokenKind::N: return "N";
        case TokenKind::P: return "P";
        case TokenKind::Q: return "Q";
        case TokenKind::A:
        case TokenKind::Ai: return "A";
        case TokenKind::X: return "X";
        case TokenKind::E: return "E";
        case TokenKind::SP: return "SP";
    }
    return "?";
}

std::vector<std::string_view> split_ws(std::string_view text) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        std::size_t j = i;
        while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
        if (j > i) out.push_back(text.substr(i, j - i));
        i = j;
    }
    return out;
}

bool parse_int(std::string_view s, long long& out) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    if (s.empty()) return false;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && ptr == s.data() + s.size();
}

struct Lexed {
    std::string kind;
    std::optional<long long> index;
    long long power = 1;
};

// kind index? ("^" nonzero-int)?
Lexed lex_token(std::string_view tok) {
    Lexed out;
    std::size_t i = 0;
    if (tok.starts_with("SP")) {
        out.kind = "SP";
        i = 2;
    } else if (!tok.empty() && std::string_view("MNPQAXEx").find(tok[0]) != std::string_view::npos) {
        out.kind = std::string(1, tok[0]);
        i = 1;
    } else {
        throw SyntaxError("unknown generator in token '" + std::string(tok) + "'");
    }
    std::size_t j = i;
    while (j < tok.size() && std::isdigit(static_cast<unsigned char>(tok[j]))) ++j;
    if (j > i) {
        long long idx = 0;
        if (!parse_int(tok.substr(i, j - i), idx)) throw SyntaxError("bad index in token '" + std::string(tok) + "'");
        out.index = idx;
    }
    if (j < tok.size()) {
        if (tok[j] != '^' || !parse_int(tok.substr(j + 1), out.power))
            throw SyntaxError("malformed token '" + std::string(tok) + "'");
        if (out.power == 0) throw SyntaxError("zero power in token '" + std::string(tok) + "'");
    }
    return out;
}

int checked_int(long long v, std::string_view tok) {
    if (v > 1'000'000 || v < -1'000'000) throw SyntaxError("number out of range in token '" + std::string(tok) + "'");
    return static_cast<int>(v);
}

}  // namespace

bool has_index(TokenKind kind) { return kind != TokenKind::A && kind != TokenKind::X; }

int max_index(TokenKind kind, int n) {
    switch (kind) {
        case TokenKind::Q: return n;
        case TokenKind::A:
        case TokenKind::X: return 0;
        default: return n - 1;
    }
}

int min_pairs(TokenKind kind) { return kind == TokenKind::Q ? 1 : 2; }

void validate(const MoveToken& tok, int n) {
    if (tok.power == 0) throw SyntaxError("zero power in token " + to_string(tok));
    if (!has_index(tok.kind)) {
        if (n < 2) throw IndexOutOfRange("token " + to_string(tok) + " needs n >= 2, got n = " + std::to_string(n));
        return;
    }
    const int hi = max_index(tok.kind, n);
    if (tok.index < 1 || tok.index > hi)
        throw IndexOutOfRange("token " + to_string(tok) + " needs index in 1.." + std::to_string(hi) +
                              " for n = " + std::to_string(n));
}

BraidWord concat(const BraidWord& a, const BraidWord& b) {
    if (a.n != b.n) throw BadSize("cannot concatenate words with different n");
    BraidWord out = a;
    out.tokens.insert(out.tokens.end(), b.tokens.begin(), b.tokens.end());
    return out;
}

BraidWord inverse(const BraidWord& w) {
    BraidWord out{w.n, {}};
    for (auto it = w.tokens.rbegin(); it != w.tokens.rend(); ++it) out.tokens.push_back(it->inverse());
    return out;
}

BraidWord expand_powers(const BraidWord& w) {
    BraidWord out{w.n, {}};
    for (const auto& t : w.tokens) {
        const int step = t.power > 0 ? 1 : -1;
        for (int k = 0; k != t.power; k += step) out.tokens.push_back({t.kind, t.index, step});
    }
    return out;
}

BraidWord parse_word(std::string_view text, int n) {
    if (n < 1) throw BadSize("n must be positive");
    BraidWord w{n, {}};
    for (auto tok : split_ws(text)) {
        Lexed lx = lex_token(tok);
        if (lx.kind == "x") throw SyntaxError("sigma letter '" + std::string(tok) + "' is only accepted in sigma-word input");
        MoveToken mt;
        mt.power = checked_int(lx.power, tok);
        if (lx.kind == "M") mt.kind = TokenKind::M;
        else if (lx.kind == "N") mt.kind = TokenKind::N;
        else if (lx.kind == "P") mt.kind = TokenKind::P;
        else if (lx.kind == "Q") mt.kind = TokenKind::Q;
        else if (lx.kind == "A") mt.kind = lx.index ? TokenKind::Ai : TokenKind::A;
        else if (lx.kind == "X") mt.kind = TokenKind::X;
        else if (lx.kind == "E") mt.kind = TokenKind::E;
        else mt.kind = TokenKind::SP;
        if (has_index(mt.kind)) {
            if (!lx.index) throw SyntaxError("token '" + std::string(tok) + "' needs an index");
            mt.index = checked_int(*lx.index, tok);
        } else if (lx.index) {
            throw SyntaxError("token '" + std::string(tok) + "' takes no index");
        }
        try {
            validate(mt, n);
        } catch (const IndexOutOfRange& e) {
            throw IndexOutOfRange("'" + std::string(tok) + "': " + e.what());
        }
        w.tokens.push_back(mt);
    }
    return w;
}

namespace {

struct Pattern {
    std::vector<int> letters;
    std::vector<MoveToken> tokens;
};

std::vector<Pattern> pattern_table(int n) {
    std::vector<Pattern> base;
    using K = TokenKind;
    if (n >= 2) base.push_back({{2, 1, 1, 2}, {{K::A, 0, 1}}});
    for (int i = 1; i <= n - 1; ++i) {
        const int a = 2 * i - 1, b = 2 * i, c = 2 * i + 1;
        base.push_back({{b, a, c, b}, {{K::Ai, i, 1}}});
        base.push_back({{a, b, a}, {{K::M, i, 1}}});
        base.push_back({{b, a, b}, {{K::M, i, 1}}});
        base.push_back({{b, c, b}, {{K::N, i, 1}}});
        base.push_back({{c, b, c}, {{K::N, i, 1}}});
        base.push_back({{a, -b, a}, {{K::SP, i, 1}}});
        base.push_back({{-b, a, -b}, {{K::P, i, -1}, {K::M, i, 1}, {K::P, i, -1}}});
        base.push_back({{b, b}, {{K::P, i, 1}}});
    }
    for (int i = 1; i <= n; ++i) base.push_back({{2 * i - 1, 2 * i - 1}, {{K::Q, i, 1}}});

    std::vector<Pattern> all = base;
    for (const auto& p : base) {
        Pattern inv;
        for (int l : p.letters) inv.letters.push_back(-l);
        for (auto it = p.tokens.rbegin(); it != p.tokens.rend(); ++it) inv.tokens.push_back(it->inverse());
        all.push_back(std::move(inv));
    }
    std::stable_sort(all.begin(), all.end(),
                     [](const Pattern& x, const Pattern& y) { return x.letters.size() > y.letters.size(); });
    return all;
}

std::string letters_to_string(const std::vector<int>& letters, std::size_t from) {
    std::ostringstream os;
    for (std::size_t i = from; i < letters.size(); ++i) {
        if (i > from) os << ' ';
        os << 'x' << std::abs(letters[i]);
        if (letters[i] < 0) os << "^-1";
    }
    return os.str();
}

}  // namespace

BraidWord parse_sigma_word(std::string_view text, int n) {
    if (n < 1) throw BadSize("n must be positive");
    std::vector<int> letters;
    for (auto tok : split_ws(text)) {
        Lexed lx = lex_token(tok);
        if (lx.kind != "x" || !lx.index) throw SyntaxError("expected a sigma letter x<j>, got '" + std::string(tok) + "'");
        const int j = checked_int(*lx.index, tok);
        if (j < 1 || j > 2 * n - 1)
            throw IndexOutOfRange("'" + std::string(tok) + "': sigma index must lie in 1.." + std::to_string(2 * n - 1));
        const int p = checked_int(lx.power, tok);
        for (int k = 0; k < std::abs(p); ++k) letters.push_back(p > 0 ? j : -j);
    }

    const auto table = pattern_table(n);
    BraidWord w{n, {}};
    std::size_t pos = 0;
    while (pos < letters.size()) {
        const Pattern* hit = nullptr;
        for (const auto& p : table) {
            if (pos + p.letters.size() > letters.size()) continue;
            if (std::equal(p.letters.begin(), p.letters.end(), letters.begin() + static_cast<std::ptrdiff_t>(pos))) {
                hit = &p;
                break;
            }
        }
        if (!hit)
            throw UnmatchedResidue("no colored generator pattern matches '" + letters_to_string(letters, pos) +
                                   "'; supply the word as colored tokens (M, N, P, Q, ...) instead");
        w.tokens.insert(w.tokens.end(), hit->tokens.begin(), hit->tokens.end());
        pos += hit->letters.size();
    }

    const auto strands = 2 * n;
    const auto expected = strand_permutation(letters, strands);
    if (!is_color_preserving(expected) || strand_permutation(sigma_letters(w), strands) != expected)
        throw NotColorPreserving("sigma word does not preserve strand colors");
    return w;
}

std::string to_string(const MoveToken& tok) {
    std::string s = kind_name(tok.kind);
    if (has_index(tok.kind)) s += std::to_string(tok.index);
    if (tok.power != 1) s += "^" + std::to_string(tok.power);
    return s;
}

std::string to_string(const BraidWord& w) {
    std::string s;
    for (const auto& t : w.tokens) {
        if (!s.empty()) s += ' ';
        s += to_string(t);
    }
    return s;
}

std::vector<int> sigma_letters(const MoveToken& tok) {
    const int i = tok.index;
    const int a = 2 * i - 1, b = 2 * i, c = 2 * i + 1;
    std::vector<int> one;
    switch (tok.kind) {
        case TokenKind::M: one = {a, b, a}; break;
        case TokenKind::N: one = {b, c, b}; break;
        case TokenKind::P: one = {b, b}; break;
        case TokenKind::Q: one = {a, a}; break;
        case TokenKind::A: one = {2, 1, 1, 2}; break;
        case TokenKind::Ai: one = {b, a, c, b}; break;
        case TokenKind::X: one = {1, 2, 1, 1, 2, 1}; break;
        case TokenKind::E: one = {a, b, a, c, b, c}; break;
        case TokenKind::SP: one = {a, -b, a}; break;
    }
    std::vector<int> out;
    for (int k = 0; k < std::abs(tok.power); ++k) {
        if (tok.power > 0) {
            out.insert(out.end(), one.begin(), one.end());
        } else {
            for (auto it = one.rbegin(); it != one.rend(); ++it) out.push_back(-*it);
        }
    }
    return out;
}

std::vector<int> sigma_letters(const BraidWord& w) {
    std::vector<int> out;
    for (const auto& t : w.tokens) {
        auto l = sigma_letters(t);
        out.insert(out.end(), l.begin(), l.end());
    }
    return out;
}

std::vector<int> strand_permutation(const std::vector<int>& letters, int strands) {
    std::vector<int> at(static_cast<std::size_t>(strands));
    for (int p = 0; p < strands; ++p) at[static_cast<std::size_t>(p)] = p;
    for (int l : letters) {
        const auto j = static_cast<std::size_t>(std::abs(l));
        std::swap(at[j - 1], at[j]);
    }
    return at;
}

bool is_color_preserving(const std::vector<int>& permutation) {
    for (std::size_t p = 0; p < permutation.size(); ++p)
        if ((permutation[p] ^ static_cast<int>(p)) & 1) return false;
    return true;
}

WritheCounts writhe_counts(const BraidWord& w) {
    WritheCounts total;
    for (const auto& t : w.tokens) {
        WritheCounts one;
        switch (t.kind) {
            case TokenKind::M: one = {1, 0}; break;
            case TokenKind::N: one = {0, 1}; break;
            case TokenKind::P:
            case TokenKind::Q: one = {0, 0}; break;
            case TokenKind::A:
            case TokenKind::X: one = {2, 0}; break;
            case TokenKind::Ai:
            case TokenKind::E: one = {1, 1}; break;
            case TokenKind::SP: one = {-1, 0}; break;
        }
        total = total + WritheCounts{one.phi_odd * t.power, one.phi_even * t.power};
    }
    return total;
}

Unit e_of(const BraidWord& w) {
    const WritheCounts wc = writhe_counts(w);
    return {(wc.phi_even % 2 == 0) ? 1 : -1, wc.phi_odd - wc.phi_even};
}

BraidWord stabilize(const BraidWord& w) {
    BraidWord out{w.n + 1, {}};
    out.tokens.push_back({TokenKind::N, w.n, 1});
    out.tokens.insert(out.tokens.end(), w.tokens.begin(), w.tokens.end());
    return out;
}

BraidWord hang_circle(const BraidWord& w) {
    BraidWord out{w.n + 1, w.tokens};
    out.tokens.push_back({TokenKind::P, w.n, 1});
    return out;
}

SkeinTriple skein_triple(const BraidWord& w, int i) {
    if (i < 1 || i > w.n - 1)
        throw IndexOutOfRange("skein position " + std::to_string(i) + " needs 1 <= i <= " + std::to_string(w.n - 1));
    auto prefixed = [&](TokenKind k) {
        BraidWord out{w.n, {{k, i, 1}}};
        out.tokens.insert(out.tokens.end(), w.tokens.begin(), w.tokens.end());
        return out;
    };
    return {prefixed(TokenKind::SP), prefixed(TokenKind::M), prefixed(TokenKind::Q)};
}

std::vector<BraidWord> rn_generators(int n) {
    if (n < 2) throw NTooSmall("move generators need n >= 2");
    std::vector<BraidWord> out;
    for (int i = 1; i <= n; ++i) out.push_back({n, {{TokenKind::Q, i, 1}}});
    out.push_back({n, {{TokenKind::X, 0, 1}}});
    out.push_back({n, {{TokenKind::A, 0, 1}}});
    for (int i = 1; i <= n - 1; ++i) out.push_back({n, {{TokenKind::Ai, i, 1}}});
    for (int i = 1; i <= n - 1; ++i) out.push_back({n, {{TokenKind::E, i, 1}}});
    return out;
}

BraidWord random_word(int n, std::size_t length, std::uint64_t seed) {
    if (n < 2) throw NTooSmall("random words need n >= 2");
    std::vector<MoveToken> alphabet;
    for (TokenKind k : {TokenKind::M, TokenKind::N, TokenKind::P, TokenKind::Q})
        for (int i = 1; i <= max_index(k, n); ++i)
            for (int p : {1, -1}) alphabet.push_back({k, i, p});
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
    BraidWord w{n, {}};
    w.tokens.reserve(length);
    for (std::size_t k = 0; k < length; ++k) w.tokens.push_back(alphabet[pick(rng)]);
    return w;
}

}  // namespace plaitalex
