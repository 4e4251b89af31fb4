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

#include "plaitalex/rep.hpp"

#include <cstdint>
#include <utility>
#include <vector>

#include "plaitalex/error.hpp"

namespace plaitalex {

std::size_t BasisIndex::position(int n) const {
    if (kind == Kind::S) {
        if (index < 1 || index > n) throw IndexOutOfRange("basis vector s" + std::to_string(index) + " outside 1.." + std::to_string(n));
        return static_cast<std::size_t>(2 * (index - 1));
    }
    const int wrapped = ((index - 1) % n + n) % n + 1;
    return static_cast<std::size_t>(2 * (wrapped - 1) + 1);
}

namespace {

using Basis = BasisIndex;

// Accumulates "v -> image" rules into identity + deltas. When two rules name
// the same vector (d_(i-1) = d_(i+1) at n = 2) their deltas add.
class ActionTable {
public:
    explicit ActionTable(int n) : n_(n), m_(PolyMatrix::identity(static_cast<std::size_t>(2 * n))) {}

    ActionTable& map(Basis source, std::initializer_list<std::pair<HalfLaurent, Basis>> image) {
        const auto col = source.position(n_);
        m_(col, col) -= 1;
        for (const auto& [coef, target] : image) m_(target.position(n_), col) += coef;
        return *this;
    }

    RepMatrix done() const { return {n_, m_}; }

private:
    int n_;
    PolyMatrix m_;
};

const HalfLaurent& u() {
    static const HalfLaurent v = HalfLaurent::u_power(1);
    return v;
}
const HalfLaurent& u_inv() {
    static const HalfLaurent v = HalfLaurent::u_power(-1);
    return v;
}
// t^(-1/2) - t^(1/2)
const HalfLaurent& skein_coef() {
    static const HalfLaurent v = u_inv() - u();
    return v;
}

Basis s(int i) { return Basis::s(i); }
Basis d(int i) { return Basis::d(i); }

// M_i; x = t^(-1/2) for M_i and t^(1/2) for its inverse.
RepMatrix swap_black(int i, int n, const HalfLaurent& x) {
    return ActionTable(n)
        .map(d(i - 1), {{1, d(i - 1)}, {1, d(i)}, {-x, s(i)}})
        .map(s(i), {{x, d(i)}})
        .map(d(i), {{x, s(i)}})
        .map(s(i + 1), {{1, s(i)}, {1, s(i + 1)}, {-x, d(i)}})
        .done();
}

// N_i; y = t^(1/2) for N_i and t^(-1/2) for its inverse.
RepMatrix swap_white(int i, int n, const HalfLaurent& y) {
    return ActionTable(n)
        .map(s(i), {{1, s(i)}, {1, s(i + 1)}, {-y, d(i)}})
        .map(d(i), {{y, s(i + 1)}})
        .map(s(i + 1), {{y, d(i)}})
        .map(d(i + 1), {{1, d(i)}, {1, d(i + 1)}, {-y, s(i + 1)}})
        .done();
}

// P_i; k = t^(-1/2) - t^(1/2), negated for the inverse.
RepMatrix twist_mixed(int i, int n, const HalfLaurent& k) {
    return ActionTable(n).map(s(i), {{1, s(i)}, {k, d(i)}}).map(s(i + 1), {{1, s(i + 1)}, {-k, d(i)}}).done();
}

// Q_i, same convention as P_i.
RepMatrix twist_black(int i, int n, const HalfLaurent& k) {
    return ActionTable(n).map(d(i - 1), {{1, d(i - 1)}, {-k, s(i)}}).map(d(i), {{1, d(i)}, {k, s(i)}}).done();
}

RepMatrix table_x(int n) {
    const HalfLaurent t_inv = HalfLaurent::u_power(-2);
    const HalfLaurent one_minus = HalfLaurent(1) - t_inv;
    return ActionTable(n)
        .map(d(0), {{1, d(0)}, {one_minus, d(1)}})
        .map(s(1), {{t_inv, s(1)}})
        .map(d(1), {{t_inv, d(1)}})
        .map(s(2), {{1, s(2)}, {one_minus, s(1)}})
        .done();
}

RepMatrix table_a(int n) {
    const HalfLaurent t_inv = HalfLaurent::u_power(-2);
    const HalfLaurent one_minus = HalfLaurent(1) - t_inv;
    const HalfLaurent w = HalfLaurent::u_power(-3) - u_inv();  // t^(-3/2) - t^(-1/2)
    return ActionTable(n)
        .map(d(0), {{1, d(0)}, {one_minus, d(1)}, {w, s(1)}})
        .map(s(1), {{t_inv, s(1)}})
        .map(d(1), {{t_inv, d(1)}, {-w, s(1)}})
        .map(s(2), {{1, s(2)}, {one_minus, s(1)}})
        .done();
}

RepMatrix table_ai(int i, int n) {
    return ActionTable(n)
        .map(d(i - 1), {{1, d(i - 1)}, {1, d(i)}, {-u_inv(), s(i)}})
        .map(s(i), {{1, s(i + 1)}})
        .map(d(i), {{-1, d(i)}, {u_inv(), s(i)}, {u(), s(i + 1)}})
        .map(s(i + 1), {{1, s(i)}})
        .map(d(i + 1), {{1, d(i)}, {1, d(i + 1)}, {-u(), s(i + 1)}})
        .done();
}

// s_(2i-1) A_i s_(2i+1) = M_i N_i.
RepMatrix table_e(int i, int n) {
    return ActionTable(n)
        .map(d(i - 1), {{1, d(i - 1)}, {1, d(i)}, {-u_inv(), s(i)}, {u() - u_inv(), s(i + 1)}})
        .map(s(i), {{1, s(i + 1)}})
        .map(d(i), {{-1, d(i)}, {u_inv(), s(i)}, {u_inv(), s(i + 1)}})
        .map(s(i + 1), {{1, s(i)}})
        .map(d(i + 1), {{1, d(i)}, {1, d(i + 1)}, {-u(), s(i + 1)}})
        .done();
}

RepMatrix table_sp(int i, int n) {
    const HalfLaurent t_minus_1 = HalfLaurent::u_power(2) - 1;
    const HalfLaurent& c = skein_coef();
    return ActionTable(n)
        .map(d(i - 1), {{1, d(i)}, {1, d(i - 1)}, {-u(), s(i)}, {t_minus_1, d(i)}, {t_minus_1 * c, s(i)}})
        .map(s(i), {{u(), d(i)}, {-t_minus_1, s(i)}})
        .map(d(i), {{u(), s(i)}, {-t_minus_1, d(i)}, {-(t_minus_1 * c), s(i)}})
        .map(s(i + 1), {{1, s(i)}, {1, s(i + 1)}, {-u(), d(i)}, {t_minus_1, s(i)}})
        .done();
}

std::vector<MoveToken> constituents(const MoveToken& tok) {
    using K = TokenKind;
    const int i = tok.index;
    switch (tok.kind) {
        case K::A: return {{K::M, 1, 1}, {K::P, 1, -1}, {K::M, 1, 1}};
        case K::X: return {{K::M, 1, 1}, {K::M, 1, 1}};
        case K::Ai: return {{K::M, i, 1}, {K::P, i, -1}, {K::N, i, 1}};
        case K::E: return {{K::M, i, 1}, {K::N, i, 1}};
        case K::SP: return {{K::Q, i, 1}, {K::M, i, -1}, {K::Q, i, 1}};
        default: return {tok};
    }
}

RepMatrix unit_token_matrix(const MoveToken& tok, int n) {
    const int i = tok.index;
    const bool fwd = tok.power > 0;
    switch (tok.kind) {
        case TokenKind::M: return swap_black(i, n, fwd ? u_inv() : u());
        case TokenKind::N: return swap_white(i, n, fwd ? u() : u_inv());
        case TokenKind::P: return twist_mixed(i, n, fwd ? skein_coef() : -skein_coef());
        case TokenKind::Q: return twist_black(i, n, fwd ? skein_coef() : -skein_coef());
        default: break;
    }
    if (fwd) {
        switch (tok.kind) {
            case TokenKind::A: return table_a(n);
            case TokenKind::X: return table_x(n);
            case TokenKind::Ai: return table_ai(i, n);
            case TokenKind::E: return table_e(i, n);
            case TokenKind::SP: return table_sp(i, n);
            default: break;
        }
    }
    BraidWord inv{n, {}};
    auto parts = constituents(tok.inverse());
    for (auto it = parts.rbegin(); it != parts.rend(); ++it) inv.tokens.push_back(it->inverse());
    return word_matrix_serial(inv);
}

// Columns of rho(g) - I that are nonzero.
struct Delta {
    std::size_t source;
    std::vector<std::pair<std::size_t, HalfLaurent>> column;
};

std::vector<Delta> deltas_of(const RepMatrix& g) {
    std::vector<Delta> out;
    const std::size_t dim = g.entries.rows();
    for (std::size_t c = 0; c < dim; ++c) {
        Delta delta{c, {}};
        for (std::size_t r = 0; r < dim; ++r) {
            HalfLaurent v = g.entries(r, c);
            if (r == c) v -= 1;
            if (!v.is_zero()) delta.column.emplace_back(r, std::move(v));
        }
        if (!delta.column.empty()) out.push_back(std::move(delta));
    }
    return out;
}

// current <- rho(g) * current, one column of `current` at a time.
void apply_column(PolyMatrix& current, const std::vector<Delta>& deltas, std::size_t col) {
    std::vector<std::pair<std::size_t, HalfLaurent>> updates;
    for (const auto& delta : deltas) {
        const HalfLaurent& x = current(delta.source, col);
        if (x.is_zero()) continue;
        for (const auto& [row, coef] : delta.column) updates.emplace_back(row, coef * x);
    }
    for (auto& [row, v] : updates) current(row, col) += v;
}

template <bool Parallel>
RepMatrix evaluate(const BraidWord& w) {
    const auto dim = static_cast<std::size_t>(2 * w.n);
    PolyMatrix current = PolyMatrix::identity(dim);
    for (const auto& tok : expand_powers(w).tokens) {
        const auto deltas = deltas_of(token_matrix(tok, w.n));
        if constexpr (Parallel) {
#pragma omp parallel for schedule(static) if (dim >= 8)
            for (std::int64_t c = 0; c < static_cast<std::int64_t>(dim); ++c)
                apply_column(current, deltas, static_cast<std::size_t>(c));
        } else {
            for (std::size_t c = 0; c < dim; ++c) apply_column(current, deltas, c);
        }
    }
    return {w.n, std::move(current)};
}

}  // namespace

RepMatrix token_matrix(const MoveToken& tok, int n) {
    validate(tok, n);
    if (tok.power == 1 || tok.power == -1) return unit_token_matrix(tok, n);
    return word_matrix_serial(BraidWord{n, {tok}});
}

RepMatrix word_matrix(const BraidWord& w) { return evaluate<true>(w); }

RepMatrix word_matrix_serial(const BraidWord& w) { return evaluate<false>(w); }

PolyMatrix d_coordinates(const RepMatrix& m) {
    const auto n = static_cast<std::size_t>(m.n);
    PolyMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out(i, j) = m.entries(2 * i + 1, 2 * j);
    return out;
}

BPrime b_prime(const RepMatrix& m) {
    const auto n = static_cast<std::size_t>(m.n);
    const PolyMatrix raw = d_coordinates(m);
    BPrime out{m.n, PolyMatrix(n, n)};
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t prev = (i + n - 1) % n;
        for (std::size_t j = 0; j < n; ++j) out.entries(i, j) = raw(i, j) - raw(prev, j);
    }
    return out;
}

bool fixed_vector_check(const RepMatrix& m) {
    const auto dim = m.entries.rows();
    for (std::size_t parity = 0; parity < 2; ++parity) {
        for (std::size_t r = 0; r < dim; ++r) {
            HalfLaurent sum;
            for (std::size_t c = parity; c < dim; c += 2) sum += m.entries(r, c);
            const HalfLaurent expected = (r % 2 == parity) ? HalfLaurent(1) : HalfLaurent();
            if (sum != expected) return false;
        }
    }
    return true;
}

bool is_pseudostochastic(const PolyMatrix& m) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
        HalfLaurent sum;
        for (std::size_t c = 0; c < m.cols(); ++c) sum += m(r, c);
        if (!sum.is_zero()) return false;
    }
    for (std::size_t c = 0; c < m.cols(); ++c) {
        HalfLaurent sum;
        for (std::size_t r = 0; r < m.rows(); ++r) sum += m(r, c);
        if (!sum.is_zero()) return false;
    }
    return true;
}

}  // namespace plaitalex
