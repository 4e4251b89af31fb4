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

// The action of colored braids on the free module W with ordered basis
// s_1, d_1, s_2, d_2, ..., s_n, d_n over Z[t^(1/2), t^(-1/2)].

#pragma once

#include <cstddef>

#include "plaitalex/braid.hpp"
#include "plaitalex/matrix.hpp"
#include "plaitalex/ring.hpp"

namespace plaitalex {

/// A basis cycle s_i or d_i. D-indices are cyclic: d_0 is d_n and d_(n+1) is d_1.
struct BasisIndex {
    enum class Kind { S, D };
    Kind kind = Kind::S;
    int index = 1;

    static BasisIndex s(int i) { return {Kind::S, i}; }
    static BasisIndex d(int i) { return {Kind::D, i}; }

    /// Row/column number in the 2n x 2n matrix.
    std::size_t position(int n) const;
};

/// 2n x 2n matrix of a braid's action; column j holds the image of basis vector j.
struct RepMatrix {
    int n = 1;
    PolyMatrix entries;

    friend bool operator==(const RepMatrix&, const RepMatrix&) = default;
};

/// n x n matrix with entry (i, j) = r_i applied to the image of s_j, where
/// r_i reads off (coefficient of d_i) - (coefficient of d_(i-1)).
struct BPrime {
    int n = 1;
    PolyMatrix entries;

    friend bool operator==(const BPrime&, const BPrime&) = default;
};

/// Matrix of a single token. Powers other than +-1 are expanded; negative
/// powers of composite tokens act as their reversed, inverted constituents.
/// Throws IndexOutOfRange for tokens invalid at n.
RepMatrix token_matrix(const MoveToken& tok, int n);

/// rho(g_k) ... rho(g_1) for tokens g_1 .. g_k; the bottom token acts first.
RepMatrix word_matrix(const BraidWord& w);
/// Single-threaded reference for word_matrix.
RepMatrix word_matrix_serial(const BraidWord& w);

BPrime b_prime(const RepMatrix& m);

/// Raw coordinates: entry (i, j) = coefficient of d_i in the image of s_j.
PolyMatrix d_coordinates(const RepMatrix& m);

/// True iff m fixes both s_1 + ... + s_n and d_1 + ... + d_n.
bool fixed_vector_check(const RepMatrix& m);

/// Every row and every column sums to zero.
bool is_pseudostochastic(const PolyMatrix& m);

}  // namespace plaitalex
