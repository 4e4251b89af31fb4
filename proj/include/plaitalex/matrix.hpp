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

#pragma once

#include <cstddef>
#include <vector>

#include "plaitalex/ring.hpp"

namespace plaitalex {

/// Dense row-major matrix over Z[u, u^-1].
class PolyMatrix {
public:
    PolyMatrix() = default;
    PolyMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static PolyMatrix identity(std::size_t size);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    HalfLaurent& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const HalfLaurent& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    /// Rows and columns given by index lists, in the listed order.
    PolyMatrix submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;
    /// Drops one row and one column.
    PolyMatrix minor_matrix(std::size_t row, std::size_t col) const;

    friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<HalfLaurent> data_;
};

/// Serial reference product.
PolyMatrix multiply_serial(const PolyMatrix& a, const PolyMatrix& b);
/// OpenMP product, parallel over output entries.
PolyMatrix multiply(const PolyMatrix& a, const PolyMatrix& b);

/// Determinant by Laplace expansion over column subsets, never dividing.
///
/// dp[S] holds the determinant of the first |S| rows restricted to the
/// columns in S; dp[S] = sum over j in S of +-m(|S|-1, j) * dp[S \ {j}].
/// O(2^k k) ring operations and 2^k intermediate values, so intended for
/// k up to ~20. The 0x0 determinant is 1. Throws NonSquare.
HalfLaurent det_division_free_serial(const PolyMatrix& m);

/// Same recurrence evaluated layer by layer (by |S|) with each layer's
/// subsets computed in parallel.
HalfLaurent det_division_free(const PolyMatrix& m);

}  // namespace plaitalex
