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

#include "plaitalex/matrix.hpp"

#include <bit>
#include <cstdint>

#include "plaitalex/error.hpp"

namespace plaitalex {

PolyMatrix PolyMatrix::identity(std::size_t size) {
    PolyMatrix m(size, size);
    for (std::size_t i = 0; i < size; ++i) m(i, i) = 1;
    return m;
}

PolyMatrix PolyMatrix::submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
    PolyMatrix out(rows.size(), cols.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < cols.size(); ++c) out(r, c) = (*this)(rows[r], cols[c]);
    return out;
}

PolyMatrix PolyMatrix::minor_matrix(std::size_t row, std::size_t col) const {
    std::vector<std::size_t> rs, cs;
    for (std::size_t r = 0; r < rows_; ++r)
        if (r != row) rs.push_back(r);
    for (std::size_t c = 0; c < cols_; ++c)
        if (c != col) cs.push_back(c);
    return submatrix(rs, cs);
}

namespace {

void check_product(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.cols() != b.rows()) throw BadSize("matrix product dimension mismatch");
}

HalfLaurent dot(const PolyMatrix& a, const PolyMatrix& b, std::size_t r, std::size_t c) {
    HalfLaurent acc;
    for (std::size_t k = 0; k < a.cols(); ++k) {
        if (a(r, k).is_zero() || b(k, c).is_zero()) continue;
        acc += a(r, k) * b(k, c);
    }
    return acc;
}

using Mask = std::uint32_t;

void check_det_input(const PolyMatrix& m) {
    if (!m.is_square()) throw NonSquare("determinant of a non-square matrix");
    if (m.rows() > 24) throw BadSize("subset-expansion determinant limited to 24x24");
}

// Laplace step along row |T|-1 of the leading rows, columns T.
HalfLaurent expand_subset(const PolyMatrix& m, const std::vector<HalfLaurent>& dp, Mask subset) {
    const auto row = static_cast<std::size_t>(std::popcount(subset) - 1);
    HalfLaurent acc;
    for (Mask rest = subset; rest != 0; rest &= rest - 1) {
        const auto j = static_cast<std::size_t>(std::countr_zero(rest));
        const Mask without = subset & ~(Mask{1} << j);
        const HalfLaurent& entry = m(row, j);
        const HalfLaurent& sub = dp[without];
        if (entry.is_zero() || sub.is_zero()) continue;
        const bool odd = std::popcount(subset >> (j + 1)) % 2 != 0;
        if (odd)
            acc -= entry * sub;
        else
            acc += entry * sub;
    }
    return acc;
}

}  // namespace

PolyMatrix multiply_serial(const PolyMatrix& a, const PolyMatrix& b) {
    check_product(a, b);
    PolyMatrix out(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c) out(r, c) = dot(a, b, r, c);
    return out;
}

PolyMatrix multiply(const PolyMatrix& a, const PolyMatrix& b) {
    check_product(a, b);
    PolyMatrix out(a.rows(), b.cols());
    const auto total = static_cast<std::int64_t>(a.rows() * b.cols());
#pragma omp parallel for schedule(dynamic, 4) if (total > 64)
    for (std::int64_t idx = 0; idx < total; ++idx) {
        const auto r = static_cast<std::size_t>(idx) / b.cols();
        const auto c = static_cast<std::size_t>(idx) % b.cols();
        out(r, c) = dot(a, b, r, c);
    }
    return out;
}

HalfLaurent det_division_free_serial(const PolyMatrix& m) {
    check_det_input(m);
    const std::size_t k = m.rows();
    const Mask full = (Mask{1} << k) - 1;
    std::vector<HalfLaurent> dp(std::size_t{1} << k);
    dp[0] = 1;
    for (Mask subset = 1; subset <= full && subset != 0; ++subset) dp[subset] = expand_subset(m, dp, subset);
    return dp[full];
}

HalfLaurent det_division_free(const PolyMatrix& m) {
    check_det_input(m);
    const std::size_t k = m.rows();
    const Mask full = (Mask{1} << k) - 1;
    if (k <= 4) return det_division_free_serial(m);

    std::vector<std::vector<Mask>> layers(k + 1);
    for (Mask subset = 0; subset <= full; ++subset) layers[static_cast<std::size_t>(std::popcount(subset))].push_back(subset);

    std::vector<HalfLaurent> dp(std::size_t{1} << k);
    dp[0] = 1;
    for (std::size_t size = 1; size <= k; ++size) {
        const auto& layer = layers[size];
        const auto count = static_cast<std::int64_t>(layer.size());
#pragma omp parallel for schedule(dynamic, 16)
        for (std::int64_t idx = 0; idx < count; ++idx) {
            const Mask subset = layer[static_cast<std::size_t>(idx)];
            dp[subset] = expand_subset(m, dp, subset);
        }
    }
    return dp[full];
}

}  // namespace plaitalex
