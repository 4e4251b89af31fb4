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

#include "plaitalex/invariant.hpp"

#include <cstdint>

#include "plaitalex/error.hpp"

namespace plaitalex {

namespace {

void require_pairs(int n) {
    if (n < 2) throw NTooSmall("needs n >= 2 strand pairs, got n = " + std::to_string(n));
}

HalfLaurent leading_minor(const BPrime& b) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i + 1 < static_cast<std::size_t>(b.n); ++i) idx.push_back(i);
    return det_division_free(b.entries.submatrix(idx, idx));
}

}  // namespace

HalfLaurent hopf_value() {
    return HalfLaurent::u_power(-1) - HalfLaurent::u_power(1);
}

HalfLaurent u_beta(const BraidWord& w) {
    require_pairs(w.n);
    return leading_minor(b_prime(word_matrix(w)));
}

InvariantResult u_link(const BraidWord& w) {
    InvariantResult r;
    r.word = w;
    if (w.n == 1) {
        r.word = stabilize(w);
        r.stabilized_from_n1 = true;
    }
    r.n = r.word.n;
    r.e = e_of(r.word);
    r.u_beta = u_beta(r.word);
    r.u_link = r.e * r.u_beta;
    r.conway = to_conway(r.u_link);
    return r;
}

PolyMatrix all_first_minors_serial(const BPrime& b) {
    require_pairs(b.n);
    const auto n = static_cast<std::size_t>(b.n);
    PolyMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out(i, j) = det_division_free_serial(b.entries.minor_matrix(i, j));
    return out;
}

PolyMatrix all_first_minors(const BPrime& b) {
    require_pairs(b.n);
    const auto n = static_cast<std::size_t>(b.n);
    PolyMatrix out(n, n);
    const auto total = static_cast<std::int64_t>(n * n);
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t idx = 0; idx < total; ++idx) {
        const auto i = static_cast<std::size_t>(idx) / n;
        const auto j = static_cast<std::size_t>(idx) % n;
        out(i, j) = det_division_free_serial(b.entries.minor_matrix(i, j));
    }
    return out;
}

bool skein_check(const BraidWord& w, int i) {
    const SkeinTriple tr = skein_triple(w, i);
    const HalfLaurent plus = u_link(tr.plus).u_link;
    const HalfLaurent minus = u_link(tr.minus).u_link;
    const HalfLaurent zero = u_link(tr.zero).u_link;
    return plus - minus == hopf_value() * zero;
}

}  // namespace plaitalex
