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

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "plaitalex/alexmodule.hpp"
#include "plaitalex/error.hpp"
#include "plaitalex/invariant.hpp"

namespace plaitalex {
namespace {

using testing::cofactor_det;
using testing::u;

PresentationData data(const char* text, int n) { return presentation_matrix(parse_word(text, n)); }

TEST(AlexModuleTest, PresentationMatrix) {
    const PresentationData trefoil = data("P1^-1 M1 P1^-1", 2);
    EXPECT_EQ(trefoil.generators, (std::vector<std::string>{"d1", "d2"}));
    EXPECT_TRUE(is_pseudostochastic(trefoil.matrix.entries));
    EXPECT_EQ(trefoil.matrix.entries(0, 0), u() + u(-3) - u(-1));

    EXPECT_EQ(data("", 2).matrix.entries, PolyMatrix(2, 2));
    EXPECT_EQ(data("P1", 2).matrix, b_prime(word_matrix(parse_word("P1", 2))));
    EXPECT_THROW(presentation_matrix(BraidWord{1, {}}), NTooSmall);
}

TEST(AlexModuleTest, ElementaryIdeals) {
    const PresentationData trefoil = data("P1^-1 M1 P1^-1", 2);
    // 1 x 1 minors are the entries, which are all +-(u + u^-3 - u^-1).
    EXPECT_EQ(elementary_ideal_minors(trefoil, 1), (std::vector<HalfLaurent>{u(4) - u(2) + 1}));
    EXPECT_EQ(elementary_ideal_minors(trefoil, 2), (std::vector<HalfLaurent>{HalfLaurent()}));

    const PresentationData empty = data("", 3);
    for (int k = 1; k <= 3; ++k) EXPECT_EQ(elementary_ideal_minors(empty, k), (std::vector<HalfLaurent>{HalfLaurent()}));

    EXPECT_THROW(elementary_ideal_minors(trefoil, 0), BadSize);
    EXPECT_THROW(elementary_ideal_minors(trefoil, 3), BadSize);
}

TEST(AlexModuleTest, SmallerIdealsMatchCofactorOracle) {
    const PresentationData p = presentation_matrix(random_word(4, 20, 3));
    const auto minors = elementary_ideal_minors(p, 2);
    // Every normalized 2x2 minor computed by hand appears in the list.
    for (std::size_t r0 = 0; r0 < 4; ++r0)
        for (std::size_t r1 = r0 + 1; r1 < 4; ++r1)
            for (std::size_t c0 = 0; c0 < 4; ++c0)
                for (std::size_t c1 = c0 + 1; c1 < 4; ++c1) {
                    const HalfLaurent v = cofactor_det(p.matrix.entries.submatrix({r0, r1}, {c0, c1}));
                    if (v.is_zero()) continue;
                    EXPECT_NE(std::find(minors.begin(), minors.end(), normalize_unit(v).first), minors.end());
                }
}

TEST(AlexModuleTest, GcdAgreesWithDeterminant) {
    EXPECT_EQ(alexander_via_gcd(parse_word("P1^-1 M1 P1^-1", 2)), u(4) - u(2) + 1);
    EXPECT_TRUE(alexander_via_gcd(parse_word("", 2)).is_zero());
    int nonzero = 0;
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const int n = 2 + static_cast<int>(seed % 4);
        const BraidWord w = random_word(n, 25, seed);
        const PresentationData p = presentation_matrix(w);
        const auto top = elementary_ideal_minors(p, n - 1);
        EXPECT_EQ(top.size(), 1u);
        EXPECT_EQ(elementary_ideal_minors(p, n), (std::vector<HalfLaurent>{HalfLaurent()}));
        const HalfLaurent ub = u_beta(w);
        if (ub.is_zero()) {
            EXPECT_TRUE(alexander_via_gcd(w).is_zero());
            continue;
        }
        ++nonzero;
        EXPECT_EQ(alexander_via_gcd(w), normalize_unit(ub).first);
    }
    EXPECT_GT(nonzero, 20);
}

TEST(AlexModuleTest, GcdOf) {
    EXPECT_TRUE(gcd_of({}).is_zero());
    EXPECT_EQ(gcd_of({(u() - 1) * (u() + 2), (u() - 1) * u(5), HalfLaurent()}), u() - 1);
}

}  // namespace
}  // namespace plaitalex
