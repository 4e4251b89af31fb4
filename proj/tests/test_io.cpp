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
#include "plaitalex/error.hpp"
#include "plaitalex/io.hpp"

namespace plaitalex {
namespace {

using nlohmann::json;
using testing::random_poly;
using testing::u;

TEST(JsonTest, PolynomialEncoding) {
    EXPECT_EQ(to_json(u(2) - 1 + u(-2)).dump(), R"([[2,"1"],[0,"-1"],[-2,"1"]])");
    EXPECT_EQ(to_json(HalfLaurent()).dump(), "[]");
    EXPECT_EQ(to_json(to_conway(u(-1) - u())).dump(), R"([[1,"-1"]])");
    const HalfLaurent big = HalfLaurent(Integer("123456789012345678901234567890")).shifted(-7);
    EXPECT_EQ(poly_from_json(to_json(big)), big);
}

TEST(JsonTest, PolynomialRoundTrip) {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        const HalfLaurent p = random_poly(rng, 6, 9, 1000);
        EXPECT_EQ(poly_from_json(json::parse(to_json(p).dump())), p);
    }
}

TEST(JsonTest, RejectsNonCanonicalPolynomials) {
    for (const char* bad : {R"({})", R"([[1]])", R"([[1,2]])", R"([[1,"0"]])", R"([[0,"1"],[1,"1"]])",
                            R"([[1,"1"],[1,"1"]])", R"([["1","1"]])", R"([[1,"abc"]])"}) {
        EXPECT_THROW(poly_from_json(json::parse(bad)), SyntaxError) << bad;
    }
}

TEST(JsonTest, InvariantResult) {
    const json j = to_json(u_link(parse_word("P1^-1 M1 P1^-1", 2)));
    EXPECT_EQ(j.at("n"), 2);
    EXPECT_EQ(j.at("word"), "P1^-1 M1 P1^-1");
    EXPECT_EQ(j.at("e").at("sign"), 1);
    EXPECT_EQ(j.at("e").at("u_exp"), 1);
    EXPECT_EQ(poly_from_json(j.at("u_beta")), u() + u(-3) - u(-1));
    EXPECT_EQ(poly_from_json(j.at("u_link")), u(2) - 1 + u(-2));
    EXPECT_EQ(j.at("conway_z").dump(), R"([[2,"1"],[0,"1"]])");
    EXPECT_EQ(j.at("stabilized_from_n1"), false);
}

TEST(JsonTest, MatrixDump) {
    const json j = to_json(word_matrix(parse_word("P1", 2)));
    EXPECT_EQ(j.at("basis"), json({"s1", "d1", "s2", "d2"}));
    ASSERT_EQ(j.at("entries").size(), 16u);
    // Row d1, column s1.
    EXPECT_EQ(poly_from_json(j.at("entries")[4]), u(-1) - u());
}

TEST(JsonTest, ModuleDump) {
    const PresentationData p = presentation_matrix(parse_word("P1", 2));
    const auto minors = elementary_ideal_minors(p, 1);
    const json j = module_json(p, 1, minors, gcd_of(minors));
    EXPECT_EQ(j.at("generators"), json({"d1", "d2"}));
    EXPECT_EQ(j.at("matrix").size(), 2u);
    EXPECT_EQ(j.at("ideal_k"), 1);
    EXPECT_EQ(poly_from_json(j.at("gcd")), u(2) - 1);
}

TEST(FixtureTest, ParsesAndRoundTrips) {
    const json doc = json::parse(R"([{"name":"Hopf","n":2,"word":"P1","expected_u_link":[[1,"-1"],[-1,"1"]],"provenance":"paper"}])");
    const auto fx = parse_fixtures(doc);
    ASSERT_EQ(fx.size(), 1u);
    EXPECT_EQ(fx[0].expected_u_link, u(-1) - u());
    EXPECT_EQ(json::array({to_json(fx[0])}), doc);
    EXPECT_TRUE(parse_fixtures(json::array()).empty());
}

TEST(FixtureTest, RejectsMalformedEntries) {
    for (const char* bad : {R"({})", R"([1])", R"([{"name":"a"}])",
                            R"([{"name":"a","n":2,"word":"","expected_u_link":[],"provenance":"guess"}])",
                            R"([{"name":"a","n":"2","word":"","expected_u_link":[],"provenance":"paper"}])",
                            R"([{"name":"a","n":2,"word":"","expected_u_link":[[0,"0"]],"provenance":"paper"}])"}) {
        EXPECT_THROW(parse_fixtures(json::parse(bad)), SyntaxError) << bad;
    }
}

}  // namespace
}  // namespace plaitalex
