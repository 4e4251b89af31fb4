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

// JSON encodings shared by the CLI and the fixture tables.
//
// A polynomial is a list of [exponent, "coefficient"] pairs sorted by
// descending exponent with no zero coefficients; coefficients are decimal
// strings so they survive arbitrary precision.

#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "plaitalex/alexmodule.hpp"
#include "plaitalex/invariant.hpp"
#include "plaitalex/rep.hpp"
#include "plaitalex/ring.hpp"

namespace plaitalex {

nlohmann::json to_json(const HalfLaurent& p);
nlohmann::json to_json(const ConwayPoly& p);
/// Throws SyntaxError on anything that is not a canonical pair list.
HalfLaurent poly_from_json(const nlohmann::json& j);

nlohmann::json to_json(const InvariantResult& r);
nlohmann::json to_json(const RepMatrix& m);
nlohmann::json module_json(const PresentationData& p, int k, const std::vector<HalfLaurent>& minors,
                           const HalfLaurent& gcd);

struct FixtureEntry {
    std::string name;
    int n = 2;
    std::string word;
    HalfLaurent expected_u_link;
    std::string provenance;  // "paper", "trivial" or "derived"
};

/// Parses a JSON array of fixture objects. Throws SyntaxError when malformed.
std::vector<FixtureEntry> parse_fixtures(const nlohmann::json& j);
nlohmann::json to_json(const FixtureEntry& f);

}  // namespace plaitalex
