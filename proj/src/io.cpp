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

#include "plaitalex/io.hpp"

#include "plaitalex/error.hpp"

namespace plaitalex {

using nlohmann::json;

json to_json(const HalfLaurent& p) {
    json out = json::array();
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) out.push_back({it->exp, it->coef.get_str()});
    return out;
}

json to_json(const ConwayPoly& p) {
    json out = json::array();
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) out.push_back({it->first, it->second.get_str()});
    return out;
}

HalfLaurent poly_from_json(const json& j) {
    if (!j.is_array()) throw SyntaxError("polynomial must be an array of [exponent, \"coefficient\"] pairs");
    std::vector<Term> terms;
    bool first = true;
    Exponent prev = 0;
    for (const auto& pair : j) {
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() || !pair[1].is_string())
            throw SyntaxError("bad polynomial term " + pair.dump());
        const auto e = pair[0].get<Exponent>();
        Integer c;
        if (c.set_str(pair[1].get<std::string>(), 10) != 0) throw SyntaxError("bad coefficient " + pair[1].dump());
        if (sgn(c) == 0) throw SyntaxError("zero coefficient in " + j.dump());
        if (!first && e >= prev) throw SyntaxError("exponents must strictly decrease in " + j.dump());
        terms.push_back({e, c});
        prev = e;
        first = false;
    }
    return HalfLaurent::from_terms(std::move(terms));
}

json to_json(const InvariantResult& r) {
    return {
        {"n", r.n},
        {"word", to_string(r.word)},
        {"e", {{"sign", r.e.sign}, {"u_exp", r.e.u_exp}}},
        {"u_beta", to_json(r.u_beta)},
        {"u_link", to_json(r.u_link)},
        {"conway_z", to_json(r.conway)},
        {"stabilized_from_n1", r.stabilized_from_n1},
    };
}

json to_json(const RepMatrix& m) {
    json basis = json::array();
    for (int i = 1; i <= m.n; ++i) {
        basis.push_back("s" + std::to_string(i));
        basis.push_back("d" + std::to_string(i));
    }
    json entries = json::array();
    for (std::size_t r = 0; r < m.entries.rows(); ++r)
        for (std::size_t c = 0; c < m.entries.cols(); ++c) entries.push_back(to_json(m.entries(r, c)));
    return {{"n", m.n}, {"basis", basis}, {"entries", entries}};
}

json module_json(const PresentationData& p, int k, const std::vector<HalfLaurent>& minors, const HalfLaurent& gcd) {
    json rows = json::array();
    for (std::size_t r = 0; r < p.matrix.entries.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < p.matrix.entries.cols(); ++c) row.push_back(to_json(p.matrix.entries(r, c)));
        rows.push_back(row);
    }
    json ms = json::array();
    for (const auto& m : minors) ms.push_back(to_json(m));
    return {{"n", p.n}, {"generators", p.generators}, {"matrix", rows}, {"ideal_k", k}, {"minors", ms}, {"gcd", to_json(gcd)}};
}

std::vector<FixtureEntry> parse_fixtures(const json& j) {
    if (!j.is_array()) throw SyntaxError("fixture file must hold a JSON array");
    std::vector<FixtureEntry> out;
    for (const auto& item : j) {
        if (!item.is_object()) throw SyntaxError("fixture entries must be objects");
        try {
            FixtureEntry f;
            f.name = item.at("name").get<std::string>();
            f.n = item.at("n").get<int>();
            f.word = item.at("word").get<std::string>();
            f.expected_u_link = poly_from_json(item.at("expected_u_link"));
            f.provenance = item.at("provenance").get<std::string>();
            if (f.provenance != "paper" && f.provenance != "trivial" && f.provenance != "derived")
                throw SyntaxError("unknown provenance '" + f.provenance + "'");
            out.push_back(std::move(f));
        } catch (const json::exception& e) {
            throw SyntaxError(std::string("malformed fixture: ") + e.what());
        }
    }
    return out;
}

json to_json(const FixtureEntry& f) {
    return {{"name", f.name},
            {"n", f.n},
            {"word", f.word},
            {"expected_u_link", to_json(f.expected_u_link)},
            {"provenance", f.provenance}};
}

}  // namespace plaitalex
