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

// B' as a presentation matrix of the Alexander module, and its ideals of minors.

#pragma once

#include <string>
#include <vector>

#include "plaitalex/braid.hpp"
#include "plaitalex/rep.hpp"
#include "plaitalex/ring.hpp"

namespace plaitalex {

struct PresentationData {
    int n = 2;
    std::vector<std::string> generators;  // "d1" .. "dn"
    BPrime matrix;
    std::string relation_note;
};

PresentationData presentation_matrix(const BraidWord& w);

/// All k x k minors, unit-normalized, deduplicated and sorted; zeros are
/// dropped unless every minor vanishes, in which case the result is {0}.
/// Throws BadSize unless 1 <= k <= n.
std::vector<HalfLaurent> elementary_ideal_minors(const PresentationData& p, int k);

/// Normalized gcd of a list of polynomials (0 for an all-zero list).
HalfLaurent gcd_of(const std::vector<HalfLaurent>& values);

/// gcd of all (n-1)-minors of B'; equals normalize_unit(u_beta(w)) when that is nonzero.
HalfLaurent alexander_via_gcd(const BraidWord& w);

}  // namespace plaitalex
