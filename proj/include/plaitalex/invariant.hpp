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

// The link invariant U_L = e(beta) * U_beta of the plait closure of a
// colored braid, where U_beta is the leading (n-1)-minor of B'.

#pragma once

#include "plaitalex/braid.hpp"
#include "plaitalex/matrix.hpp"
#include "plaitalex/rep.hpp"
#include "plaitalex/ring.hpp"

namespace plaitalex {

struct InvariantResult {
    int n = 2;               // strand pairs actually evaluated
    BraidWord word;          // the evaluated word
    Unit e;
    HalfLaurent u_beta;
    HalfLaurent u_link;      // e * u_beta
    ConwayPoly conway;       // u_link in z = t^(1/2) - t^(-1/2)
    bool stabilized_from_n1 = false;
};

/// Determinant of the leading (n-1) x (n-1) block of B'. Throws NTooSmall for n < 2.
HalfLaurent u_beta(const BraidWord& w);

/// Full invariant. A word with n = 1 is stabilized once first.
InvariantResult u_link(const BraidWord& w);

/// (i, j) entry: determinant of B' with row i and column j removed.
PolyMatrix all_first_minors(const BPrime& b);
/// Single-threaded reference for all_first_minors.
PolyMatrix all_first_minors_serial(const BPrime& b);

/// U(SP_i w) - U(M_i w) == (t^(-1/2) - t^(1/2)) U(Q_i w), exactly.
bool skein_check(const BraidWord& w, int i);

/// The Conway value of the Hopf link closing P_1 at n = 2: t^(-1/2) - t^(1/2).
HalfLaurent hopf_value();

}  // namespace plaitalex
