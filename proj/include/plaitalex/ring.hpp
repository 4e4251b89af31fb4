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

// Exact arithmetic in Z[u, u^-1] with u = t^(1/2).
//
// Every matrix entry and every invariant value lives in this ring. Exponents
// count powers of u, so t^k is stored at exponent 2k and the half-integer
// powers of t that the representation tables need never require rationals.

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace plaitalex {

using Integer = mpz_class;
using Exponent = std::int64_t;

struct Term {
    Exponent exp;
    Integer coef;

    friend bool operator==(const Term&, const Term&) = default;
};

/// A Laurent polynomial in u with arbitrary-precision integer coefficients.
///
/// Terms are kept sorted by ascending exponent with no zero coefficients, so
/// structural equality is mathematical equality. Values are immutable once
/// built; every operation returns a fresh canonical value.
class HalfLaurent {
public:
    HalfLaurent() = default;
    HalfLaurent(long constant);  // NOLINT(google-explicit-constructor)
    explicit HalfLaurent(const Integer& constant);

    /// c * u^k.
    static HalfLaurent monomial(const Integer& c, Exponent k);
    /// u^k.
    static HalfLaurent u_power(Exponent k) { return monomial(1, k); }
    /// t^(1/2) - t^(-1/2), the Conway variable z.
    static HalfLaurent z();
    /// Merges repeated exponents and drops zero coefficients.
    static HalfLaurent from_terms(std::vector<Term> terms);

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    std::span<const Term> terms() const { return terms_; }

    // Both require a nonzero polynomial.
    Exponent min_exponent() const { return terms_.front().exp; }
    Exponent max_exponent() const { return terms_.back().exp; }
    const Integer& leading_coefficient() const { return terms_.back().coef; }

    Integer coefficient(Exponent k) const;

    /// Multiplies by u^k.
    HalfLaurent shifted(Exponent k) const;

    HalfLaurent operator-() const;
    HalfLaurent& operator+=(const HalfLaurent& other);
    HalfLaurent& operator-=(const HalfLaurent& other);
    HalfLaurent& operator*=(const HalfLaurent& other);

    friend HalfLaurent operator+(HalfLaurent a, const HalfLaurent& b) { return a += b; }
    friend HalfLaurent operator-(HalfLaurent a, const HalfLaurent& b) { return a -= b; }
    friend HalfLaurent operator*(const HalfLaurent& a, const HalfLaurent& b);
    friend bool operator==(const HalfLaurent&, const HalfLaurent&) = default;

private:
    std::vector<Term> terms_;  // ascending exponent, nonzero coefficients
};

HalfLaurent hl_add(const HalfLaurent& a, const HalfLaurent& b);
HalfLaurent hl_mul(const HalfLaurent& a, const HalfLaurent& b);

/// t -> t^-1, i.e. u^k -> u^-k.
HalfLaurent hl_bar(const HalfLaurent& p);

/// u -> -u^-1. Fixes z = u - u^-1, so Conway-representable values are fixed points.
HalfLaurent conway_involution(const HalfLaurent& p);

/// A unit of Z[u, u^-1]: sign * u^u_exp.
struct Unit {
    int sign = 1;
    Exponent u_exp = 0;

    HalfLaurent to_poly() const { return HalfLaurent::monomial(sign, u_exp); }
    Unit inverse() const { return {sign, -u_exp}; }

    friend Unit operator*(const Unit& a, const Unit& b) { return {a.sign * b.sign, a.u_exp + b.u_exp}; }
    friend bool operator==(const Unit&, const Unit&) = default;
};

HalfLaurent operator*(const Unit& w, const HalfLaurent& p);

/// Integer polynomial in z = u - u^-1, with z^0 the constant term.
class ConwayPoly {
public:
    ConwayPoly() = default;
    /// Drops zero coefficients; negative exponents are rejected.
    explicit ConwayPoly(std::map<Exponent, Integer> coeffs);

    bool is_zero() const { return coeffs_.empty(); }
    const std::map<Exponent, Integer>& coeffs() const { return coeffs_; }
    Integer coefficient(Exponent k) const;

    /// Substitutes z = u - u^-1.
    HalfLaurent expand() const;

    friend bool operator==(const ConwayPoly&, const ConwayPoly&) = default;

private:
    std::map<Exponent, Integer> coeffs_;
};

/// Rewrites a Conway-symmetric Laurent polynomial in z.
/// Throws NotConwayRepresentable if p is not fixed by conway_involution.
ConwayPoly to_conway(const HalfLaurent& p);

/// Splits p = w * q with min exponent of q equal to 0 and its top
/// coefficient positive. Throws ZeroPolynomial on p = 0.
std::pair<HalfLaurent, Unit> normalize_unit(const HalfLaurent& p);

/// gcd of all coefficients; 0 for the zero polynomial.
Integer content(const HalfLaurent& p);

/// Greatest common divisor in Z[u, u^-1], returned unit-normalized and
/// including the integer content. gcd(0, 0) = 0.
HalfLaurent hl_gcd(const HalfLaurent& a, const HalfLaurent& b);

/// a / b when b divides a exactly in Z[u, u^-1], otherwise nullopt.
std::optional<HalfLaurent> hl_exact_divide(const HalfLaurent& a, const HalfLaurent& b);

/// Human-readable form in powers of t, largest |exponent| first with t^k
/// ahead of t^-k: "t + t^-1 - 1", "t^1/2".
std::string to_string(const HalfLaurent& p);
/// "z^2 + 1", "-z".
std::string to_string(const ConwayPoly& p);

}  // namespace plaitalex
