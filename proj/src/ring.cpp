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

#include "plaitalex/ring.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "plaitalex/error.hpp"

namespace plaitalex {

namespace {

// Dense coefficient vector, index = degree. Used for the polynomial parts
// (min exponent shifted to 0) in division and gcd.
using Dense = std::vector<Integer>;

Dense to_dense(const HalfLaurent& p, Exponent shift) {
    Dense out(static_cast<std::size_t>(p.max_exponent() - shift + 1));
    for (const auto& [e, c] : p.terms()) out[static_cast<std::size_t>(e - shift)] = c;
    return out;
}

HalfLaurent from_dense(const Dense& d, Exponent shift) {
    std::vector<Term> terms;
    for (std::size_t i = 0; i < d.size(); ++i)
        if (sgn(d[i]) != 0) terms.push_back({static_cast<Exponent>(i) + shift, d[i]});
    return HalfLaurent::from_terms(std::move(terms));
}

void trim(Dense& d) {
    while (!d.empty() && sgn(d.back()) == 0) d.pop_back();
}

Integer dense_content(const Dense& d) {
    Integer g = 0;
    for (const auto& c : d) {
        if (sgn(c) == 0) continue;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

void make_primitive(Dense& d) {
    Integer g = dense_content(d);
    if (g <= 1) return;
    for (auto& c : d) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

// lc(b)^(deg a - deg b + 1) * a mod b. Both trimmed, b nonzero.
Dense pseudo_remainder(Dense a, const Dense& b) {
    const std::size_t db = b.size() - 1;
    const Integer& lb = b.back();
    if (a.size() < b.size()) return a;
    std::size_t steps = a.size() - b.size() + 1;
    while (a.size() >= b.size()) {
        Integer la = a.back();
        const std::size_t off = a.size() - 1 - db;
        for (auto& c : a) c *= lb;
        for (std::size_t i = 0; i <= db; ++i) a[off + i] -= la * b[i];
        a.pop_back();
        trim(a);
        --steps;
    }
    if (steps > 0) {
        Integer f;
        mpz_pow_ui(f.get_mpz_t(), lb.get_mpz_t(), steps);
        for (auto& c : a) c *= f;
    }
    return a;
}

}  // namespace

HalfLaurent::HalfLaurent(long constant) {
    if (constant != 0) terms_.push_back({0, Integer(constant)});
}

HalfLaurent::HalfLaurent(const Integer& constant) {
    if (sgn(constant) != 0) terms_.push_back({0, constant});
}

HalfLaurent HalfLaurent::monomial(const Integer& c, Exponent k) {
    HalfLaurent p;
    if (sgn(c) != 0) p.terms_.push_back({k, c});
    return p;
}

HalfLaurent HalfLaurent::z() {
    return from_terms({{1, 1}, {-1, -1}});
}

HalfLaurent HalfLaurent::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.exp < b.exp; });
    HalfLaurent p;
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().exp == t.exp)
            p.terms_.back().coef += t.coef;
        else
            p.terms_.push_back(std::move(t));
        if (sgn(p.terms_.back().coef) == 0) p.terms_.pop_back();
    }
    return p;
}

Integer HalfLaurent::coefficient(Exponent k) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), k,
                               [](const Term& t, Exponent e) { return t.exp < e; });
    if (it != terms_.end() && it->exp == k) return it->coef;
    return 0;
}

HalfLaurent HalfLaurent::shifted(Exponent k) const {
    HalfLaurent p = *this;
    for (auto& t : p.terms_) t.exp += k;
    return p;
}

HalfLaurent HalfLaurent::operator-() const {
    HalfLaurent p = *this;
    for (auto& t : p.terms_) t.coef = -t.coef;
    return p;
}

HalfLaurent& HalfLaurent::operator+=(const HalfLaurent& other) {
    if (other.is_zero()) return *this;
    std::vector<Term> merged;
    merged.reserve(terms_.size() + other.terms_.size());
    auto a = terms_.begin();
    auto b = other.terms_.begin();
    while (a != terms_.end() || b != other.terms_.end()) {
        if (b == other.terms_.end() || (a != terms_.end() && a->exp < b->exp)) {
            merged.push_back(std::move(*a++));
        } else if (a == terms_.end() || b->exp < a->exp) {
            merged.push_back(*b++);
        } else {
            Integer c = a->coef + b->coef;
            if (sgn(c) != 0) merged.push_back({a->exp, std::move(c)});
            ++a;
            ++b;
        }
    }
    terms_ = std::move(merged);
    return *this;
}

HalfLaurent& HalfLaurent::operator-=(const HalfLaurent& other) {
    return *this += -other;
}

HalfLaurent& HalfLaurent::operator*=(const HalfLaurent& other) {
    *this = *this * other;
    return *this;
}

HalfLaurent operator*(const HalfLaurent& a, const HalfLaurent& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (b.size() == 1) {
        HalfLaurent p = a;
        for (auto& t : p.terms_) {
            t.exp += b.terms_[0].exp;
            t.coef *= b.terms_[0].coef;
        }
        return p;
    }
    if (a.size() == 1) return b * a;
    const Exponent lo = a.min_exponent() + b.min_exponent();
    const Exponent span = a.max_exponent() + b.max_exponent() - lo + 1;
    // Exponent ranges stay small in practice; sparse products with huge gaps
    // fall back to sort-and-merge.
    if (span <= static_cast<Exponent>(4 * a.size() * b.size() + 64)) {
        Dense acc(static_cast<std::size_t>(span));
        for (const auto& x : a.terms_)
            for (const auto& y : b.terms_)
                mpz_addmul(acc[static_cast<std::size_t>(x.exp + y.exp - lo)].get_mpz_t(),
                           x.coef.get_mpz_t(), y.coef.get_mpz_t());
        return from_dense(acc, lo);
    }
    std::vector<Term> terms;
    terms.reserve(a.size() * b.size());
    for (const auto& x : a.terms_)
        for (const auto& y : b.terms_) terms.push_back({x.exp + y.exp, x.coef * y.coef});
    return HalfLaurent::from_terms(std::move(terms));
}

HalfLaurent hl_add(const HalfLaurent& a, const HalfLaurent& b) { return a + b; }
HalfLaurent hl_mul(const HalfLaurent& a, const HalfLaurent& b) { return a * b; }

HalfLaurent hl_bar(const HalfLaurent& p) {
    std::vector<Term> terms(p.terms().begin(), p.terms().end());
    for (auto& t : terms) t.exp = -t.exp;
    return HalfLaurent::from_terms(std::move(terms));
}

HalfLaurent conway_involution(const HalfLaurent& p) {
    std::vector<Term> terms(p.terms().begin(), p.terms().end());
    for (auto& t : terms) {
        if (t.exp % 2 != 0) t.coef = -t.coef;
        t.exp = -t.exp;
    }
    return HalfLaurent::from_terms(std::move(terms));
}

HalfLaurent operator*(const Unit& w, const HalfLaurent& p) {
    HalfLaurent q = p.shifted(w.u_exp);
    return w.sign < 0 ? -q : q;
}

ConwayPoly::ConwayPoly(std::map<Exponent, Integer> coeffs) {
    for (auto& [e, c] : coeffs) {
        if (e < 0) throw NotConwayRepresentable("negative power of z");
        if (sgn(c) != 0) coeffs_.emplace(e, std::move(c));
    }
}

Integer ConwayPoly::coefficient(Exponent k) const {
    auto it = coeffs_.find(k);
    return it == coeffs_.end() ? Integer(0) : it->second;
}

HalfLaurent ConwayPoly::expand() const {
    HalfLaurent out;
    HalfLaurent power = 1;
    Exponent at = 0;
    const HalfLaurent z = HalfLaurent::z();
    for (const auto& [e, c] : coeffs_) {
        for (; at < e; ++at) power *= z;
        out += HalfLaurent(c) * power;
    }
    return out;
}

ConwayPoly to_conway(const HalfLaurent& p) {
    if (conway_involution(p) != p)
        throw NotConwayRepresentable("polynomial is not fixed by u -> -u^-1: " + to_string(p));
    std::map<Exponent, Integer> coeffs;
    HalfLaurent rest = p;
    const HalfLaurent z = HalfLaurent::z();
    Exponent last = -1;
    while (!rest.is_zero()) {
        const Exponent d = rest.max_exponent();
        if (d < 0 || (last >= 0 && d >= last))
            throw NotConwayRepresentable("residue left after z-expansion of " + to_string(p));
        const Integer c = rest.leading_coefficient();
        HalfLaurent zd = 1;
        for (Exponent i = 0; i < d; ++i) zd *= z;
        rest -= HalfLaurent(c) * zd;
        coeffs.emplace(d, c);
        last = d;
    }
    return ConwayPoly(std::move(coeffs));
}

std::pair<HalfLaurent, Unit> normalize_unit(const HalfLaurent& p) {
    if (p.is_zero()) throw ZeroPolynomial("cannot normalize the zero polynomial");
    Unit w{sgn(p.leading_coefficient()) < 0 ? -1 : 1, p.min_exponent()};
    return {w.inverse() * p, w};
}

Integer content(const HalfLaurent& p) {
    Integer g = 0;
    for (const auto& t : p.terms()) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coef.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

HalfLaurent hl_gcd(const HalfLaurent& a, const HalfLaurent& b) {
    if (a.is_zero() && b.is_zero()) return {};
    if (a.is_zero()) return normalize_unit(b).first;
    if (b.is_zero()) return normalize_unit(a).first;

    Integer g = content(a);
    {
        Integer cb = content(b);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), cb.get_mpz_t());
    }
    Dense x = to_dense(a, a.min_exponent());
    Dense y = to_dense(b, b.min_exponent());
    make_primitive(x);
    make_primitive(y);
    if (x.size() < y.size()) std::swap(x, y);
    // Primitive pseudo-remainder sequence.
    while (!y.empty()) {
        Dense r = pseudo_remainder(x, y);
        trim(r);
        make_primitive(r);
        x = std::move(y);
        y = std::move(r);
    }
    for (auto& c : x) c *= g;
    return normalize_unit(from_dense(x, 0)).first;
}

std::optional<HalfLaurent> hl_exact_divide(const HalfLaurent& a, const HalfLaurent& b) {
    if (b.is_zero()) throw ZeroPolynomial("division by the zero polynomial");
    if (a.is_zero()) return HalfLaurent{};
    Dense num = to_dense(a, a.min_exponent());
    const Dense den = to_dense(b, b.min_exponent());
    if (num.size() < den.size()) return std::nullopt;
    const std::size_t dd = den.size() - 1;
    Dense quot(num.size() - dd);
    while (num.size() >= den.size()) {
        const std::size_t off = num.size() - 1 - dd;
        if (!mpz_divisible_p(num.back().get_mpz_t(), den.back().get_mpz_t())) return std::nullopt;
        Integer q;
        mpz_divexact(q.get_mpz_t(), num.back().get_mpz_t(), den.back().get_mpz_t());
        for (std::size_t i = 0; i <= dd; ++i) num[off + i] -= q * den[i];
        quot[off] = q;
        trim(num);
        if (num.empty()) break;
    }
    if (!num.empty()) return std::nullopt;
    return from_dense(quot, a.min_exponent() - b.min_exponent());
}

namespace {

std::string t_monomial(Exponent k) {
    if (k == 0) return "";
    if (k % 2 == 0) return k == 2 ? "t" : "t^" + std::to_string(k / 2);
    return "t^" + std::to_string(k) + "/2";
}

std::string z_monomial(Exponent k) {
    if (k == 0) return "";
    return k == 1 ? "z" : "z^" + std::to_string(k);
}

template <class Terms, class Mono>
std::string render(const Terms& descending, Mono mono) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : descending) {
        const bool negative = sgn(c) < 0;
        if (first)
            os << (negative ? "-" : "");
        else
            os << (negative ? " - " : " + ");
        Integer mag = abs(c);
        const std::string m = mono(e);
        if (m.empty() || mag != 1) os << mag.get_str();
        os << m;
        first = false;
    }
    return first ? "0" : os.str();
}

}  // namespace

std::string to_string(const HalfLaurent& p) {
    std::vector<std::pair<Exponent, Integer>> desc;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) desc.emplace_back(it->exp, it->coef);
    // Largest |exponent| first, t^k before t^-k, so symmetric values read "t + t^-1 - 1".
    std::stable_sort(desc.begin(), desc.end(), [](const auto& a, const auto& b) {
        return std::abs(a.first) > std::abs(b.first);
    });
    return render(desc, t_monomial);
}

std::string to_string(const ConwayPoly& p) {
    std::vector<std::pair<Exponent, Integer>> desc(p.coeffs().rbegin(), p.coeffs().rend());
    return render(desc, z_monomial);
}

}  // namespace plaitalex
