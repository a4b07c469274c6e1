/*
   Copyright 2026 the convalg authors

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

#include "convalg/poly.hpp"

#include <algorithm>

namespace convalg {

namespace {
void require_same_field(FieldSpec a, FieldSpec b, const char* op) {
    if (a != b) throw MixedFields(std::string(op) + ": operands from different fields");
}
}  // namespace

Poly::Poly(FieldSpec field, std::vector<std::uint32_t> coeffs)
    : field_(field), coeffs_(std::move(coeffs)) {
    const std::uint32_t p = field_.modulus();
    for (auto& c : coeffs_) c %= p;
    normalize();
}

Poly Poly::monomial(FieldSpec field, int degree, std::uint32_t c) {
    if (degree < 0) throw std::logic_error("Poly::monomial: negative degree");
    std::vector<std::uint32_t> v(static_cast<std::size_t>(degree) + 1, 0);
    v.back() = c;
    return Poly(field, std::move(v));
}

void Poly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

FieldElem Poly::leading() const {
    if (coeffs_.empty()) throw std::logic_error("leading coefficient of the zero polynomial");
    return FieldElem(coeffs_.back(), field_);
}

Poly Poly::operator+(const Poly& o) const {
    require_same_field(field_, o.field_, "poly add");
    const std::uint32_t p = field_.modulus();
    std::vector<std::uint32_t> r(std::max(coeffs_.size(), o.coeffs_.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = gf::add(i < coeffs_.size() ? coeffs_[i] : 0, i < o.coeffs_.size() ? o.coeffs_[i] : 0, p);
    return Poly(field_, std::move(r));
}

Poly Poly::operator-(const Poly& o) const {
    require_same_field(field_, o.field_, "poly sub");
    const std::uint32_t p = field_.modulus();
    std::vector<std::uint32_t> r(std::max(coeffs_.size(), o.coeffs_.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = gf::sub(i < coeffs_.size() ? coeffs_[i] : 0, i < o.coeffs_.size() ? o.coeffs_[i] : 0, p);
    return Poly(field_, std::move(r));
}

Poly Poly::operator*(const Poly& o) const {
    require_same_field(field_, o.field_, "poly mul");
    if (is_zero() || o.is_zero()) return Poly(field_);
    const std::uint32_t p = field_.modulus();
    std::vector<std::uint32_t> r(coeffs_.size() + o.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            r[i + j] = gf::add(r[i + j], gf::mul(coeffs_[i], o.coeffs_[j], p), p);
    }
    return Poly(field_, std::move(r));
}

Poly Poly::operator-() const {
    std::vector<std::uint32_t> r(coeffs_.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = gf::neg(coeffs_[i], field_.modulus());
    return Poly(field_, std::move(r));
}

Poly Poly::scaled(FieldElem c) const {
    require_same_field(field_, c.spec(), "poly scale");
    std::vector<std::uint32_t> r(coeffs_.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = gf::mul(coeffs_[i], c.value(), field_.modulus());
    return Poly(field_, std::move(r));
}

Poly Poly::shifted(int s) const {
    if (s < 0) throw std::logic_error("Poly::shifted: negative shift");
    if (is_zero() || s == 0) return s == 0 ? *this : Poly(field_);
    std::vector<std::uint32_t> r(coeffs_.size() + static_cast<std::size_t>(s), 0);
    std::copy(coeffs_.begin(), coeffs_.end(), r.begin() + s);
    return Poly(field_, std::move(r));
}

Poly Poly::monic() const {
    if (is_zero()) throw std::logic_error("monic scaling of the zero polynomial");
    return scaled(leading().inv());
}

std::string Poly::str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(coeffs_[i]);
    }
    if (coeffs_.empty()) s += '0';
    s += ']';
    return s;
}

PolyDivMod divmod(const Poly& a, const Poly& b) {
    require_same_field(a.field(), b.field(), "poly divmod");
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    const FieldSpec f = a.field();
    const std::uint32_t p = f.modulus();
    if (a.is_zero() || a.size() < b.size()) return {Poly(f), a};

    std::vector<std::uint32_t> rem(a.coeffs());
    const std::size_t db = b.size() - 1;
    const std::uint32_t lead_inv = gf::inv(b.coeffs().back(), p);
    std::vector<std::uint32_t> q(rem.size() - db, 0);
    for (std::size_t i = rem.size(); i-- > db;) {
        const std::uint32_t c = gf::mul(rem[i], lead_inv, p);
        if (c == 0) continue;
        q[i - db] = c;
        for (std::size_t j = 0; j <= db; ++j)
            rem[i - db + j] = gf::sub(rem[i - db + j], gf::mul(c, b.coeffs()[j], p), p);
    }
    return {Poly(f, std::move(q)), Poly(f, std::move(rem))};
}

Poly exact_div(const Poly& a, const Poly& b) {
    PolyDivMod qr = divmod(a, b);
    if (!qr.remainder.is_zero()) throw std::logic_error("exact_div: division is not exact");
    return qr.quotient;
}

PolyXgcd xgcd(const Poly& a, const Poly& b) {
    require_same_field(a.field(), b.field(), "poly gcd");
    if (a.is_zero() && b.is_zero()) throw BothZero("gcd(0, 0) is undefined");
    const FieldSpec f = a.field();

    Poly r0 = a, r1 = b;
    Poly s0 = Poly::one(f), s1 = Poly(f);
    Poly t0 = Poly(f), t1 = Poly::one(f);
    while (!r1.is_zero()) {
        PolyDivMod qr = divmod(r0, r1);
        Poly r2 = qr.remainder;
        Poly s2 = s0 - qr.quotient * s1;
        Poly t2 = t0 - qr.quotient * t1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    const FieldElem scale = r0.leading().inv();
    return {r0.scaled(scale), s0.scaled(scale), t0.scaled(scale)};
}

Poly gcd(const Poly& a, const Poly& b) { return xgcd(a, b).g; }

}  // namespace convalg
