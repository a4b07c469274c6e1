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

#include "convalg/rational.hpp"

namespace convalg {

RationalFn::RationalFn(const Poly& num) : num_(num), den_(Poly::one(num.field())) {}

RationalFn::RationalFn(const Poly& num, const Poly& den) : num_(num), den_(den) {
    if (num_.field() != den_.field()) throw MixedFields("rational: num/den from different fields");
    if (den_.is_zero()) throw DivisionByZero("rational with zero denominator");
    if (num_.is_zero()) {
        den_ = Poly::one(num_.field());
        return;
    }
    const Poly g = gcd(num_, den_);
    num_ = exact_div(num_, g);
    den_ = exact_div(den_, g);
    const FieldElem lead_inv = den_.leading().inv();
    num_ = num_.scaled(lead_inv);
    den_ = den_.scaled(lead_inv);
}

RationalFn RationalFn::from_laurent(const LaurentPoly& x) {
    const FieldSpec f = x.field();
    if (x.is_zero()) return RationalFn::zero(f);
    const int d = x.offset();
    if (d >= 0) return RationalFn(x.as_poly());
    return RationalFn(Poly(f, x.coeffs()), Poly::monomial(f, -d));
}

RationalFn RationalFn::operator+(const RationalFn& o) const {
    return RationalFn(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFn RationalFn::operator-(const RationalFn& o) const {
    return RationalFn(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalFn RationalFn::operator*(const RationalFn& o) const {
    return RationalFn(num_ * o.num_, den_ * o.den_);
}

RationalFn RationalFn::operator/(const RationalFn& o) const {
    if (o.is_zero()) throw DivisionByZero("rational division by zero");
    return RationalFn(num_ * o.den_, den_ * o.num_);
}

RationalFn RationalFn::operator-() const {
    RationalFn r(*this);
    r.num_ = -r.num_;
    return r;
}

std::string RationalFn::str() const {
    if (is_polynomial()) return num_.str();
    return num_.str() + "/" + den_.str();
}

TruncatedSeries rational_expand(const RationalFn& f, int horizon) {
    if (!f.is_causal())
        throw NonCausalDenominator("series expansion needs a denominator with nonzero constant term");
    const FieldSpec field = f.field();
    const std::uint32_t p = field.modulus();
    if (horizon <= 0 || f.is_zero())
        return TruncatedSeries(field, 0, {}, ExtInt(horizon));

    const auto& num = f.num();
    const auto& den = f.den();
    const std::uint32_t d0_inv = gf::inv(den.coeff(0), p);
    const int dden = static_cast<int>(den.size()) - 1;
    std::vector<std::uint32_t> s(static_cast<std::size_t>(horizon), 0);
    for (int j = 0; j < horizon; ++j) {
        std::uint32_t acc = num.coeff(j);
        for (int i = 1; i <= dden && i <= j; ++i)
            acc = gf::sub(acc, gf::mul(den.coeff(i), s[static_cast<std::size_t>(j - i)], p), p);
        s[static_cast<std::size_t>(j)] = gf::mul(acc, d0_inv, p);
    }
    return TruncatedSeries(field, 0, std::move(s), ExtInt(horizon));
}

}  // namespace convalg
