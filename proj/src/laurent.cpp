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

#include "convalg/laurent.hpp"

#include <algorithm>
#include <stdexcept>

namespace convalg {

namespace {
void require_same_field(FieldSpec a, FieldSpec b, const char* op) {
    if (a != b) throw MixedFields(std::string(op) + ": operands from different fields");
}
}  // namespace

LaurentPoly::LaurentPoly(FieldSpec field, int offset, std::vector<std::uint32_t> coeffs)
    : field_(field), offset_(offset), coeffs_(std::move(coeffs)) {
    const std::uint32_t p = field_.modulus();
    for (auto& c : coeffs_) c %= p;
    normalize();
}

LaurentPoly LaurentPoly::monomial(FieldSpec field, int exponent, std::uint32_t c) {
    return LaurentPoly(field, exponent, {c});
}

void LaurentPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    std::size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
    if (lead > 0) {
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
        offset_ += static_cast<int>(lead);
    }
    if (coeffs_.empty()) offset_ = 0;
}

std::uint32_t LaurentPoly::coeff(int exponent) const noexcept {
    const int i = exponent - offset_;
    if (i < 0 || static_cast<std::size_t>(i) >= coeffs_.size()) return 0;
    return coeffs_[static_cast<std::size_t>(i)];
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    require_same_field(field_, o.field_, "laurent add");
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    const std::uint32_t p = field_.modulus();
    const int lo = std::min(offset_, o.offset_);
    const int hi = std::max(offset_ + static_cast<int>(coeffs_.size()),
                            o.offset_ + static_cast<int>(o.coeffs_.size()));
    std::vector<std::uint32_t> r(static_cast<std::size_t>(hi - lo), 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        r[static_cast<std::size_t>(offset_ - lo) + i] = coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
        auto& slot = r[static_cast<std::size_t>(o.offset_ - lo) + i];
        slot = gf::add(slot, o.coeffs_[i], p);
    }
    return LaurentPoly(field_, lo, std::move(r));
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    require_same_field(field_, o.field_, "laurent mul");
    if (is_zero() || o.is_zero()) return LaurentPoly(field_);
    const std::uint32_t p = field_.modulus();
    std::vector<std::uint32_t> r(coeffs_.size() + o.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            r[i + j] = gf::add(r[i + j], gf::mul(coeffs_[i], o.coeffs_[j], p), p);
    }
    return LaurentPoly(field_, offset_ + o.offset_, std::move(r));
}

LaurentPoly LaurentPoly::operator-() const {
    std::vector<std::uint32_t> r(coeffs_.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = gf::neg(coeffs_[i], field_.modulus());
    return LaurentPoly(field_, offset_, std::move(r));
}

LaurentPoly LaurentPoly::scaled(FieldElem c) const {
    require_same_field(field_, c.spec(), "laurent scale");
    std::vector<std::uint32_t> r(coeffs_.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = gf::mul(coeffs_[i], c.value(), field_.modulus());
    return LaurentPoly(field_, offset_, std::move(r));
}

LaurentPoly LaurentPoly::shifted(int s) const {
    if (is_zero()) return *this;
    return LaurentPoly(field_, offset_ + s, coeffs_);
}

LaurentPoly LaurentPoly::causal_part() const {
    if (is_zero() || offset_ >= 0) return *this;
    const int drop = -offset_;
    if (static_cast<std::size_t>(drop) >= coeffs_.size()) return LaurentPoly(field_);
    return LaurentPoly(field_, 0,
                       std::vector<std::uint32_t>(coeffs_.begin() + drop, coeffs_.end()));
}

LaurentPoly LaurentPoly::anticausal_part() const {
    if (is_zero() || offset_ >= 0) return LaurentPoly(field_);
    const std::size_t keep = std::min(coeffs_.size(), static_cast<std::size_t>(-offset_));
    return LaurentPoly(field_, offset_,
                       std::vector<std::uint32_t>(coeffs_.begin(),
                                                  coeffs_.begin() + static_cast<std::ptrdiff_t>(keep)));
}

Poly LaurentPoly::as_poly() const {
    if (is_zero()) return Poly(field_);
    if (offset_ < 0) throw std::logic_error("as_poly: value has anticausal terms");
    std::vector<std::uint32_t> r(static_cast<std::size_t>(offset_) + coeffs_.size(), 0);
    std::copy(coeffs_.begin(), coeffs_.end(), r.begin() + offset_);
    return Poly(field_, std::move(r));
}

std::string LaurentPoly::str() const {
    std::string s = "(" + std::to_string(offset_) + ", [";
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(coeffs_[i]);
    }
    if (coeffs_.empty()) s += '0';
    s += "])";
    return s;
}

TruncatedSeries::TruncatedSeries(FieldSpec field, int offset, std::vector<std::uint32_t> coeffs,
                                 ExtInt horizon)
    : field_(field), offset_(offset), coeffs_(std::move(coeffs)), horizon_(horizon) {
    const std::uint32_t p = field_.modulus();
    for (auto& c : coeffs_) c %= p;
    normalize();
    if (horizon_.is_finite() && !coeffs_.empty() &&
        offset_ + static_cast<int>(coeffs_.size()) > horizon_.finite())
        throw std::logic_error("TruncatedSeries: stored coefficients reach past the horizon");
}

TruncatedSeries TruncatedSeries::exact(const LaurentPoly& x) {
    return TruncatedSeries(x.field(), x.offset(), x.coeffs(), ExtInt::pos_inf());
}

TruncatedSeries TruncatedSeries::exact(const LaurentPoly& x, ExtInt horizon) {
    return TruncatedSeries::exact(x).truncated(horizon);
}

void TruncatedSeries::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    std::size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
    if (lead > 0) {
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
        offset_ += static_cast<int>(lead);
    }
    if (coeffs_.empty()) offset_ = horizon_.is_finite() ? horizon_.finite() : 0;
}

ExtInt TruncatedSeries::earliest_nonzero() const noexcept {
    return coeffs_.empty() ? horizon_ : ExtInt(offset_);
}

std::uint32_t TruncatedSeries::coeff(int exponent) const {
    if (ExtInt(exponent) >= horizon_)
        throw std::out_of_range("TruncatedSeries::coeff: exponent beyond horizon");
    const int i = exponent - offset_;
    if (i < 0 || static_cast<std::size_t>(i) >= coeffs_.size()) return 0;
    return coeffs_[static_cast<std::size_t>(i)];
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
    require_same_field(field_, o.field_, "series add");
    const ExtInt H = min(horizon_, o.horizon_);
    const LaurentPoly sum = known_part() + o.known_part();
    return TruncatedSeries::exact(sum).truncated(H);
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
    require_same_field(field_, o.field_, "series mul");
    // Coefficient e of the product is determined iff no unknown tail of one
    // operand can meet a possibly-nonzero exponent of the other:
    //   e < horizon(a) + earliest_nonzero(b)  and symmetrically.
    const ExtInt H = min(horizon_ + o.earliest_nonzero(), o.horizon_ + earliest_nonzero());
    const LaurentPoly prod = known_part() * o.known_part();
    return TruncatedSeries::exact(prod).truncated(H);
}

TruncatedSeries TruncatedSeries::truncated(ExtInt H) const {
    const ExtInt nh = min(H, horizon_);
    std::vector<std::uint32_t> kept;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (ExtInt(offset_ + static_cast<int>(i)) < nh) kept.push_back(coeffs_[i]);
    return TruncatedSeries(field_, offset_, std::move(kept), nh);
}

}  // namespace convalg
