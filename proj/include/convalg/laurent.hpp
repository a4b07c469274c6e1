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

#ifndef CONVALG_LAURENT_HPP
#define CONVALG_LAURENT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "poly.hpp"

namespace convalg {

/// Laurent polynomial over GF(p): finitely many terms, exponents may be
/// negative. Stored as (offset, ascending coefficients), normalized so the
/// first and last stored coefficients are nonzero; zero stores nothing.
class LaurentPoly {
   public:
    explicit LaurentPoly(FieldSpec field) : field_(field), offset_(0) {}
    LaurentPoly(FieldSpec field, int offset, std::vector<std::uint32_t> coeffs);
    explicit LaurentPoly(const Poly& p) : LaurentPoly(p.field(), 0, p.coeffs()) {}

    static LaurentPoly monomial(FieldSpec field, int exponent, std::uint32_t c = 1);

    FieldSpec field() const noexcept { return field_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }

    /// Lowest exponent with nonzero coefficient; del 0 = +inf.
    ExtInt delay() const noexcept { return is_zero() ? ExtInt::pos_inf() : ExtInt(offset_); }
    /// Highest exponent with nonzero coefficient; deg 0 = -inf.
    ExtInt degree() const noexcept {
        return is_zero() ? ExtInt::neg_inf()
                         : ExtInt(offset_ + static_cast<int>(coeffs_.size()) - 1);
    }

    int offset() const noexcept { return offset_; }
    const std::vector<std::uint32_t>& coeffs() const noexcept { return coeffs_; }
    std::uint32_t coeff(int exponent) const noexcept;

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    LaurentPoly scaled(FieldElem c) const;
    LaurentPoly shifted(int s) const;  // multiply by D^s (any sign)

    /// Terms with exponent >= 0.
    LaurentPoly causal_part() const;
    /// Terms with exponent < 0.
    LaurentPoly anticausal_part() const;
    bool is_causal() const noexcept { return is_zero() || offset_ >= 0; }
    bool is_anticausal() const noexcept { return degree() < ExtInt(0); }

    /// Conversion back to Poly; requires the value to be causal.
    Poly as_poly() const;

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) noexcept {
        return a.field_ == b.field_ && a.offset_ == b.offset_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) noexcept { return !(a == b); }

    /// "(offset, [coeffs])" per the CLI text format.
    std::string str() const;

   private:
    void normalize();

    FieldSpec field_;
    int offset_;
    std::vector<std::uint32_t> coeffs_;
};

/// A finite window onto a Laurent series: coefficients at exponents below
/// `horizon` are known exactly, everything at or above it is unknown.
/// Arithmetic propagates the tightest horizon that is still sound.
class TruncatedSeries {
   public:
    TruncatedSeries(FieldSpec field, int offset, std::vector<std::uint32_t> coeffs, ExtInt horizon);

    /// Exact value as a series (horizon +inf unless capped).
    static TruncatedSeries exact(const LaurentPoly& x);
    static TruncatedSeries exact(const LaurentPoly& x, ExtInt horizon);

    FieldSpec field() const noexcept { return field_; }
    ExtInt horizon() const noexcept { return horizon_; }
    /// All known coefficients are zero.
    bool known_zero() const noexcept { return coeffs_.empty(); }
    const std::vector<std::uint32_t>& coeffs() const noexcept { return coeffs_; }
    int offset() const noexcept { return offset_; }

    /// Coefficient at `exponent`; throws std::out_of_range at/beyond the horizon.
    std::uint32_t coeff(int exponent) const;

    /// Known part as a Laurent polynomial.
    LaurentPoly known_part() const { return LaurentPoly(field_, offset_, coeffs_); }

    TruncatedSeries operator+(const TruncatedSeries& o) const;
    TruncatedSeries operator*(const TruncatedSeries& o) const;

    /// Same coefficients, horizon clamped down to H.
    TruncatedSeries truncated(ExtInt H) const;

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) noexcept {
        return a.field_ == b.field_ && a.offset_ == b.offset_ && a.coeffs_ == b.coeffs_ &&
               a.horizon_ == b.horizon_;
    }
    friend bool operator!=(const TruncatedSeries& a, const TruncatedSeries& b) noexcept {
        return !(a == b);
    }

   private:
    // Earliest exponent at which the series could be nonzero, given what is
    // known: the delay of the known part, or the horizon if that part is zero.
    ExtInt earliest_nonzero() const noexcept;
    void normalize();

    FieldSpec field_;
    int offset_;
    std::vector<std::uint32_t> coeffs_;
    ExtInt horizon_;
};

}  // namespace convalg

#endif  // CONVALG_LAURENT_HPP
