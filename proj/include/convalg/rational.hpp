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

#ifndef CONVALG_RATIONAL_HPP
#define CONVALG_RATIONAL_HPP

#include "laurent.hpp"
#include "poly.hpp"

namespace convalg {

/// Rational function num/den over GF(p), kept in lowest terms with a monic
/// denominator, so equality is structural. Causal iff den(0) != 0.
class RationalFn {
   public:
    explicit RationalFn(const Poly& num);
    RationalFn(const Poly& num, const Poly& den);  // throws DivisionByZero for den = 0

    static RationalFn zero(FieldSpec field) { return RationalFn(Poly(field)); }
    static RationalFn one(FieldSpec field) { return RationalFn(Poly::one(field)); }
    /// Exact conversion: x = K-part-and-all as num / D^m.
    static RationalFn from_laurent(const LaurentPoly& x);

    FieldSpec field() const noexcept { return num_.field(); }
    const Poly& num() const noexcept { return num_; }
    const Poly& den() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_polynomial() const noexcept { return den_.is_one(); }
    bool is_causal() const noexcept { return den_.coeff(0) != 0; }

    RationalFn operator+(const RationalFn& o) const;
    RationalFn operator-(const RationalFn& o) const;
    RationalFn operator*(const RationalFn& o) const;
    RationalFn operator/(const RationalFn& o) const;  // throws DivisionByZero
    RationalFn operator-() const;

    friend bool operator==(const RationalFn& a, const RationalFn& b) noexcept {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFn& a, const RationalFn& b) noexcept { return !(a == b); }

    std::string str() const;

   private:
    Poly num_, den_;
};

/// Power-series expansion of a causal rational function: the unique series s
/// with s * den = num on all exponents < horizon. Throws NonCausalDenominator
/// if den(0) = 0.
TruncatedSeries rational_expand(const RationalFn& f, int horizon);

}  // namespace convalg

#endif  // CONVALG_RATIONAL_HPP
