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

#ifndef CONVALG_POLY_HPP
#define CONVALG_POLY_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "extint.hpp"
#include "gf.hpp"

namespace convalg {

/// Polynomial in D over GF(p). Coefficients are stored ascending
/// (index 0 = constant term) with no trailing zero; the zero polynomial
/// stores nothing.
class Poly {
   public:
    explicit Poly(FieldSpec field) : field_(field) {}
    Poly(FieldSpec field, std::vector<std::uint32_t> coeffs);

    static Poly zero(FieldSpec field) { return Poly(field); }
    static Poly one(FieldSpec field) { return Poly(field, {1}); }
    static Poly monomial(FieldSpec field, int degree, std::uint32_t c = 1);

    FieldSpec field() const noexcept { return field_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_one() const noexcept { return coeffs_.size() == 1 && coeffs_[0] == 1; }

    /// deg 0 = -inf.
    ExtInt degree() const noexcept {
        return coeffs_.empty() ? ExtInt::neg_inf() : ExtInt(static_cast<int>(coeffs_.size()) - 1);
    }
    std::size_t size() const noexcept { return coeffs_.size(); }

    /// Coefficient of D^i (zero outside the stored range).
    std::uint32_t coeff(int i) const noexcept {
        return (i < 0 || static_cast<std::size_t>(i) >= coeffs_.size()) ? 0
                                                                        : coeffs_[static_cast<std::size_t>(i)];
    }
    FieldElem leading() const;
    bool is_monic() const noexcept { return !coeffs_.empty() && coeffs_.back() == 1; }
    bool is_constant() const noexcept { return coeffs_.size() <= 1; }
    const std::vector<std::uint32_t>& coeffs() const noexcept { return coeffs_; }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator-() const;
    Poly scaled(FieldElem c) const;
    Poly shifted(int s) const;  // multiply by D^s, s >= 0
    Poly monic() const;         // scale to leading coefficient 1

    friend bool operator==(const Poly& a, const Poly& b) noexcept {
        return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const Poly& a, const Poly& b) noexcept { return !(a == b); }

    /// Ascending coefficient list, e.g. "[1,0,1]" for 1+D^2.
    std::string str() const;

   private:
    void normalize();

    FieldSpec field_;
    std::vector<std::uint32_t> coeffs_;
};

struct PolyDivMod {
    Poly quotient;
    Poly remainder;
};

/// a = q*b + r with deg r < deg b. Throws DivisionByZero for b = 0.
PolyDivMod divmod(const Poly& a, const Poly& b);

/// Exact quotient; throws std::logic_error if b does not divide a.
Poly exact_div(const Poly& a, const Poly& b);

struct PolyXgcd {
    Poly g;  // monic
    Poly s;
    Poly t;  // g = s*a + t*b
};

/// Extended Euclid. Throws BothZero when a = b = 0.
PolyXgcd xgcd(const Poly& a, const Poly& b);
Poly gcd(const Poly& a, const Poly& b);

}  // namespace convalg

#endif  // CONVALG_POLY_HPP
