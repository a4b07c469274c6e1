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

#ifndef CONVALG_EXTINT_HPP
#define CONVALG_EXTINT_HPP

#include <compare>
#include <stdexcept>
#include <string>

namespace convalg {

/// Integer extended with +/- infinity. Degrees and delays live here:
/// deg 0 = -inf and del 0 = +inf are real values, not encodings.
class ExtInt {
   public:
    constexpr ExtInt() noexcept : kind_(Kind::Finite), v_(0) {}
    constexpr ExtInt(int v) noexcept : kind_(Kind::Finite), v_(v) {}

    static constexpr ExtInt pos_inf() noexcept { return ExtInt(Kind::PosInf); }
    static constexpr ExtInt neg_inf() noexcept { return ExtInt(Kind::NegInf); }

    constexpr bool is_finite() const noexcept { return kind_ == Kind::Finite; }
    constexpr bool is_pos_inf() const noexcept { return kind_ == Kind::PosInf; }
    constexpr bool is_neg_inf() const noexcept { return kind_ == Kind::NegInf; }

    /// The finite value; throws if infinite.
    constexpr int finite() const {
        if (!is_finite()) throw std::logic_error("ExtInt: value is infinite");
        return v_;
    }

    friend constexpr bool operator==(ExtInt a, ExtInt b) noexcept {
        return a.kind_ == b.kind_ && (a.kind_ != Kind::Finite || a.v_ == b.v_);
    }

    friend constexpr std::strong_ordering operator<=>(ExtInt a, ExtInt b) noexcept {
        if (a.rank() != b.rank()) return a.rank() <=> b.rank();
        if (a.kind_ == Kind::Finite) return a.v_ <=> b.v_;
        return std::strong_ordering::equal;
    }

    /// Addition with absorbing infinities; inf + (-inf) is undefined and throws.
    friend constexpr ExtInt operator+(ExtInt a, ExtInt b) {
        if (a.is_finite() && b.is_finite()) return ExtInt(a.v_ + b.v_);
        if (a.is_finite()) return b;
        if (b.is_finite()) return a;
        if (a.kind_ != b.kind_) throw std::logic_error("ExtInt: inf + (-inf)");
        return a;
    }

    std::string str() const {
        if (is_pos_inf()) return "inf";
        if (is_neg_inf()) return "-inf";
        return std::to_string(v_);
    }

   private:
    enum class Kind { NegInf, Finite, PosInf };
    constexpr explicit ExtInt(Kind k) noexcept : kind_(k), v_(0) {}
    constexpr int rank() const noexcept { return kind_ == Kind::NegInf ? -1 : (kind_ == Kind::Finite ? 0 : 1); }

    Kind kind_;
    int v_;
};

constexpr ExtInt min(ExtInt a, ExtInt b) noexcept { return a < b ? a : b; }
constexpr ExtInt max(ExtInt a, ExtInt b) noexcept { return a < b ? b : a; }

}  // namespace convalg

#endif  // CONVALG_EXTINT_HPP
