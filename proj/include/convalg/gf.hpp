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

#ifndef CONVALG_GF_HPP
#define CONVALG_GF_HPP

#include <cstdint>

#include "errors.hpp"

namespace convalg {

/// A prime field GF(p), 2 <= p <= 65521. Primality is checked at
/// construction; a composite modulus never makes it past here.
class FieldSpec {
   public:
    explicit FieldSpec(std::uint32_t p);

    std::uint32_t modulus() const noexcept { return p_; }

    friend bool operator==(FieldSpec a, FieldSpec b) noexcept { return a.p_ == b.p_; }
    friend bool operator!=(FieldSpec a, FieldSpec b) noexcept { return a.p_ != b.p_; }

   private:
    std::uint32_t p_;
};

/// An element of GF(p), kept canonical in [0, p).
class FieldElem {
   public:
    FieldElem(std::uint64_t value, FieldSpec spec) noexcept
        : spec_(spec), v_(static_cast<std::uint32_t>(value % spec.modulus())) {}

    static FieldElem zero(FieldSpec spec) noexcept { return FieldElem(0, spec); }
    static FieldElem one(FieldSpec spec) noexcept { return FieldElem(1, spec); }

    std::uint32_t value() const noexcept { return v_; }
    FieldSpec spec() const noexcept { return spec_; }
    bool is_zero() const noexcept { return v_ == 0; }

    FieldElem operator+(FieldElem o) const;
    FieldElem operator-(FieldElem o) const;
    FieldElem operator*(FieldElem o) const;
    FieldElem operator/(FieldElem o) const;
    FieldElem operator-() const noexcept;
    FieldElem inv() const;

    friend bool operator==(FieldElem a, FieldElem b) noexcept {
        return a.spec_ == b.spec_ && a.v_ == b.v_;
    }
    friend bool operator!=(FieldElem a, FieldElem b) noexcept { return !(a == b); }

   private:
    FieldSpec spec_;
    std::uint32_t v_;
};

namespace gf {

// Raw-value arithmetic used by the inner loops; operands must already be
// canonical in [0, p).
inline std::uint32_t add(std::uint32_t a, std::uint32_t b, std::uint32_t p) noexcept {
    std::uint32_t s = a + b;
    return s >= p ? s - p : s;
}
inline std::uint32_t sub(std::uint32_t a, std::uint32_t b, std::uint32_t p) noexcept {
    return a >= b ? a - b : a + p - b;
}
inline std::uint32_t neg(std::uint32_t a, std::uint32_t p) noexcept { return a == 0 ? 0 : p - a; }
inline std::uint32_t mul(std::uint32_t a, std::uint32_t b, std::uint32_t p) noexcept {
    return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) % p);
}
std::uint32_t inv(std::uint32_t a, std::uint32_t p);

}  // namespace gf

}  // namespace convalg

#endif  // CONVALG_GF_HPP
