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

#include "convalg/gf.hpp"

#include <string>

namespace convalg {

namespace {

constexpr std::uint32_t kMaxModulus = 65521;  // largest prime below 2^16

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint32_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

void require_same_field(FieldSpec a, FieldSpec b) {
    if (a != b)
        throw MixedFields("elements of GF(" + std::to_string(a.modulus()) + ") and GF(" +
                          std::to_string(b.modulus()) + ") cannot be combined");
}

}  // namespace

FieldSpec::FieldSpec(std::uint32_t p) : p_(p) {
    if (p > kMaxModulus || !is_prime(p))
        throw NotPrime("field modulus " + std::to_string(p) + " is not a prime in [2, " +
                       std::to_string(kMaxModulus) + "]");
}

FieldElem FieldElem::operator+(FieldElem o) const {
    require_same_field(spec_, o.spec_);
    return FieldElem(gf::add(v_, o.v_, spec_.modulus()), spec_);
}

FieldElem FieldElem::operator-(FieldElem o) const {
    require_same_field(spec_, o.spec_);
    return FieldElem(gf::sub(v_, o.v_, spec_.modulus()), spec_);
}

FieldElem FieldElem::operator*(FieldElem o) const {
    require_same_field(spec_, o.spec_);
    return FieldElem(gf::mul(v_, o.v_, spec_.modulus()), spec_);
}

FieldElem FieldElem::operator/(FieldElem o) const {
    require_same_field(spec_, o.spec_);
    return *this * o.inv();
}

FieldElem FieldElem::operator-() const noexcept {
    return FieldElem(gf::neg(v_, spec_.modulus()), spec_);
}

FieldElem FieldElem::inv() const { return FieldElem(gf::inv(v_, spec_.modulus()), spec_); }

namespace gf {

std::uint32_t inv(std::uint32_t a, std::uint32_t p) {
    if (a == 0) throw DivisionByZero("inverse of zero in GF(" + std::to_string(p) + ")");
    // extended Euclid on (a, p); p prime guarantees gcd 1
    std::int64_t t = 0, t1 = 1;
    std::int64_t r = p, r1 = a;
    while (r1 != 0) {
        std::int64_t q = r / r1;
        std::int64_t tmp = t - q * t1;
        t = t1;
        t1 = tmp;
        tmp = r - q * r1;
        r = r1;
        r1 = tmp;
    }
    if (t < 0) t += p;
    return static_cast<std::uint32_t>(t);
}

}  // namespace gf

}  // namespace convalg
