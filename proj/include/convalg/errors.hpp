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

#ifndef CONVALG_ERRORS_HPP
#define CONVALG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace convalg {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
   public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Modulus passed to FieldSpec is composite or outside [2, 65521].
class NotPrime : public Error {
   public:
    using Error::Error;
};

/// Operands belong to prime fields with different moduli.
class MixedFields : public Error {
   public:
    using Error::Error;
};

class DivisionByZero : public Error {
   public:
    using Error::Error;
};

/// gcd(0, 0) requested.
class BothZero : public Error {
   public:
    using Error::Error;
};

/// Series expansion of a rational function whose denominator vanishes at 0.
class NonCausalDenominator : public Error {
   public:
    using Error::Error;
};

class DimensionMismatch : public Error {
   public:
    using Error::Error;
};

/// Matrix does not have full row rank over F(D).
class RankDeficient : public Error {
   public:
    using Error::Error;
};

/// Matrix has a non-unit invariant factor (no polynomial right inverse).
class NotBasic : public Error {
   public:
    using Error::Error;
};

class NotReduced : public Error {
   public:
    using Error::Error;
};

class NotCanonical : public Error {
   public:
    using Error::Error;
};

/// An exhaustive search would exceed the hard enumeration cap (2^16 cases).
class TooLargeToEnumerate : public Error {
   public:
    using Error::Error;
};

/// Malformed matrix/stream file.
class ParseError : public Error {
   public:
    using Error::Error;
};

}  // namespace convalg

#endif  // CONVALG_ERRORS_HPP
