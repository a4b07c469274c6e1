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

#include <doctest.h>

#include "convalg/laurent.hpp"
#include "convalg/poly.hpp"
#include "convalg/rational.hpp"
#include "support/corpus.hpp"

using namespace convalg;

namespace {
const FieldSpec f2(2);
const FieldSpec f3(3);
}  // namespace

TEST_CASE("polynomial ring arithmetic") {
    const Poly a(f2, {1, 1});  // 1+D
    CHECK(a * a == Poly(f2, {1, 0, 1}));  // freshman's dream in char 2
    CHECK(Poly(f3, {1, 2}) + Poly(f3, {2, 1}) == Poly(f3));
    CHECK((Poly(f3, {1, 2}) + Poly(f3, {2, 1})).is_zero());
    CHECK(Poly(f2, {0, 0}).is_zero());
    CHECK(Poly(f2, {1}).degree() == ExtInt(0));
    CHECK(Poly(f2).degree() == ExtInt::neg_inf());
}

TEST_CASE("divmod returns the unique small remainder") {
    const Poly a(f2, {1, 1, 1});  // 1+D+D^2
    const Poly b(f2, {1, 1});     // 1+D
    const auto qr = divmod(a, b);
    CHECK(qr.quotient == Poly(f2, {0, 1}));
    CHECK(qr.remainder == Poly(f2, {1}));
    CHECK(qr.quotient * b + qr.remainder == a);  // round-trip oracle
    CHECK_THROWS_AS(divmod(a, Poly(f2)), DivisionByZero);
}

TEST_CASE("divmod round-trip on random pairs") {
    testing::Rng rng(202);
    for (std::uint32_t p : {2u, 3u, 7u}) {
        const FieldSpec f(p);
        for (int t = 0; t < 200; ++t) {
            const Poly a = testing::random_poly(rng, f, 8);
            const Poly b = testing::random_nonzero_poly(rng, f, 5);
            const auto qr = divmod(a, b);
            CHECK(qr.quotient * b + qr.remainder == a);
            CHECK(qr.remainder.degree() < b.degree());
        }
    }
}

TEST_CASE("extended euclid certificates") {
    SUBCASE("coprime pair") {
        const Poly a(f2, {1, 0, 1});  // 1+D^2
        const Poly b(f2, {1, 1, 1});  // 1+D+D^2
        const auto r = xgcd(a, b);
        CHECK(r.g == Poly::one(f2));
        CHECK(r.s * a + r.t * b == r.g);  // Bezout oracle
    }
    SUBCASE("gcd with zero is the monic scaling") {
        const Poly a(f3, {0, 2});  // 2D
        const auto r = xgcd(a, Poly(f3));
        CHECK(r.g == Poly(f3, {0, 1}));
        CHECK(r.s * a == r.g);
    }
    SUBCASE("common factor is found") {
        CHECK(gcd(Poly(f2, {1, 1}), Poly(f2, {1, 0, 1})) == Poly(f2, {1, 1}));  // 1+D^2 = (1+D)^2
    }
    CHECK_THROWS_AS(xgcd(Poly(f2), Poly(f2)), BothZero);
}

TEST_CASE("bezout identity on random pairs") {
    testing::Rng rng(203);
    for (int t = 0; t < 200; ++t) {
        const Poly a = testing::random_poly(rng, f3, 6);
        const Poly b = testing::random_poly(rng, f3, 6);
        if (a.is_zero() && b.is_zero()) continue;
        const auto r = xgcd(a, b);
        CHECK(r.s * a + r.t * b == r.g);
        CHECK(r.g.is_monic());
        if (!a.is_zero()) CHECK(divmod(a, r.g).remainder.is_zero());
        if (!b.is_zero()) CHECK(divmod(b, r.g).remainder.is_zero());
    }
}

TEST_CASE("delay and degree, including the zero sentinels") {
    const LaurentPoly x(f2, -2, {1, 0, 1});  // D^-2 + 1
    CHECK(x.delay() == ExtInt(-2));
    CHECK(x.degree() == ExtInt(0));

    const LaurentPoly zero(f2);
    CHECK(zero.delay() == ExtInt::pos_inf());
    CHECK(zero.degree() == ExtInt::neg_inf());

    const LaurentPoly cube = LaurentPoly::monomial(f2, 3);
    CHECK(cube.delay() == ExtInt(3));
    CHECK(cube.degree() == ExtInt(3));
}

TEST_CASE("causal / anticausal split") {
    const LaurentPoly x(f2, -1, {1, 1, 1});  // D^-1 + 1 + D
    CHECK(x.causal_part() == LaurentPoly(f2, 0, {1, 1}));
    CHECK(x.anticausal_part() == LaurentPoly(f2, -1, {1}));

    const LaurentPoly poly(f2, 0, {1, 0, 1});
    CHECK(poly.causal_part() == poly);
    CHECK(poly.anticausal_part().is_zero());

    const LaurentPoly anti(f2, -3, {1, 0, 1});  // D^-3 + D^-1
    CHECK(anti.causal_part().is_zero());
    CHECK(anti.anticausal_part() == anti);
}

TEST_CASE("split identities and degree multiplicativity, randomized") {
    testing::Rng rng(204);
    for (std::uint32_t p : {2u, 5u}) {
        const FieldSpec f(p);
        for (int t = 0; t < 300; ++t) {
            const LaurentPoly x = testing::random_laurent(rng, f, -4, 4);
            CHECK(x.causal_part() + x.anticausal_part() == x);
            CHECK(x.anticausal_part().causal_part().is_zero());
            CHECK(x.causal_part().anticausal_part().is_zero());

            const LaurentPoly y = testing::random_laurent(rng, f, -4, 4);
            if (!x.is_zero() && !y.is_zero()) {
                CHECK((x * y).delay() == x.delay() + y.delay());
                CHECK((x * y).degree() == x.degree() + y.degree());
            }
        }
    }
}

TEST_CASE("rational functions normalize to lowest terms with monic denominator") {
    const RationalFn r(Poly(f3, {0, 2}), Poly(f3, {0, 0, 2}));  // 2D / 2D^2 = 1/D
    CHECK(r.num() == Poly::one(f3));
    CHECK(r.den() == Poly(f3, {0, 1}));
    CHECK_FALSE(r.is_causal());

    CHECK_THROWS_AS(RationalFn(Poly::one(f2), Poly(f2)), DivisionByZero);

    // structural equality after reduction
    CHECK(RationalFn(Poly(f2, {1, 1}), Poly(f2, {1, 0, 1})) ==
          RationalFn(Poly::one(f2), Poly(f2, {1, 1})));
}

TEST_CASE("rational arithmetic cross-multiplication identity, randomized") {
    testing::Rng rng(205);
    for (int t = 0; t < 150; ++t) {
        const RationalFn a(testing::random_poly(rng, f3, 4), testing::random_nonzero_poly(rng, f3, 3));
        const RationalFn b(testing::random_poly(rng, f3, 4), testing::random_nonzero_poly(rng, f3, 3));
        const RationalFn sum = a + b;
        // (a+b) den_a den_b == num_a den_b + num_b den_a
        CHECK(sum.num() * (a.den() * b.den()) == sum.den() * (a.num() * b.den() + b.num() * a.den()));
        const RationalFn prod = a * b;
        CHECK(prod.num() * (a.den() * b.den()) == prod.den() * (a.num() * b.num()));
        if (!b.is_zero()) {
            const RationalFn q = a / b;
            CHECK(q * b == a);
        }
    }
}

TEST_CASE("causal series expansion with multiply-back oracle") {
    SUBCASE("geometric series") {
        const RationalFn f(Poly::one(f2), Poly(f2, {1, 1}));
        const TruncatedSeries s = rational_expand(f, 4);
        CHECK(s == TruncatedSeries(f2, 0, {1, 1, 1, 1}, ExtInt(4)));
    }
    SUBCASE("polynomial over one") {
        const RationalFn f(Poly(f2, {1, 0, 1}));
        CHECK(rational_expand(f, 5) == TruncatedSeries::exact(LaurentPoly(Poly(f2, {1, 0, 1})), ExtInt(5)));
    }
    SUBCASE("strided expansion") {
        const RationalFn f(Poly(f2, {0, 1}), Poly(f2, {1, 0, 1}));  // D/(1+D^2)
        const TruncatedSeries s = rational_expand(f, 6);
        CHECK(s == TruncatedSeries(f2, 0, {0, 1, 0, 1, 0, 1}, ExtInt(6)));  // D + D^3 + D^5
    }
    SUBCASE("anticausal denominators are rejected") {
        CHECK_THROWS_AS(rational_expand(RationalFn(Poly::one(f2), Poly(f2, {0, 1})), 4),
                        NonCausalDenominator);
    }
}

TEST_CASE("expansion multiplied back by the denominator matches the numerator") {
    testing::Rng rng(206);
    for (std::uint32_t p : {2u, 3u}) {
        const FieldSpec f(p);
        for (int t = 0; t < 100; ++t) {
            Poly den = testing::random_nonzero_poly(rng, f, 4);
            if (den.coeff(0) == 0) den = den + Poly::one(f);
            const RationalFn fn(testing::random_poly(rng, f, 4), den);
            const int horizon = rng.range(1, 24);
            const TruncatedSeries s = rational_expand(fn, horizon);
            const TruncatedSeries back = s * TruncatedSeries::exact(LaurentPoly(fn.den()));
            CHECK(back.horizon() >= ExtInt(horizon));
            for (int e = back.offset() >= 0 ? 0 : back.offset(); e < horizon; ++e)
                CHECK(back.coeff(e) == fn.num().coeff(e));
        }
    }
}

TEST_CASE("series arithmetic tracks sound horizons") {
    SUBCASE("multiplying by known zero") {
        const TruncatedSeries a = rational_expand(RationalFn(Poly::one(f2), Poly(f2, {1, 1})), 8);
        const TruncatedSeries zero(f2, 0, {}, ExtInt(8));
        const TruncatedSeries prod = a * zero;
        CHECK(prod.known_zero());
        CHECK(prod.horizon() >= ExtInt(8));
    }
    SUBCASE("polynomial product keeps the window") {
        const TruncatedSeries a = TruncatedSeries::exact(LaurentPoly(Poly(f2, {1, 1})), ExtInt(8));
        const TruncatedSeries prod = a * a;
        CHECK(prod.horizon() == ExtInt(8));
        CHECK(prod.known_part() == LaurentPoly(f2, 0, {1, 0, 1}));
    }
    SUBCASE("laurent factors shift the window") {
        const TruncatedSeries a = TruncatedSeries::exact(LaurentPoly(f2, -1, {1, 1}));  // D^-1 + 1
        const TruncatedSeries b = TruncatedSeries::exact(LaurentPoly::monomial(f2, 1));
        const TruncatedSeries prod = a * b;
        CHECK(prod.horizon() >= ExtInt(5));
        CHECK(prod.known_part() == LaurentPoly(f2, 0, {1, 1}));  // 1 + D
    }
    SUBCASE("addition clamps to the tighter horizon") {
        const TruncatedSeries a = rational_expand(RationalFn(Poly::one(f2), Poly(f2, {1, 1})), 8);
        const TruncatedSeries b = rational_expand(RationalFn(Poly::one(f2), Poly(f2, {1, 1})), 5);
        CHECK((a + b).horizon() == ExtInt(5));
        CHECK((a + b).known_zero());
    }
    SUBCASE("coefficient reads past the horizon are refused") {
        const TruncatedSeries a = rational_expand(RationalFn(Poly::one(f2), Poly(f2, {1, 1})), 4);
        CHECK(a.coeff(3) == 1);
        CHECK_THROWS_AS(a.coeff(4), std::out_of_range);
    }
}
