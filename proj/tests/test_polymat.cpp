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

#include "convalg/polymat.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace convalg;
using namespace convalg::testing;

namespace {
const FieldSpec f2(2);
const FieldSpec f3(3);

bool is_constant_nonzero(const Poly& p) { return !p.is_zero() && p.is_constant(); }
}  // namespace

TEST_CASE("rank over F(D)") {
    CHECK(rank_rational(g57()) == 1);
    CHECK(rank_rational(g_sys23()) == 2);
    CHECK(rank_rational(g_rep11()) == 1);
    CHECK(rank_rational(make_matrix(2, {{{1, 1}, {1, 1}}, {{1, 1}, {1, 1}}})) == 1);  // equal rows
}

TEST_CASE("rank and determinant agree with the minor-enumeration oracles") {
    Rng rng(301);
    for (std::uint32_t p : {2u, 3u}) {
        const FieldSpec f(p);
        for (int t = 0; t < 60; ++t) {
            const std::size_t k = 1 + rng.below(3), n = 1 + rng.below(4);
            const PolyMatrix m = random_matrix(rng, f, k, n, 3);
            CHECK(rank_rational(m) == rank_by_minors(m));
            if (k == n) CHECK(determinant(m) == leibniz_det(m));
        }
    }
}

TEST_CASE("matrix product shape errors") {
    CHECK_THROWS_AS(g_sys23() * g57(), DimensionMismatch);
    CHECK((g57() * g_sys23()).cols() == 3);
}

TEST_CASE("sum and transpose") {
    const PolyMatrix g = g_sys23();
    const PolyMatrix doubled = g + g;
    for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t j = 0; j < g.cols(); ++j) CHECK(doubled.at(i, j).is_zero());
    CHECK(g.transpose().transpose() == g);
    CHECK(g.transpose().rows() == 3);
}

TEST_CASE("fraction-free elimination survives a large modulus") {
    Rng rng(307);
    const FieldSpec f(65521);
    for (int t = 0; t < 8; ++t) {
        PolyMatrix m(f, 4, 4);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) m.set(i, j, random_poly(rng, f, 2));
        CHECK(determinant(m) == leibniz_det(m));

        PolyMatrix wide(f, 3, 5);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 5; ++j) wide.set(i, j, random_poly(rng, f, 2));
        CHECK(rank_rational(wide) == rank_by_minors(wide));
    }
}

TEST_CASE("degree profile of the three running examples") {
    SUBCASE("rate-1/2 (5,7): canonical") {
        const DegreeProfile p = degree_profile(g57());
        CHECK(p.row_degrees == std::vector<int>{2});
        CHECK(p.extdeg == 2);
        CHECK(p.intdeg == 2);
        CHECK(p.reduced);
        CHECK(p.basic);
        CHECK(p.canonical);
    }
    SUBCASE("systematic 2/3: basic but not reduced") {
        const DegreeProfile p = degree_profile(g_sys23());
        CHECK(p.row_degrees == std::vector<int>{1, 2});
        CHECK(p.extdeg == 3);
        CHECK(p.intdeg == 2);
        CHECK(intdeg_by_minors(g_sys23()) == 2);  // cross-check via Leibniz minors
        CHECK_FALSE(p.reduced);
        CHECK(p.basic);
        CHECK_FALSE(p.canonical);
    }
    SUBCASE("repetition 1/2: reduced but not basic") {
        const DegreeProfile p = degree_profile(g_rep11());
        CHECK(p.row_degrees == std::vector<int>{1});
        CHECK(p.extdeg == 1);
        CHECK(p.intdeg == 1);
        CHECK(p.reduced);
        CHECK_FALSE(p.basic);
    }
    CHECK_THROWS_AS(degree_profile(make_matrix(2, {{{1, 1}, {1, 1}}, {{1, 1}, {1, 1}}})),
                    RankDeficient);
}

TEST_CASE("predictable degree property checks") {
    SUBCASE("reduced matrix satisfies it") {
        const auto r = predictable_degree_check(g57(), {LaurentPoly(Poly(f2, {1, 1}))});
        CHECK(r.holds);
        CHECK(r.lhs == ExtInt(3));
        CHECK(r.rhs == ExtInt(3));
    }
    SUBCASE("non-reduced matrix has a witness") {
        const auto r = predictable_degree_check(
            g_sys23(), {LaurentPoly::monomial(f2, 1), LaurentPoly(Poly::one(f2))});
        CHECK_FALSE(r.holds);
        CHECK(r.lhs == ExtInt(1));  // u G = (D, 1, 0): the D^2 terms cancel
        CHECK(r.rhs == ExtInt(2));
    }
    SUBCASE("unit rows always satisfy it") {
        const auto r = predictable_degree_check(
            g_sys23(), {LaurentPoly(Poly::one(f2)), LaurentPoly(f2)});
        CHECK(r.holds);
    }
    CHECK_THROWS_AS(predictable_degree_check(g_sys23(), {LaurentPoly(f2)}), DimensionMismatch);
}

TEST_CASE("row reduction produces a certified reduced matrix") {
    SUBCASE("systematic 2/3 loses one degree") {
        const ReduceResult rr = reduce(g_sys23());
        CHECK(rr.reduced == make_matrix(2, {{{1}, {0}, {0, 1}}, {{0, 1}, {1}, {}}}));
        CHECK(rr.cert.T() == make_matrix(2, {{{1}, {}}, {{0, 1}, {1}}}));
        CHECK(is_constant_nonzero(rr.cert.det()));
        CHECK(rr.cert.T() * g_sys23() == rr.reduced);
        CHECK(degree_profile(rr.reduced).reduced);
        CHECK(degree_profile(rr.reduced).extdeg == 2);
    }
    SUBCASE("already-reduced matrices are untouched") {
        const ReduceResult rr = reduce(g57());
        CHECK(rr.reduced == g57());
        CHECK(rr.cert.T() == PolyMatrix::identity(f2, 1));
        const ReduceResult rr2 = reduce(g_rep11());
        CHECK(rr2.reduced == g_rep11());
    }
}

TEST_CASE("reduce postconditions on random full-rank matrices") {
    Rng rng(302);
    for (std::uint32_t p : {2u, 3u}) {
        const FieldSpec f(p);
        for (int t = 0; t < 40; ++t) {
            const std::size_t k = 1 + rng.below(3);
            const std::size_t n = k + rng.below(static_cast<std::uint32_t>(4 - k) + 1);
            const PolyMatrix g = random_fullrank_matrix(rng, f, k, n, 3);
            const DegreeProfile before = degree_profile(g);
            const ReduceResult rr = reduce(g);
            const DegreeProfile after = degree_profile(rr.reduced);
            CHECK(rr.cert.T() * g == rr.reduced);
            CHECK(is_constant_nonzero(rr.cert.det()));
            CHECK(after.reduced);
            CHECK(after.extdeg == before.intdeg);
            CHECK(after.intdeg == before.intdeg);
        }
    }
}

TEST_CASE("smith normal form with unimodular certificates") {
    SUBCASE("common factor shows up as the invariant factor") {
        const SmithForm sf = smith_form(g_rep11());
        REQUIRE(sf.invariant_factors.size() == 1);
        CHECK(sf.invariant_factors[0] == Poly(f2, {1, 1}));
    }
    SUBCASE("identity has trivial factors") {
        const SmithForm sf = smith_form(PolyMatrix::identity(f2, 3));
        for (const auto& g : sf.invariant_factors) CHECK(g.is_one());
    }
    SUBCASE("coprime entries give factor 1") {
        const SmithForm sf = smith_form(g57());
        REQUIRE(sf.invariant_factors.size() == 1);
        CHECK(sf.invariant_factors[0].is_one());
    }
}

TEST_CASE("smith form properties on random matrices") {
    Rng rng(303);
    for (std::uint32_t p : {2u, 3u}) {
        const FieldSpec f(p);
        for (int t = 0; t < 40; ++t) {
            const std::size_t k = 1 + rng.below(3), n = 1 + rng.below(4);
            const PolyMatrix g = random_matrix(rng, f, k, n, 3);
            const SmithForm sf = smith_form(g);

            CHECK(is_constant_nonzero(leibniz_det(sf.U.T())));
            CHECK(is_constant_nonzero(leibniz_det(sf.V.T())));
            CHECK(sf.U.T() * sf.U.Tinv() == PolyMatrix::identity(f, k));
            CHECK(sf.V.T() * sf.V.Tinv() == PolyMatrix::identity(f, n));

            const PolyMatrix d = sf.U.T() * g * sf.V.T();
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    if (i == j)
                        CHECK(d.at(i, j) == sf.invariant_factors[i]);
                    else
                        CHECK(d.at(i, j).is_zero());
                }
            for (std::size_t i = 0; i + 1 < sf.invariant_factors.size(); ++i) {
                if (sf.invariant_factors[i].is_zero()) {
                    CHECK(sf.invariant_factors[i + 1].is_zero());
                    continue;
                }
                CHECK(divmod(sf.invariant_factors[i + 1], sf.invariant_factors[i])
                          .remainder.is_zero());
                if (!sf.invariant_factors[i + 1].is_zero())
                    CHECK(sf.invariant_factors[i + 1].is_monic());
            }
            if (!sf.invariant_factors.front().is_zero())
                CHECK(sf.invariant_factors.front().is_monic());
        }
    }
}

TEST_CASE("polynomial right inverse") {
    SUBCASE("exists exactly for basic matrices") {
        const PolyMatrix gi = right_inverse(g57());
        CHECK(g57() * gi == PolyMatrix::identity(f2, 1));
        CHECK(right_inverse(PolyMatrix::identity(f3, 2)) == PolyMatrix::identity(f3, 2));
        CHECK_THROWS_AS(right_inverse(g_rep11()), NotBasic);
    }
    SUBCASE("systematic 2/3 is basic") {
        const PolyMatrix gi = right_inverse(g_sys23());
        CHECK(g_sys23() * gi == PolyMatrix::identity(f2, 2));
    }
}

TEST_CASE("canonicalization and Forney indices") {
    SUBCASE("common factor is stripped") {
        const CanonicalResult c = canonicalize(g_rep11());
        CHECK(c.canonical == make_matrix(2, {{{1}, {1}}}));
        CHECK(c.forney == std::vector<int>{0});
    }
    SUBCASE("already canonical") {
        const CanonicalResult c = canonicalize(g57());
        CHECK(c.forney == std::vector<int>{2});
        const DegreeProfile p = degree_profile(c.canonical);
        CHECK(p.canonical);
        // same code: stacking both matrices does not increase the rank
        PolyMatrix both(f2, 2, 2);
        for (std::size_t j = 0; j < 2; ++j) {
            both.set(0, j, g57().at(0, j));
            both.set(1, j, c.canonical.at(0, j));
        }
        CHECK(rank_rational(both) == 1);
    }
    SUBCASE("basic matrix canonicalizes to its reduced form's degrees") {
        const CanonicalResult c = canonicalize(g_sys23());
        CHECK(c.forney == std::vector<int>{1, 1});
        CHECK(degree_profile(c.canonical).canonical);
    }
}

TEST_CASE("internal degree is unimodular-invariant; sandwich with extdeg") {
    Rng rng(304);
    for (std::uint32_t p : {2u, 3u}) {
        const FieldSpec f(p);
        for (int t = 0; t < 30; ++t) {
            const std::size_t k = 1 + rng.below(3);
            const std::size_t n = k + rng.below(static_cast<std::uint32_t>(4 - k) + 1);
            const PolyMatrix g = random_fullrank_matrix(rng, f, k, n, 3);
            const DegreeProfile prof = degree_profile(g);

            CHECK(prof.intdeg <= prof.extdeg);
            CHECK((prof.intdeg == prof.extdeg) == prof.reduced);

            const PolyMatrix tg = random_unimodular(rng, f, k, 4) * g;
            CHECK(degree_profile(tg).intdeg == prof.intdeg);
        }
    }
}

TEST_CASE("canonical row degrees do not depend on the generating matrix") {
    Rng rng(305);
    for (std::uint32_t p : {2u, 3u}) {
        const FieldSpec f(p);
        for (int t = 0; t < 25; ++t) {
            const std::size_t k = 1 + rng.below(2);
            const std::size_t n = k + 1 + rng.below(static_cast<std::uint32_t>(3 - k) + 1);
            const PolyMatrix g = random_fullrank_matrix(rng, f, k, n, 2);
            const PolyMatrix tg = random_unimodular(rng, f, k, 3) * g;
            CHECK(canonicalize(g).forney == canonicalize(tg).forney);
        }
    }
}

TEST_CASE("predictable degree holds for reduced matrices on random inputs") {
    Rng rng(306);
    for (std::uint32_t p : {2u, 3u}) {
        const FieldSpec f(p);
        for (int t = 0; t < 10; ++t) {
            const std::size_t k = 1 + rng.below(3);
            const std::size_t n = k + rng.below(static_cast<std::uint32_t>(4 - k) + 1);
            const PolyMatrix g = reduce(random_fullrank_matrix(rng, f, k, n, 3)).reduced;
            for (int s = 0; s < 50; ++s) {
                std::vector<LaurentPoly> u;
                for (std::size_t i = 0; i < k; ++i) u.push_back(random_laurent(rng, f, -3, 3));
                CHECK(predictable_degree_check(g, u).holds);
            }
        }
    }
}
