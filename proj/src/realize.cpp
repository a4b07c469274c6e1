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

#include "convalg/realize.hpp"

#include <algorithm>
#include <numeric>

namespace convalg {

namespace {

// Memory layout shared by both forms: one cell per (input row i, delay j),
// 1 <= j <= nu_i, ordered row-major.
struct CellLayout {
    std::vector<int> nu;
    std::vector<std::size_t> first;  // first[i] = index of cell (i, 1)
    std::size_t m = 0;

    explicit CellLayout(const PolyMatrix& g) {
        first.reserve(g.rows());
        for (std::size_t i = 0; i < g.rows(); ++i) {
            first.push_back(m);
            const int d = g.row_degree(i).finite();
            nu.push_back(d);
            m += static_cast<std::size_t>(d);
        }
    }
    std::size_t cell(std::size_t i, int j) const {
        return first[i] + static_cast<std::size_t>(j - 1);
    }
};

std::vector<std::uint32_t> stack_for_rank(const StateVector& s, std::size_t n, int bound) {
    std::vector<std::uint32_t> v;
    v.reserve(n * static_cast<std::size_t>(bound));
    for (const auto& c : s.components)
        for (int d = 0; d < bound; ++d) v.push_back(c.coeff(d));
    return v;
}

}  // namespace

Realization controller_realization(const PolyMatrix& g) {
    const std::size_t k = g.rows(), n = g.cols();
    const FieldSpec f = g.field();
    if (rank_rational(g) != k)
        throw RankDeficient("controller_realization: matrix does not have full row rank");

    const CellLayout lay(g);
    Realization r{lay.m, k, n, FMatrix(f, lay.m, lay.m), FMatrix(f, k, lay.m),
                  FMatrix(f, lay.m, n), FMatrix(f, k, n)};

    r.D = g.coeff_matrix(0);
    for (std::size_t i = 0; i < k; ++i) {
        if (lay.nu[i] == 0) continue;
        r.B.set(i, lay.cell(i, 1), 1);
        for (int j = 1; j <= lay.nu[i]; ++j) {
            if (j < lay.nu[i]) r.A.set(lay.cell(i, j), lay.cell(i, j + 1), 1);
            for (std::size_t col = 0; col < n; ++col)
                r.C.set(lay.cell(i, j), col, g.at(i, col).coeff(j));
        }
    }
    return r;
}

Realization standard_realization(const PolyMatrix& g) {
    const std::size_t k = g.rows(), n = g.cols();
    const FieldSpec f = g.field();
    {
        const DegreeProfile prof = degree_profile(g);
        if (!prof.reduced) throw NotReduced("standard_realization: matrix is not reduced");
    }

    const CellLayout lay(g);
    const int bound = std::max(0, g.max_degree().finite());
    const std::size_t width = n * static_cast<std::size_t>(bound);

    // Basis states of the cells [D^{-j} e_i]; reduced G makes them
    // independent, so coordinates are a plain linear solve against them.
    std::vector<AnticausalInput> cell_inputs;
    FMatrix basis_t(f, width, lay.m);  // stacked basis states, transposed
    for (std::size_t i = 0; i < k; ++i)
        for (int j = 1; j <= lay.nu[i]; ++j) {
            std::vector<LaurentPoly> comps(k, LaurentPoly(f));
            comps[i] = LaurentPoly::monomial(f, -j);
            AnticausalInput u(std::move(comps));
            const auto col = stack_for_rank(state_of(u, g), n, bound);
            for (std::size_t t = 0; t < width; ++t) basis_t.set(t, lay.cell(i, j), col[t]);
            cell_inputs.push_back(std::move(u));
        }

    auto coords_of = [&](const StateVector& s) {
        const auto b = stack_for_rank(s, n, bound);
        const auto x = basis_t.solve(b);
        if (!x) throw std::logic_error("standard_realization: state outside the basis span");
        return *x;
    };

    Realization r{lay.m, k, n, FMatrix(f, lay.m, lay.m), FMatrix(f, k, lay.m),
                  FMatrix(f, lay.m, n), FMatrix(f, k, n)};

    // step law from a class representative u and an input symbol at time 0:
    // next state is [(u + input) D^{-1}], output is coefficient 0 of (u + input) G
    for (std::size_t c = 0; c < lay.m; ++c) {
        const auto& u = cell_inputs[c];
        // output row of C: coefficient 0 of u*G
        const auto prod = laurent_row_mul(u.components, g);
        for (std::size_t col = 0; col < n; ++col) r.C.set(c, col, prod[col].coeff(0));
        // transition row of A: state of u shifted one step into the past
        std::vector<LaurentPoly> shifted;
        shifted.reserve(k);
        for (const auto& x : u.components) shifted.push_back(x.shifted(-1));
        const auto coords = coords_of(state_of(AnticausalInput(std::move(shifted)), g));
        for (std::size_t t = 0; t < lay.m; ++t) r.A.set(c, t, coords[t]);
    }
    for (std::size_t i = 0; i < k; ++i) {
        // feedthrough: coefficient 0 of e_i * G
        for (std::size_t col = 0; col < n; ++col) r.D.set(i, col, g.at(i, col).coeff(0));
        // input feeds the shifted unit class [D^{-1} e_i]
        std::vector<LaurentPoly> comps(k, LaurentPoly(f));
        comps[i] = LaurentPoly::monomial(f, -1);
        const auto coords = coords_of(state_of(AnticausalInput(std::move(comps)), g));
        for (std::size_t t = 0; t < lay.m; ++t) r.B.set(i, t, coords[t]);
    }
    return r;
}

StepResult encoder_step(const Realization& r, const std::vector<std::uint32_t>& state,
                        const std::vector<std::uint32_t>& input) {
    if (state.size() != r.m) throw DimensionMismatch("encoder_step: state width");
    if (input.size() != r.k) throw DimensionMismatch("encoder_step: input width");
    const std::uint32_t p = r.field().modulus();

    StepResult res{std::vector<std::uint32_t>(r.m, 0), std::vector<std::uint32_t>(r.n, 0)};
    for (std::size_t t = 0; t < r.m; ++t) {
        const std::uint32_t s = state[t] % p;
        if (s == 0) continue;
        for (std::size_t j = 0; j < r.m; ++j)
            res.state[j] = gf::add(res.state[j], gf::mul(s, r.A(t, j), p), p);
        for (std::size_t j = 0; j < r.n; ++j)
            res.output[j] = gf::add(res.output[j], gf::mul(s, r.C(t, j), p), p);
    }
    for (std::size_t t = 0; t < r.k; ++t) {
        const std::uint32_t u = input[t] % p;
        if (u == 0) continue;
        for (std::size_t j = 0; j < r.m; ++j)
            res.state[j] = gf::add(res.state[j], gf::mul(u, r.B(t, j), p), p);
        for (std::size_t j = 0; j < r.n; ++j)
            res.output[j] = gf::add(res.output[j], gf::mul(u, r.D(t, j), p), p);
    }
    return res;
}

SymbolStream encode(const Realization& r, const SymbolStream& input) {
    if (input.field != r.field()) throw MixedFields("encode: stream field mismatch");
    if (input.width != r.k) throw DimensionMismatch("encode: stream width mismatch");

    SymbolStream out{r.field(), r.n, {}};
    out.symbols.reserve(input.symbols.size());
    std::vector<std::uint32_t> state(r.m, 0);
    for (const auto& u : input.symbols) {
        StepResult sr = encoder_step(r, state, u);
        state = std::move(sr.state);
        out.symbols.push_back(std::move(sr.output));
    }
    return out;
}

std::vector<TruncatedSeries> encode_series(const PolyMatrix& g, const std::vector<LaurentPoly>& u,
                                           int horizon) {
    const auto prod = laurent_row_mul(u, g);
    std::vector<TruncatedSeries> out;
    out.reserve(prod.size());
    for (const auto& x : prod) out.push_back(TruncatedSeries::exact(x, ExtInt(horizon)));
    return out;
}

std::vector<TruncatedSeries> encode_series(const std::vector<std::vector<RationalFn>>& g,
                                           const std::vector<LaurentPoly>& u, int horizon) {
    if (g.empty()) throw DimensionMismatch("encode_series: empty matrix");
    const std::size_t k = g.size(), n = g.front().size();
    if (u.size() != k) throw DimensionMismatch("encode_series: row length mismatch");
    for (const auto& row : g)
        if (row.size() != n) throw DimensionMismatch("encode_series: ragged matrix");

    // expand entries deep enough that delayed input terms still land below
    // the requested horizon
    int min_delay = 0;
    for (const auto& x : u)
        if (!x.is_zero()) min_delay = std::min(min_delay, x.delay().finite());
    const int entry_horizon = horizon - min_delay;

    const FieldSpec f = u.empty() ? g.front().front().field() : u.front().field();
    std::vector<TruncatedSeries> out;
    out.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
        TruncatedSeries acc(f, 0, {}, ExtInt(horizon));
        for (std::size_t i = 0; i < k; ++i) {
            const TruncatedSeries entry = rational_expand(g[i][j], entry_horizon);
            acc = acc + TruncatedSeries::exact(u[i]) * entry;
        }
        out.push_back(acc.truncated(ExtInt(horizon)));
    }
    return out;
}

}  // namespace convalg
