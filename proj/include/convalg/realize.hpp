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

#ifndef CONVALG_REALIZE_HPP
#define CONVALG_REALIZE_HPP

#include <cstdint>
#include <vector>

#include "polymat.hpp"
#include "rational.hpp"
#include "statespace.hpp"

namespace convalg {

/// Finite linear state machine over GF(p):
///   s' = s A + u B,   v = s C + u D.
struct Realization {
    std::size_t m;  // state dimension
    std::size_t k;  // input width
    std::size_t n;  // output width
    FMatrix A;      // m x m
    FMatrix B;      // k x m
    FMatrix C;      // m x n
    FMatrix D;      // k x n

    FieldSpec field() const noexcept { return A.field(); }
    friend bool operator==(const Realization& a, const Realization& b) noexcept {
        return a.m == b.m && a.k == b.k && a.n == b.n && a.A == b.A && a.B == b.B && a.C == b.C &&
               a.D == b.D;
    }
};

/// Direct-form (controller canonical) realization: one shift-register chain
/// of length deg(row i) per input, so m = extdeg G. Works for any polynomial
/// matrix of full row rank.
Realization controller_realization(const PolyMatrix& g);

/// Realization carried by the encoding state space itself, with states
/// written in the basis {[D^{-j} e_i]}: the step law "shift the past, feed
/// the input, emit the time-zero output coefficient" expressed in those
/// coordinates. Requires a reduced matrix; coincides with the controller
/// form under the identification cell (i,j) <-> [D^{-j} e_i].
Realization standard_realization(const PolyMatrix& g);

struct StepResult {
    std::vector<std::uint32_t> state;
    std::vector<std::uint32_t> output;
};

/// One encoder step; values are reduced mod p.
StepResult encoder_step(const Realization& r, const std::vector<std::uint32_t>& state,
                        const std::vector<std::uint32_t>& input);

/// Fixed-width symbol stream over GF(p), one vector per time step.
struct SymbolStream {
    FieldSpec field;
    std::size_t width;
    std::vector<std::vector<std::uint32_t>> symbols;

    friend bool operator==(const SymbolStream& a, const SymbolStream& b) noexcept {
        return a.field == b.field && a.width == b.width && a.symbols == b.symbols;
    }
};

/// Runs the encoder from the zero state over the whole input stream.
SymbolStream encode(const Realization& r, const SymbolStream& input);

/// Exact truncated product u*G, one series per output column.
std::vector<TruncatedSeries> encode_series(const PolyMatrix& g, const std::vector<LaurentPoly>& u,
                                           int horizon);

/// Same for a matrix of causal rational entries; entries are series-expanded
/// far enough that all output coefficients below `horizon` are exact.
std::vector<TruncatedSeries> encode_series(const std::vector<std::vector<RationalFn>>& g,
                                           const std::vector<LaurentPoly>& u, int horizon);

}  // namespace convalg

#endif  // CONVALG_REALIZE_HPP
