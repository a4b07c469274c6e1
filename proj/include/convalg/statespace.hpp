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

#ifndef CONVALG_STATESPACE_HPP
#define CONVALG_STATESPACE_HPP

#include <optional>
#include <vector>

#include "polymat.hpp"
#include "rational.hpp"

namespace convalg {

/// The abstract state reached by an anticausal input u: the causal part of
/// u*G, a row of n causal polynomials. States of inputs that differ only in
/// their causal part coincide, so this represents the class of u.
struct StateVector {
    std::vector<Poly> components;

    bool is_zero() const;
    friend bool operator==(const StateVector& a, const StateVector& b) = default;
};

/// A k-row of Laurent polynomials supported entirely on negative exponents.
struct AnticausalInput {
    std::vector<LaurentPoly> components;

    explicit AnticausalInput(std::vector<LaurentPoly> comps);
    bool is_zero() const;
};

/// State of input u under G: the causal part of u*G. F-linear in u.
StateVector state_of(const AnticausalInput& u, const PolyMatrix& g);

/// Row product u*G for a Laurent row u.
std::vector<LaurentPoly> laurent_row_mul(const std::vector<LaurentPoly>& u, const PolyMatrix& g);

struct StateBasis {
    std::size_t dim = 0;
    std::vector<AnticausalInput> inputs;  // inputs whose states form a basis
    std::vector<StateVector> states;
};

/// Brute-force dimension of the space of reachable states: the rank over F of
/// the states of the inputs D^{-j} e_i, 1 <= j <= (degree of row i). By
/// linearity these span every reachable state, so this is an oracle for the
/// minimal encoder size of G that bypasses all degree theory.
StateBasis oracle_state_dim(const PolyMatrix& g);

struct CodeMembership {
    bool member = false;
    std::vector<RationalFn> coords;  // x with x*G = v, when member
};

/// Solves x*G = v over F(D) through the first invertible k-column submatrix
/// and verifies the remaining columns.
CodeMembership in_code(const std::vector<RationalFn>& v, const PolyMatrix& g);
CodeMembership in_code(const std::vector<LaurentPoly>& v, const PolyMatrix& g);

/// v lies in the code and so does its causal part.
bool in_cstar(const std::vector<LaurentPoly>& v, const PolyMatrix& g);

struct Theorem1Report {
    bool pass = false;
    std::size_t basis_size = 0;          // sum of Forney indices
    std::size_t combinations_checked = 0;
    std::size_t violations = 0;          // nonzero combinations found inside C*
    std::size_t oracle_dim = 0;
};

/// Checks that {D^{-j} g_i : j = 1..e_i} projects to a basis of the code
/// state space, for a canonical matrix: every nonzero F-combination must
/// stay outside C* (exhaustive enumeration, capped at 2^16 cases), and the
/// count must match the brute-force state dimension.
Theorem1Report verify_theorem1(const PolyMatrix& c_mat);

struct Theorem2Report {
    bool pass = false;
    std::size_t independence_rank = 0;
    std::size_t sum_row_degrees = 0;
    std::size_t oracle_dim = 0;
};

/// Checks that {D^{-j} e_i : j = 1..nu_i} projects to a basis of the encoding
/// state space, for a reduced matrix.
Theorem2Report verify_theorem2(const PolyMatrix& g);

struct Theorem3Report {
    bool pass = false;
    std::size_t independent_rank = 0;
    std::size_t intdeg = 0;
};

/// Checks that the rows t_i of the reducing transform T give an independent
/// set {D^{-j} t_i : j = 1..deg((TG) row i)} of states of G, of size intdeg G.
Theorem3Report verify_theorem3(const PolyMatrix& g);

struct StateSpaceReport {
    int intdeg = 0;
    int extdeg = 0;
    std::size_t oracle_dim = 0;    // minimal encoder size of G
    std::size_t code_degree = 0;   // sum of Forney indices
    std::vector<int> forney;
    bool minimal_encoding = false; // oracle_dim == code_degree
    std::optional<AnticausalInput> kernel_witness;  // nonzero state which is a codeword
    std::optional<StateVector> witness_state;
};

/// Minimality of the encoding: G is minimal iff only the zero state is a
/// codeword. When it is not, the report carries a concrete witness found by
/// exhaustive search over inputs supported on exponents -nu_i..-1 (throws
/// TooLargeToEnumerate past p^(sum nu) = 2^16).
StateSpaceReport minimality_report(const PolyMatrix& g);

/// Dimension of {reachable states that are codewords}, by the same
/// exhaustive search. Equals oracle_dim - code_degree.
std::size_t codeword_state_dim(const PolyMatrix& g);

}  // namespace convalg

#endif  // CONVALG_STATESPACE_HPP
