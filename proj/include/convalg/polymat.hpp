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

#ifndef CONVALG_POLYMAT_HPP
#define CONVALG_POLYMAT_HPP

#include <cstddef>
#include <vector>

#include "fmatrix.hpp"
#include "laurent.hpp"
#include "poly.hpp"

namespace convalg {

/// k x n matrix over F[D].
class PolyMatrix {
   public:
    PolyMatrix(FieldSpec field, std::size_t k, std::size_t n)
        : field_(field), k_(k), n_(n), entries_(k * n, Poly(field)) {}

    static PolyMatrix identity(FieldSpec field, std::size_t k);

    FieldSpec field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return k_; }
    std::size_t cols() const noexcept { return n_; }

    const Poly& at(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
    void set(std::size_t i, std::size_t j, Poly p);

    std::vector<Poly> row(std::size_t i) const;
    ExtInt row_degree(std::size_t i) const;  // max entry degree; -inf for a zero row
    ExtInt max_degree() const;

    PolyMatrix operator*(const PolyMatrix& o) const;
    PolyMatrix operator+(const PolyMatrix& o) const;
    PolyMatrix transpose() const;
    PolyMatrix submatrix(const std::vector<std::size_t>& rows,
                         const std::vector<std::size_t>& cols) const;

    // In-place elementary operations (all unimodular).
    void row_swap(std::size_t a, std::size_t b);
    void row_axpy(std::size_t dst, std::size_t src, const Poly& q);  // row_dst += q * row_src
    void row_scale(std::size_t i, FieldElem c);
    void col_swap(std::size_t a, std::size_t b);
    void col_axpy(std::size_t dst, std::size_t src, const Poly& q);  // col_dst += q * col_src
    void col_scale(std::size_t j, FieldElem c);

    /// Coefficient matrix of D^d.
    FMatrix coeff_matrix(int d) const;
    /// Row-leading coefficient matrix: entry (i,j) is the coefficient of
    /// D^{deg row_i} in entry (i,j). Rows must be nonzero.
    FMatrix leading_row_matrix() const;

    friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) noexcept {
        return a.field_ == b.field_ && a.k_ == b.k_ && a.n_ == b.n_ && a.entries_ == b.entries_;
    }
    friend bool operator!=(const PolyMatrix& a, const PolyMatrix& b) noexcept { return !(a == b); }

   private:
    FieldSpec field_;
    std::size_t k_, n_;
    std::vector<Poly> entries_;
};

/// Determinant of a square matrix, by fraction-free (Bareiss) elimination.
Poly determinant(const PolyMatrix& m);

/// Rank over the fraction field F(D), by fraction-free elimination.
std::size_t rank_rational(const PolyMatrix& g);

/// A unimodular matrix together with its witnesses: constant nonzero
/// determinant and exact polynomial inverse. Validated at construction.
class UnimodularCert {
   public:
    UnimodularCert(PolyMatrix t, PolyMatrix t_inv);

    const PolyMatrix& T() const noexcept { return t_; }
    const PolyMatrix& Tinv() const noexcept { return t_inv_; }
    const Poly& det() const noexcept { return det_; }

   private:
    PolyMatrix t_, t_inv_;
    Poly det_;
};

struct DegreeProfile {
    std::vector<int> row_degrees;
    int extdeg = 0;  // sum of row degrees
    int intdeg = 0;  // max degree over all k x k minors
    bool reduced = false;
    bool basic = false;
    bool canonical = false;
};

/// Degree/normal-form profile. Requires full row rank (throws RankDeficient).
DegreeProfile degree_profile(const PolyMatrix& g);

struct PredictableDegreeResult {
    bool holds = false;
    ExtInt lhs = ExtInt::neg_inf();  // deg(u G)
    ExtInt rhs = ExtInt::neg_inf();  // max_i deg(u_i) + deg(row_i)
};

/// Tests deg(uG) = max_i deg(u_i g_i) for one input row u.
PredictableDegreeResult predictable_degree_check(const PolyMatrix& g,
                                                 const std::vector<LaurentPoly>& u);

struct ReduceResult {
    UnimodularCert cert;  // R = T * G
    PolyMatrix reduced;
};

/// Row reduction: finds unimodular T with T*G reduced, by repeatedly killing
/// an F-linear dependency among the row-leading coefficients. The external
/// degree strictly drops each round, so this terminates with
/// extdeg(TG) = intdeg(G).
ReduceResult reduce(const PolyMatrix& g);

struct SmithForm {
    UnimodularCert U;  // k x k
    UnimodularCert V;  // n x n
    std::vector<Poly> invariant_factors;  // monic, each divides the next; U G V = [diag | 0]
};

/// Smith normal form over F[D]. Works for any shape and rank; a rank
/// deficiency shows up as missing (zero) invariant factors.
SmithForm smith_form(const PolyMatrix& g);

/// Polynomial right inverse G' with G G' = I. Requires all invariant factors
/// to be 1 (throws NotBasic otherwise).
PolyMatrix right_inverse(const PolyMatrix& g);

struct CanonicalResult {
    PolyMatrix canonical;
    std::vector<int> forney;  // ascending row degrees of the canonical matrix
};

/// Canonical (basic and reduced) generating matrix of the code generated by
/// g, plus its Forney indices. Requires full row rank.
CanonicalResult canonicalize(const PolyMatrix& g);

}  // namespace convalg

#endif  // CONVALG_POLYMAT_HPP
