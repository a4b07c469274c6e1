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

#include "convalg/statespace.hpp"

#include <numeric>
#include <set>

namespace convalg {

namespace {

constexpr std::uint64_t kEnumerationCap = 1u << 16;

// Incremental Gaussian elimination over GF(p); tracks the rank of the rows
// inserted so far.
class EchelonBasis {
   public:
    EchelonBasis(FieldSpec field, std::size_t width) : field_(field), width_(width) {}

    std::size_t rank() const noexcept { return rows_.size(); }

    // Returns true when the vector enlarged the span.
    bool insert(std::vector<std::uint32_t> w) {
        const std::uint32_t p = field_.modulus();
        for (std::size_t t = 0; t < rows_.size(); ++t) {
            const std::uint32_t c = w[pivots_[t]];
            if (c == 0) continue;
            for (std::size_t j = 0; j < width_; ++j)
                w[j] = gf::sub(w[j], gf::mul(c, rows_[t][j], p), p);
        }
        std::size_t piv = width_;
        for (std::size_t j = 0; j < width_; ++j)
            if (w[j] != 0) {
                piv = j;
                break;
            }
        if (piv == width_) return false;
        const std::uint32_t s = gf::inv(w[piv], p);
        for (std::size_t j = 0; j < width_; ++j) w[j] = gf::mul(w[j], s, p);
        rows_.push_back(std::move(w));
        pivots_.push_back(piv);
        return true;
    }

   private:
    FieldSpec field_;
    std::size_t width_;
    std::vector<std::vector<std::uint32_t>> rows_;
    std::vector<std::size_t> pivots_;
};

std::vector<LaurentPoly> poly_row_to_laurent(const std::vector<Poly>& r) {
    std::vector<LaurentPoly> out;
    out.reserve(r.size());
    for (const auto& p : r) out.emplace_back(p);
    return out;
}

std::vector<LaurentPoly> row_shifted(const std::vector<LaurentPoly>& r, int s) {
    std::vector<LaurentPoly> out;
    out.reserve(r.size());
    for (const auto& x : r) out.push_back(x.shifted(s));
    return out;
}

void row_add_scaled(std::vector<LaurentPoly>& acc, const std::vector<LaurentPoly>& r, FieldElem c) {
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] = acc[i] + r[i].scaled(c);
}

std::vector<LaurentPoly> row_causal_part(const std::vector<LaurentPoly>& r) {
    std::vector<LaurentPoly> out;
    out.reserve(r.size());
    for (const auto& x : r) out.push_back(x.causal_part());
    return out;
}

// Coefficient stacking for exact rank computations: every state component of
// a k x n matrix with max entry degree B has degree < B.
std::vector<std::uint32_t> stack_state(const StateVector& s, int bound) {
    std::vector<std::uint32_t> v;
    v.reserve(s.components.size() * static_cast<std::size_t>(bound));
    for (const auto& c : s.components)
        for (int d = 0; d < bound; ++d) v.push_back(c.coeff(d));
    return v;
}

std::uint64_t checked_pow(std::uint64_t base, std::size_t e, const char* what) {
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < e; ++i) {
        r *= base;
        if (r > kEnumerationCap)
            throw TooLargeToEnumerate(std::string(what) + ": search space exceeds 2^16 cases");
    }
    return r;
}

struct LatticeCell {
    std::size_t row;
    int shift;  // j in D^{-j}
};

std::vector<LatticeCell> support_lattice(const std::vector<int>& row_degrees) {
    std::vector<LatticeCell> cells;
    for (std::size_t i = 0; i < row_degrees.size(); ++i)
        for (int j = 1; j <= row_degrees[i]; ++j) cells.push_back({i, j});
    return cells;
}

PolyMatrix adjugate(const PolyMatrix& m) {
    const std::size_t s = m.rows();
    const FieldSpec f = m.field();
    PolyMatrix adj(f, s, s);
    if (s == 1) {
        adj.set(0, 0, Poly::one(f));
        return adj;
    }
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < s; ++j) {
            std::vector<std::size_t> rows, cols;
            for (std::size_t t = 0; t < s; ++t) {
                if (t != j) rows.push_back(t);
                if (t != i) cols.push_back(t);
            }
            Poly c = determinant(m.submatrix(rows, cols));
            if ((i + j) % 2 != 0) c = -c;
            adj.set(i, j, std::move(c));
        }
    return adj;
}

// Code-membership solver with the pivot columns, adjugate and determinant of
// the first invertible k-column submatrix cached, so that repeated membership
// tests (enumeration loops) stay in Laurent arithmetic: x G = v is checked
// cross-multiplied as (v_J adj) G = det * v.
class ColumnSolver {
   public:
    explicit ColumnSolver(const PolyMatrix& g) : g_(g), adj_(g.field(), 0, 0), det_(g.field()) {
        const std::size_t k = g.rows(), n = g.cols();
        if (k > n) throw RankDeficient("in_code: more rows than columns");
        std::vector<std::size_t> all_rows(k);
        std::iota(all_rows.begin(), all_rows.end(), std::size_t{0});
        std::vector<std::size_t> cols(k);
        std::iota(cols.begin(), cols.end(), std::size_t{0});
        for (;;) {
            const PolyMatrix sub = g.submatrix(all_rows, cols);
            det_ = determinant(sub);
            if (!det_.is_zero()) {
                adj_ = adjugate(sub);
                cols_ = cols;
                return;
            }
            bool more = false;
            for (std::size_t i = k; i-- > 0;) {
                if (cols[i] < n - k + i) {
                    ++cols[i];
                    for (std::size_t t = i + 1; t < k; ++t) cols[t] = cols[t - 1] + 1;
                    more = true;
                    break;
                }
            }
            if (!more) throw RankDeficient("in_code: matrix does not have full row rank");
        }
    }

    const std::vector<std::size_t>& cols() const noexcept { return cols_; }
    const PolyMatrix& adj() const noexcept { return adj_; }
    const Poly& det() const noexcept { return det_; }

    // numerators of the solution: x = w / det
    std::vector<LaurentPoly> numerators(const std::vector<LaurentPoly>& v) const {
        const std::size_t k = g_.rows();
        std::vector<LaurentPoly> w;
        w.reserve(k);
        for (std::size_t t = 0; t < k; ++t) {
            LaurentPoly acc(g_.field());
            for (std::size_t i = 0; i < k; ++i)
                acc = acc + v[cols_[i]] * LaurentPoly(adj_.at(i, t));
            w.push_back(std::move(acc));
        }
        return w;
    }

    bool member(const std::vector<LaurentPoly>& v) const {
        if (v.size() != g_.cols()) throw DimensionMismatch("in_code: row length mismatch");
        const std::vector<LaurentPoly> w = numerators(v);
        const LaurentPoly det_l{det_};
        for (std::size_t j = 0; j < g_.cols(); ++j) {
            LaurentPoly lhs(g_.field());
            for (std::size_t t = 0; t < g_.rows(); ++t)
                lhs = lhs + w[t] * LaurentPoly(g_.at(t, j));
            if (lhs != det_l * v[j]) return false;
        }
        return true;
    }

    std::vector<RationalFn> coords(const std::vector<LaurentPoly>& v) const {
        const RationalFn det_r{det_};
        std::vector<RationalFn> x;
        for (const auto& w : numerators(v)) x.push_back(RationalFn::from_laurent(w) / det_r);
        return x;
    }

   private:
    PolyMatrix g_;
    std::vector<std::size_t> cols_;
    PolyMatrix adj_;
    Poly det_;
};

}  // namespace

bool StateVector::is_zero() const {
    for (const auto& c : components)
        if (!c.is_zero()) return false;
    return true;
}

AnticausalInput::AnticausalInput(std::vector<LaurentPoly> comps) : components(std::move(comps)) {
    for (const auto& c : components)
        if (!c.is_anticausal() && !c.is_zero())
            throw std::logic_error("AnticausalInput: component has causal terms");
}

bool AnticausalInput::is_zero() const {
    for (const auto& c : components)
        if (!c.is_zero()) return false;
    return true;
}

std::vector<LaurentPoly> laurent_row_mul(const std::vector<LaurentPoly>& u, const PolyMatrix& g) {
    if (u.size() != g.rows()) throw DimensionMismatch("row-matrix product length mismatch");
    std::vector<LaurentPoly> out;
    out.reserve(g.cols());
    for (std::size_t j = 0; j < g.cols(); ++j) {
        LaurentPoly acc(g.field());
        for (std::size_t i = 0; i < g.rows(); ++i) acc = acc + u[i] * LaurentPoly(g.at(i, j));
        out.push_back(std::move(acc));
    }
    return out;
}

StateVector state_of(const AnticausalInput& u, const PolyMatrix& g) {
    const auto prod = laurent_row_mul(u.components, g);
    StateVector s;
    s.components.reserve(prod.size());
    for (const auto& x : prod) s.components.push_back(x.causal_part().as_poly());
    return s;
}

StateBasis oracle_state_dim(const PolyMatrix& g) {
    const std::size_t k = g.rows();
    const FieldSpec f = g.field();
    if (rank_rational(g) != k)
        throw RankDeficient("oracle_state_dim: matrix does not have full row rank");

    const int bound = std::max(0, g.max_degree().finite());
    EchelonBasis basis(f, g.cols() * static_cast<std::size_t>(bound));
    StateBasis out;
    for (std::size_t i = 0; i < k; ++i) {
        const int nu = g.row_degree(i).finite();
        for (int j = 1; j <= nu; ++j) {
            std::vector<LaurentPoly> comps(k, LaurentPoly(f));
            comps[i] = LaurentPoly::monomial(f, -j);
            AnticausalInput u(std::move(comps));
            StateVector s = state_of(u, g);
            if (basis.insert(stack_state(s, bound))) {
                out.inputs.push_back(std::move(u));
                out.states.push_back(std::move(s));
            }
        }
    }
    out.dim = basis.rank();
    return out;
}

CodeMembership in_code(const std::vector<RationalFn>& v, const PolyMatrix& g) {
    const std::size_t k = g.rows(), n = g.cols();
    if (v.size() != n) throw DimensionMismatch("in_code: row length mismatch");

    // full rational route: solve through the cached column set, then verify
    // every column over F(D)
    const ColumnSolver solver(g);
    const RationalFn det_r{solver.det()};
    std::vector<RationalFn> x;
    x.reserve(k);
    for (std::size_t t = 0; t < k; ++t) {
        RationalFn acc = RationalFn::zero(g.field());
        for (std::size_t i = 0; i < k; ++i)
            acc = acc + v[solver.cols()[i]] * RationalFn(solver.adj().at(i, t));
        x.push_back(acc / det_r);
    }

    for (std::size_t j = 0; j < n; ++j) {
        RationalFn acc = RationalFn::zero(g.field());
        for (std::size_t t = 0; t < k; ++t) acc = acc + x[t] * RationalFn(g.at(t, j));
        if (acc != v[j]) return {false, {}};
    }
    return {true, std::move(x)};
}

CodeMembership in_code(const std::vector<LaurentPoly>& v, const PolyMatrix& g) {
    const ColumnSolver solver(g);
    if (v.size() != g.cols()) throw DimensionMismatch("in_code: row length mismatch");
    if (!solver.member(v)) return {false, {}};
    return {true, solver.coords(v)};
}

bool in_cstar(const std::vector<LaurentPoly>& v, const PolyMatrix& g) {
    const ColumnSolver solver(g);
    return solver.member(v) && solver.member(row_causal_part(v));
}

Theorem1Report verify_theorem1(const PolyMatrix& c_mat) {
    const DegreeProfile prof = degree_profile(c_mat);
    if (!prof.canonical) throw NotCanonical("verify_theorem1: matrix is not canonical");
    const FieldSpec f = c_mat.field();
    const std::uint64_t p = f.modulus();

    const auto cells = support_lattice(prof.row_degrees);
    Theorem1Report rep;
    rep.basis_size = cells.size();
    rep.oracle_dim = oracle_state_dim(c_mat).dim;

    // candidate basis rows D^{-j} g_i of the code state space
    std::vector<std::vector<LaurentPoly>> basis_rows;
    for (const auto& cell : cells)
        basis_rows.push_back(row_shifted(poly_row_to_laurent(c_mat.row(cell.row)), -cell.shift));

    const ColumnSolver solver(c_mat);
    const std::uint64_t total = checked_pow(p, cells.size(), "verify_theorem1");
    for (std::uint64_t c = 1; c < total; ++c) {
        std::vector<LaurentPoly> v(c_mat.cols(), LaurentPoly(f));
        std::uint64_t rest = c;
        for (std::size_t t = 0; t < cells.size(); ++t) {
            const std::uint32_t digit = static_cast<std::uint32_t>(rest % p);
            rest /= p;
            if (digit != 0) row_add_scaled(v, basis_rows[t], FieldElem(digit, f));
        }
        ++rep.combinations_checked;
        if (solver.member(v) && solver.member(row_causal_part(v))) ++rep.violations;
    }
    rep.pass = rep.violations == 0 && rep.basis_size == rep.oracle_dim;
    return rep;
}

Theorem2Report verify_theorem2(const PolyMatrix& g) {
    const DegreeProfile prof = degree_profile(g);
    if (!prof.reduced) throw NotReduced("verify_theorem2: matrix is not reduced");

    Theorem2Report rep;
    rep.sum_row_degrees = static_cast<std::size_t>(prof.extdeg);

    const FieldSpec f = g.field();
    const int bound = std::max(0, g.max_degree().finite());
    EchelonBasis basis(f, g.cols() * static_cast<std::size_t>(bound));
    for (const auto& cell : support_lattice(prof.row_degrees)) {
        std::vector<LaurentPoly> comps(g.rows(), LaurentPoly(f));
        comps[cell.row] = LaurentPoly::monomial(f, -cell.shift);
        basis.insert(stack_state(state_of(AnticausalInput(std::move(comps)), g), bound));
    }
    rep.independence_rank = basis.rank();
    rep.oracle_dim = oracle_state_dim(g).dim;
    rep.pass = rep.independence_rank == rep.sum_row_degrees && rep.oracle_dim == rep.sum_row_degrees;
    return rep;
}

Theorem3Report verify_theorem3(const PolyMatrix& g) {
    const DegreeProfile prof = degree_profile(g);
    const ReduceResult rr = reduce(g);
    const FieldSpec f = g.field();

    Theorem3Report rep;
    rep.intdeg = static_cast<std::size_t>(prof.intdeg);

    const int bound = std::max(0, g.max_degree().finite());
    EchelonBasis basis(f, g.cols() * static_cast<std::size_t>(bound));
    for (std::size_t i = 0; i < g.rows(); ++i) {
        const int nu = rr.reduced.row_degree(i).finite();
        const auto t_row = poly_row_to_laurent(rr.cert.T().row(i));
        for (int j = 1; j <= nu; ++j) {
            std::vector<LaurentPoly> comps;
            comps.reserve(g.rows());
            for (const auto& x : row_shifted(t_row, -j)) comps.push_back(x.anticausal_part());
            basis.insert(stack_state(state_of(AnticausalInput(std::move(comps)), g), bound));
        }
    }
    rep.independent_rank = basis.rank();
    rep.pass = rep.independent_rank == rep.intdeg;
    return rep;
}

StateSpaceReport minimality_report(const PolyMatrix& g) {
    const DegreeProfile prof = degree_profile(g);
    const CanonicalResult canon = canonicalize(g);
    const StateBasis oracle = oracle_state_dim(g);

    StateSpaceReport rep;
    rep.intdeg = prof.intdeg;
    rep.extdeg = prof.extdeg;
    rep.oracle_dim = oracle.dim;
    rep.forney = canon.forney;
    rep.code_degree = static_cast<std::size_t>(
        std::accumulate(canon.forney.begin(), canon.forney.end(), 0));
    rep.minimal_encoding = rep.oracle_dim == rep.code_degree;
    if (rep.minimal_encoding) return rep;

    // Non-minimal: exhibit a nonzero state that is a codeword. Every state is
    // reached from an input supported on exponents -nu_i..-1, so exhaustive
    // search over that lattice is complete.
    const FieldSpec f = g.field();
    const std::uint64_t p = f.modulus();
    const auto cells = support_lattice(prof.row_degrees);
    const std::uint64_t total = checked_pow(p, cells.size(), "minimality witness search");
    const int bound = std::max(0, g.max_degree().finite());
    const ColumnSolver solver(g);
    std::set<std::vector<std::uint32_t>> tested;
    for (std::uint64_t c = 1; c < total; ++c) {
        std::vector<LaurentPoly> comps(g.rows(), LaurentPoly(f));
        std::uint64_t rest = c;
        for (std::size_t t = 0; t < cells.size(); ++t) {
            const std::uint32_t digit = static_cast<std::uint32_t>(rest % p);
            rest /= p;
            if (digit != 0)
                comps[cells[t].row] =
                    comps[cells[t].row] + LaurentPoly::monomial(f, -cells[t].shift, digit);
        }
        AnticausalInput u(std::move(comps));
        StateVector s = state_of(u, g);
        if (s.is_zero()) continue;
        if (!tested.insert(stack_state(s, bound)).second) continue;
        if (solver.member(poly_row_to_laurent(s.components))) {
            rep.kernel_witness = std::move(u);
            rep.witness_state = std::move(s);
            return rep;
        }
    }
    throw std::logic_error("minimality_report: non-minimal but no witness found");
}

std::size_t codeword_state_dim(const PolyMatrix& g) {
    const StateBasis oracle = oracle_state_dim(g);
    const FieldSpec f = g.field();
    const std::uint64_t p = f.modulus();
    const std::uint64_t total = checked_pow(p, oracle.dim, "codeword_state_dim");
    const int bound = std::max(0, g.max_degree().finite());
    const ColumnSolver solver(g);

    EchelonBasis hits(f, g.cols() * static_cast<std::size_t>(bound));
    for (std::uint64_t c = 1; c < total; ++c) {
        std::vector<Poly> comps(g.cols(), Poly(f));
        std::uint64_t rest = c;
        for (std::size_t t = 0; t < oracle.dim; ++t) {
            const std::uint32_t digit = static_cast<std::uint32_t>(rest % p);
            rest /= p;
            if (digit == 0) continue;
            const FieldElem d(digit, f);
            for (std::size_t j = 0; j < comps.size(); ++j)
                comps[j] = comps[j] + oracle.states[t].components[j].scaled(d);
        }
        StateVector s{std::move(comps)};
        if (s.is_zero()) continue;  // cannot happen: basis states are independent
        if (solver.member(poly_row_to_laurent(s.components))) hits.insert(stack_state(s, bound));
    }
    return hits.rank();
}

}  // namespace convalg
