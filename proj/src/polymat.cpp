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

#include "convalg/polymat.hpp"

#include <algorithm>
#include <numeric>

namespace convalg {

namespace {

void require_same_field(FieldSpec a, FieldSpec b, const char* op) {
    if (a != b) throw MixedFields(std::string(op) + ": operands from different fields");
}

// Degree as plain int for a nonzero polynomial.
int fdeg(const Poly& p) { return static_cast<int>(p.size()) - 1; }

bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
    const std::size_t k = c.size();
    for (std::size_t i = k; i-- > 0;) {
        if (c[i] < n - k + i) {
            ++c[i];
            for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace

PolyMatrix PolyMatrix::identity(FieldSpec field, std::size_t k) {
    PolyMatrix m(field, k, k);
    for (std::size_t i = 0; i < k; ++i) m.set(i, i, Poly::one(field));
    return m;
}

void PolyMatrix::set(std::size_t i, std::size_t j, Poly p) {
    require_same_field(field_, p.field(), "matrix entry");
    entries_[i * n_ + j] = std::move(p);
}

std::vector<Poly> PolyMatrix::row(std::size_t i) const {
    return std::vector<Poly>(entries_.begin() + static_cast<std::ptrdiff_t>(i * n_),
                             entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * n_));
}

ExtInt PolyMatrix::row_degree(std::size_t i) const {
    ExtInt d = ExtInt::neg_inf();
    for (std::size_t j = 0; j < n_; ++j) d = max(d, at(i, j).degree());
    return d;
}

ExtInt PolyMatrix::max_degree() const {
    ExtInt d = ExtInt::neg_inf();
    for (std::size_t i = 0; i < k_; ++i) d = max(d, row_degree(i));
    return d;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
    require_same_field(field_, o.field_, "matrix product");
    if (n_ != o.k_) throw DimensionMismatch("matrix product shape mismatch");
    PolyMatrix r(field_, k_, o.n_);
    for (std::size_t i = 0; i < k_; ++i)
        for (std::size_t j = 0; j < o.n_; ++j) {
            Poly acc(field_);
            for (std::size_t t = 0; t < n_; ++t) acc = acc + at(i, t) * o.at(t, j);
            r.set(i, j, std::move(acc));
        }
    return r;
}

PolyMatrix PolyMatrix::operator+(const PolyMatrix& o) const {
    require_same_field(field_, o.field_, "matrix sum");
    if (k_ != o.k_ || n_ != o.n_) throw DimensionMismatch("matrix sum shape mismatch");
    PolyMatrix r(field_, k_, n_);
    for (std::size_t i = 0; i < k_; ++i)
        for (std::size_t j = 0; j < n_; ++j) r.set(i, j, at(i, j) + o.at(i, j));
    return r;
}

PolyMatrix PolyMatrix::transpose() const {
    PolyMatrix r(field_, n_, k_);
    for (std::size_t i = 0; i < k_; ++i)
        for (std::size_t j = 0; j < n_; ++j) r.set(j, i, at(i, j));
    return r;
}

PolyMatrix PolyMatrix::submatrix(const std::vector<std::size_t>& rows,
                                 const std::vector<std::size_t>& cols) const {
    PolyMatrix r(field_, rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) r.set(i, j, at(rows[i], cols[j]));
    return r;
}

void PolyMatrix::row_swap(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < n_; ++j) std::swap(entries_[a * n_ + j], entries_[b * n_ + j]);
}

void PolyMatrix::row_axpy(std::size_t dst, std::size_t src, const Poly& q) {
    for (std::size_t j = 0; j < n_; ++j)
        entries_[dst * n_ + j] = entries_[dst * n_ + j] + q * entries_[src * n_ + j];
}

void PolyMatrix::row_scale(std::size_t i, FieldElem c) {
    for (std::size_t j = 0; j < n_; ++j) entries_[i * n_ + j] = entries_[i * n_ + j].scaled(c);
}

void PolyMatrix::col_swap(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < k_; ++i) std::swap(entries_[i * n_ + a], entries_[i * n_ + b]);
}

void PolyMatrix::col_axpy(std::size_t dst, std::size_t src, const Poly& q) {
    for (std::size_t i = 0; i < k_; ++i)
        entries_[i * n_ + dst] = entries_[i * n_ + dst] + q * entries_[i * n_ + src];
}

void PolyMatrix::col_scale(std::size_t j, FieldElem c) {
    for (std::size_t i = 0; i < k_; ++i) entries_[i * n_ + j] = entries_[i * n_ + j].scaled(c);
}

FMatrix PolyMatrix::coeff_matrix(int d) const {
    FMatrix r(field_, k_, n_);
    for (std::size_t i = 0; i < k_; ++i)
        for (std::size_t j = 0; j < n_; ++j) r.set(i, j, at(i, j).coeff(d));
    return r;
}

FMatrix PolyMatrix::leading_row_matrix() const {
    FMatrix r(field_, k_, n_);
    for (std::size_t i = 0; i < k_; ++i) {
        const ExtInt d = row_degree(i);
        if (!d.is_finite()) throw std::logic_error("leading_row_matrix: zero row");
        for (std::size_t j = 0; j < n_; ++j) r.set(i, j, at(i, j).coeff(d.finite()));
    }
    return r;
}

Poly determinant(const PolyMatrix& m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    const FieldSpec f = m.field();
    PolyMatrix a(m);
    Poly prev = Poly::one(f);
    bool negate = false;
    for (std::size_t t = 0; t < n; ++t) {
        // pivot: nonzero entry of minimal degree in column t, rows >= t
        std::size_t piv = n;
        for (std::size_t i = t; i < n; ++i) {
            if (a.at(i, t).is_zero()) continue;
            if (piv == n || fdeg(a.at(i, t)) < fdeg(a.at(piv, t))) piv = i;
        }
        if (piv == n) return Poly(f);
        if (piv != t) {
            a.row_swap(t, piv);
            negate = !negate;
        }
        for (std::size_t i = t + 1; i < n; ++i) {
            for (std::size_t j = t + 1; j < n; ++j)
                a.set(i, j, exact_div(a.at(t, t) * a.at(i, j) - a.at(i, t) * a.at(t, j), prev));
            a.set(i, t, Poly(f));
        }
        prev = a.at(t, t);
    }
    Poly d = a.at(n - 1, n - 1);
    return negate ? -d : d;
}

std::size_t rank_rational(const PolyMatrix& g) {
    const std::size_t k = g.rows(), n = g.cols();
    const FieldSpec f = g.field();
    PolyMatrix a(g);
    Poly prev = Poly::one(f);
    std::size_t r = 0;
    for (std::size_t col = 0; col < n && r < k; ++col) {
        std::size_t piv = k;
        for (std::size_t i = r; i < k; ++i) {
            if (a.at(i, col).is_zero()) continue;
            if (piv == k || fdeg(a.at(i, col)) < fdeg(a.at(piv, col))) piv = i;
        }
        if (piv == k) continue;
        a.row_swap(r, piv);
        for (std::size_t i = r + 1; i < k; ++i) {
            for (std::size_t j = col + 1; j < n; ++j)
                a.set(i, j, exact_div(a.at(r, col) * a.at(i, j) - a.at(i, col) * a.at(r, j), prev));
            a.set(i, col, Poly(f));
        }
        prev = a.at(r, col);
        ++r;
    }
    return r;
}

UnimodularCert::UnimodularCert(PolyMatrix t, PolyMatrix t_inv)
    : t_(std::move(t)), t_inv_(std::move(t_inv)), det_(determinant(t_)) {
    if (det_.is_zero() || !det_.is_constant())
        throw std::logic_error("UnimodularCert: determinant is not a nonzero constant");
    if (t_ * t_inv_ != PolyMatrix::identity(t_.field(), t_.rows()))
        throw std::logic_error("UnimodularCert: inverse witness fails");
}

DegreeProfile degree_profile(const PolyMatrix& g) {
    const std::size_t k = g.rows(), n = g.cols();
    if (rank_rational(g) != k)
        throw RankDeficient("degree_profile: matrix does not have full row rank");

    DegreeProfile prof;
    for (std::size_t i = 0; i < k; ++i) prof.row_degrees.push_back(g.row_degree(i).finite());
    prof.extdeg = std::accumulate(prof.row_degrees.begin(), prof.row_degrees.end(), 0);

    // internal degree: max degree over the k x k minors
    std::vector<std::size_t> cols(k);
    std::iota(cols.begin(), cols.end(), std::size_t{0});
    std::vector<std::size_t> all_rows(k);
    std::iota(all_rows.begin(), all_rows.end(), std::size_t{0});
    ExtInt intdeg = ExtInt::neg_inf();
    do {
        intdeg = max(intdeg, determinant(g.submatrix(all_rows, cols)).degree());
    } while (next_combination(cols, n));
    prof.intdeg = intdeg.finite();

    prof.reduced = g.leading_row_matrix().rank() == k;
    const SmithForm sf = smith_form(g);
    prof.basic = sf.invariant_factors.size() == k &&
                 std::all_of(sf.invariant_factors.begin(), sf.invariant_factors.end(),
                             [](const Poly& p) { return p.is_one(); });
    prof.canonical = prof.reduced && prof.basic;
    return prof;
}

PredictableDegreeResult predictable_degree_check(const PolyMatrix& g,
                                                 const std::vector<LaurentPoly>& u) {
    const std::size_t k = g.rows(), n = g.cols();
    if (u.size() != k) throw DimensionMismatch("predictable_degree_check: input row length");

    PredictableDegreeResult res;
    for (std::size_t j = 0; j < n; ++j) {
        LaurentPoly acc(g.field());
        for (std::size_t i = 0; i < k; ++i) acc = acc + u[i] * LaurentPoly(g.at(i, j));
        res.lhs = max(res.lhs, acc.degree());
    }
    for (std::size_t i = 0; i < k; ++i) {
        if (u[i].is_zero()) continue;
        res.rhs = max(res.rhs, u[i].degree() + g.row_degree(i));
    }
    res.holds = res.lhs == res.rhs;
    return res;
}

ReduceResult reduce(const PolyMatrix& g) {
    const std::size_t k = g.rows();
    const FieldSpec f = g.field();
    if (rank_rational(g) != k) throw RankDeficient("reduce: matrix does not have full row rank");

    PolyMatrix r(g);
    PolyMatrix t = PolyMatrix::identity(f, k);
    PolyMatrix tinv = PolyMatrix::identity(f, k);

    int guard = 0;
    for (;;) {
        const auto deps = r.leading_row_matrix().transpose().nullspace();
        if (deps.empty()) break;
        const auto& c = deps.front();

        // target: participating row of maximal degree, lowest index on ties
        std::size_t target = k;
        for (std::size_t i = 0; i < k; ++i) {
            if (c[i] == 0) continue;
            if (target == k || r.row_degree(i) > r.row_degree(target)) target = i;
        }
        const int nu_t = r.row_degree(target).finite();
        const FieldElem ct_inv = FieldElem(c[target], f).inv();
        for (std::size_t i = 0; i < k; ++i) {
            if (i == target || c[i] == 0) continue;
            const FieldElem q = FieldElem(c[i], f) * ct_inv;
            const int shift = nu_t - r.row_degree(i).finite();
            const Poly qp = Poly::monomial(f, shift, q.value());
            r.row_axpy(target, i, qp);
            t.row_axpy(target, i, qp);
            tinv.col_axpy(i, target, -qp);
        }
        if (++guard > g.max_degree().finite() * static_cast<int>(k) + static_cast<int>(k) + 1)
            throw std::logic_error("reduce: no progress");  // unreachable if degrees drop
    }
    return {UnimodularCert(std::move(t), std::move(tinv)), std::move(r)};
}

namespace {

// Bookkeeping for simultaneous elementary operations on M = U G V and the
// unimodularity witnesses of U and V.
struct SmithWork {
    PolyMatrix m, u, uinv, v, vinv;

    void row_swap(std::size_t a, std::size_t b) {
        m.row_swap(a, b);
        u.row_swap(a, b);
        uinv.col_swap(a, b);
    }
    void row_axpy(std::size_t dst, std::size_t src, const Poly& q) {
        m.row_axpy(dst, src, q);
        u.row_axpy(dst, src, q);
        uinv.col_axpy(src, dst, -q);
    }
    void row_scale(std::size_t i, FieldElem c) {
        m.row_scale(i, c);
        u.row_scale(i, c);
        uinv.col_scale(i, c.inv());
    }
    void col_swap(std::size_t a, std::size_t b) {
        m.col_swap(a, b);
        v.col_swap(a, b);
        vinv.row_swap(a, b);
    }
    void col_axpy(std::size_t dst, std::size_t src, const Poly& q) {
        m.col_axpy(dst, src, q);
        v.col_axpy(dst, src, q);
        vinv.row_axpy(src, dst, -q);
    }
};

}  // namespace

SmithForm smith_form(const PolyMatrix& g) {
    const std::size_t k = g.rows(), n = g.cols();
    const FieldSpec f = g.field();
    SmithWork w{g, PolyMatrix::identity(f, k), PolyMatrix::identity(f, k),
                PolyMatrix::identity(f, n), PolyMatrix::identity(f, n)};

    const std::size_t steps = std::min(k, n);
    std::size_t done = steps;
    for (std::size_t t = 0; t < steps; ++t) {
        int guard = 0;
        bool empty = false;
        for (;;) {
            if (++guard > 10000) throw std::logic_error("smith_form: no progress");
            // pivot: nonzero entry of minimal degree in the trailing block,
            // ties broken lexicographically
            std::size_t pi = k, pj = n;
            for (std::size_t i = t; i < k; ++i)
                for (std::size_t j = t; j < n; ++j) {
                    if (w.m.at(i, j).is_zero()) continue;
                    if (pi == k || fdeg(w.m.at(i, j)) < fdeg(w.m.at(pi, pj))) {
                        pi = i;
                        pj = j;
                    }
                }
            if (pi == k) {
                empty = true;
                break;
            }
            w.row_swap(t, pi);
            w.col_swap(t, pj);

            bool dirty = false;
            for (std::size_t i = t + 1; i < k; ++i) {
                if (w.m.at(i, t).is_zero()) continue;
                const PolyDivMod qr = divmod(w.m.at(i, t), w.m.at(t, t));
                w.row_axpy(i, t, -qr.quotient);
                if (!qr.remainder.is_zero()) dirty = true;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (w.m.at(t, j).is_zero()) continue;
                const PolyDivMod qr = divmod(w.m.at(t, j), w.m.at(t, t));
                w.col_axpy(j, t, -qr.quotient);
                if (!qr.remainder.is_zero()) dirty = true;
            }
            if (dirty) continue;

            // force the divisibility chain: drag any entry the pivot does not
            // divide into row t and reduce again
            bool fixed = true;
            for (std::size_t i = t + 1; i < k && fixed; ++i)
                for (std::size_t j = t + 1; j < n && fixed; ++j) {
                    if (w.m.at(i, j).is_zero()) continue;
                    if (!divmod(w.m.at(i, j), w.m.at(t, t)).remainder.is_zero()) {
                        w.row_axpy(t, i, Poly::one(f));
                        fixed = false;
                    }
                }
            if (fixed) break;
        }
        if (empty) {
            done = t;
            break;
        }
        if (!w.m.at(t, t).is_monic()) w.row_scale(t, w.m.at(t, t).leading().inv());
    }

    SmithForm sf{UnimodularCert(std::move(w.u), std::move(w.uinv)),
                 UnimodularCert(std::move(w.v), std::move(w.vinv)),
                 {}};
    for (std::size_t t = 0; t < steps; ++t)
        sf.invariant_factors.push_back(t < done ? w.m.at(t, t) : Poly(f));
    return sf;
}

PolyMatrix right_inverse(const PolyMatrix& g) {
    const std::size_t k = g.rows(), n = g.cols();
    const SmithForm sf = smith_form(g);
    const bool basic = sf.invariant_factors.size() == k &&
                       std::all_of(sf.invariant_factors.begin(), sf.invariant_factors.end(),
                                   [](const Poly& p) { return p.is_one(); });
    if (!basic) throw NotBasic("right_inverse: matrix has a non-unit invariant factor");

    // U G V = [I | 0]  =>  G * (V[:, :k] U) = I
    std::vector<std::size_t> all_rows(n), first_k(k);
    std::iota(all_rows.begin(), all_rows.end(), std::size_t{0});
    std::iota(first_k.begin(), first_k.end(), std::size_t{0});
    return sf.V.T().submatrix(all_rows, first_k) * sf.U.T();
}

CanonicalResult canonicalize(const PolyMatrix& g) {
    const std::size_t k = g.rows(), n = g.cols();
    if (rank_rational(g) != k)
        throw RankDeficient("canonicalize: matrix does not have full row rank");

    // G = Uinv diag(f) W with W = first k rows of Vinv, so W is a basic
    // generating matrix of the same code; reducing it yields a canonical one.
    const SmithForm sf = smith_form(g);
    std::vector<std::size_t> first_k(k), all_cols(n);
    std::iota(first_k.begin(), first_k.end(), std::size_t{0});
    std::iota(all_cols.begin(), all_cols.end(), std::size_t{0});
    const PolyMatrix w = sf.V.Tinv().submatrix(first_k, all_cols);

    ReduceResult rr = reduce(w);
    CanonicalResult res{std::move(rr.reduced), {}};
    for (std::size_t i = 0; i < k; ++i) res.forney.push_back(res.canonical.row_degree(i).finite());
    std::sort(res.forney.begin(), res.forney.end());
    return res;
}

}  // namespace convalg
