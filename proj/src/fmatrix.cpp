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

#include "convalg/fmatrix.hpp"

namespace convalg {

FMatrix FMatrix::identity(FieldSpec field, std::size_t n) {
    FMatrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

FMatrix FMatrix::operator*(const FMatrix& o) const {
    if (field_ != o.field_) throw MixedFields("matrix product over different fields");
    if (cols_ != o.rows_) throw DimensionMismatch("matrix product shape mismatch");
    const std::uint32_t p = field_.modulus();
    FMatrix r(field_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t t = 0; t < cols_; ++t) {
            const std::uint32_t aij = (*this)(i, t);
            if (aij == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                r.a_[i * r.cols_ + j] =
                    gf::add(r.a_[i * r.cols_ + j], gf::mul(aij, o(t, j), p), p);
        }
    return r;
}

FMatrix FMatrix::operator+(const FMatrix& o) const {
    if (field_ != o.field_) throw MixedFields("matrix sum over different fields");
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix sum shape mismatch");
    FMatrix r(field_, rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = gf::add(a_[i], o.a_[i], field_.modulus());
    return r;
}

FMatrix FMatrix::transpose() const {
    FMatrix r(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.set(j, i, (*this)(i, j));
    return r;
}

std::vector<std::size_t> FMatrix::rref() {
    const std::uint32_t p = field_.modulus();
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
        std::size_t piv = row;
        while (piv < rows_ && a_[piv * cols_ + col] == 0) ++piv;
        if (piv == rows_) continue;
        if (piv != row)
            for (std::size_t j = 0; j < cols_; ++j)
                std::swap(a_[piv * cols_ + j], a_[row * cols_ + j]);
        const std::uint32_t s = gf::inv(a_[row * cols_ + col], p);
        for (std::size_t j = col; j < cols_; ++j)
            a_[row * cols_ + j] = gf::mul(a_[row * cols_ + j], s, p);
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == row) continue;
            const std::uint32_t f = a_[i * cols_ + col];
            if (f == 0) continue;
            for (std::size_t j = col; j < cols_; ++j)
                a_[i * cols_ + j] =
                    gf::sub(a_[i * cols_ + j], gf::mul(f, a_[row * cols_ + j], p), p);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::size_t FMatrix::rank() const {
    FMatrix tmp(*this);
    return tmp.rref().size();
}

std::vector<std::vector<std::uint32_t>> FMatrix::nullspace() const {
    FMatrix r(*this);
    const std::vector<std::size_t> pivots = r.rref();
    const std::uint32_t p = field_.modulus();
    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t c : pivots) is_pivot[c] = true;

    std::vector<std::vector<std::uint32_t>> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        std::vector<std::uint32_t> x(cols_, 0);
        x[free] = 1;
        for (std::size_t t = 0; t < pivots.size(); ++t)
            x[pivots[t]] = gf::neg(r(t, free), p);
        basis.push_back(std::move(x));
    }
    return basis;
}

std::optional<std::vector<std::uint32_t>> FMatrix::solve(
    const std::vector<std::uint32_t>& b) const {
    if (b.size() != rows_) throw DimensionMismatch("solve: rhs length mismatch");
    FMatrix aug(field_, rows_, cols_ + 1);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) aug.set(i, j, (*this)(i, j));
        aug.set(i, cols_, b[i]);
    }
    const std::vector<std::size_t> pivots = aug.rref();
    std::vector<std::uint32_t> x(cols_, 0);
    for (std::size_t t = 0; t < pivots.size(); ++t) {
        if (pivots[t] == cols_) return std::nullopt;  // pivot in the rhs column: inconsistent
        x[pivots[t]] = aug(t, cols_);
    }
    return x;
}

}  // namespace convalg
