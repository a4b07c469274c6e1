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

#ifndef CONVALG_FMATRIX_HPP
#define CONVALG_FMATRIX_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "gf.hpp"

namespace convalg {

/// Dense matrix over GF(p). Values are stored canonical in [0, p).
class FMatrix {
   public:
    FMatrix(FieldSpec field, std::size_t rows, std::size_t cols)
        : field_(field), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    static FMatrix identity(FieldSpec field, std::size_t n);

    FieldSpec field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    std::uint32_t operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    void set(std::size_t i, std::size_t j, std::uint64_t v) {
        a_[i * cols_ + j] = static_cast<std::uint32_t>(v % field_.modulus());
    }

    FMatrix operator*(const FMatrix& o) const;
    FMatrix operator+(const FMatrix& o) const;
    FMatrix transpose() const;

    std::size_t rank() const;

    /// Basis of the right nullspace {x : A x = 0}, from the RREF free columns.
    std::vector<std::vector<std::uint32_t>> nullspace() const;

    /// One solution of A x = b, if any.
    std::optional<std::vector<std::uint32_t>> solve(const std::vector<std::uint32_t>& b) const;

    friend bool operator==(const FMatrix& a, const FMatrix& b) noexcept {
        return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

   private:
    // In-place reduced row echelon form; returns pivot column per pivot row.
    std::vector<std::size_t> rref();

    FieldSpec field_;
    std::size_t rows_, cols_;
    std::vector<std::uint32_t> a_;
};

}  // namespace convalg

#endif  // CONVALG_FMATRIX_HPP
