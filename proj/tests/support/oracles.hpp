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

// Test-only oracles, deliberately independent of the library's elimination
// code paths: determinants by the Leibniz permutation sum, rank by minor
// enumeration.

#ifndef CONVALG_TESTS_ORACLES_HPP
#define CONVALG_TESTS_ORACLES_HPP

#include <algorithm>
#include <numeric>
#include <vector>

#include "convalg/polymat.hpp"

namespace convalg::testing {

inline bool perm_is_even(const std::vector<std::size_t>& perm) {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) ++inversions;
    return inversions % 2 == 0;
}

/// Determinant by the Leibniz sum over permutations.
inline Poly leibniz_det(const PolyMatrix& m) {
    const std::size_t n = m.rows();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    Poly acc(m.field());
    do {
        Poly prod = Poly::one(m.field());
        for (std::size_t i = 0; i < n; ++i) prod = prod * m.at(i, perm[i]);
        acc = perm_is_even(perm) ? acc + prod : acc - prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return acc;
}

inline bool next_subset(std::vector<std::size_t>& c, std::size_t n) {
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

/// Rank over F(D) as the largest size of a square submatrix with nonzero
/// Leibniz determinant.
inline std::size_t rank_by_minors(const PolyMatrix& m) {
    for (std::size_t s = std::min(m.rows(), m.cols()); s >= 1; --s) {
        std::vector<std::size_t> rows(s);
        std::iota(rows.begin(), rows.end(), std::size_t{0});
        do {
            std::vector<std::size_t> cols(s);
            std::iota(cols.begin(), cols.end(), std::size_t{0});
            do {
                if (!leibniz_det(m.submatrix(rows, cols)).is_zero()) return s;
            } while (next_subset(cols, m.cols()));
        } while (next_subset(rows, m.rows()));
    }
    return 0;
}

/// Internal degree straight from the definition: max degree over the k x k
/// minors, each computed by the Leibniz sum.
inline int intdeg_by_minors(const PolyMatrix& m) {
    const std::size_t k = m.rows();
    std::vector<std::size_t> rows(k);
    std::iota(rows.begin(), rows.end(), std::size_t{0});
    std::vector<std::size_t> cols(k);
    std::iota(cols.begin(), cols.end(), std::size_t{0});
    ExtInt best = ExtInt::neg_inf();
    do {
        best = max(best, leibniz_det(m.submatrix(rows, cols)).degree());
    } while (next_subset(cols, m.cols()));
    return best.finite();
}

}  // namespace convalg::testing

#endif  // CONVALG_TESTS_ORACLES_HPP
