#pragma once

// Dense exact Gaussian elimination. Matrices here stay small (at most a few
// hundred rows), so no sparsity or fraction-free tricks are needed.

#include <cstddef>
#include <vector>

#include "coadj/rational.hpp"

namespace coadj::linalg {

using Matrix = std::vector<std::vector<Rational>>;

struct Echelon {
    Matrix rows;                       // reduced row echelon form, zero rows dropped
    std::vector<std::size_t> pivots;   // pivot column of each row
};

/// Reduced row echelon form with leading ones.
inline Echelon rref(Matrix m, std::size_t cols) {
    Echelon out;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t pivot = r;
        while (pivot < m.size() && m[pivot][c] == 0) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[r], m[pivot]);
        const Rational inv = 1 / m[r][c];
        for (std::size_t k = c; k < cols; ++k) m[r][k] *= inv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c] == 0) continue;
            const Rational f = m[i][c];
            for (std::size_t k = c; k < cols; ++k)
                if (m[r][k] != 0) m[i][k] -= f * m[r][k];
        }
        out.pivots.push_back(c);
        ++r;
    }
    m.resize(r);
    out.rows = std::move(m);
    return out;
}

inline std::size_t rank(const Matrix& m) {
    if (m.empty()) return 0;
    return rref(m, m.front().size()).pivots.size();
}

/// Basis of {x : m x = 0}, one vector per free column, with a 1 in that column.
inline Matrix nullspace(const Matrix& m, std::size_t cols) {
    const Echelon e = rref(m, cols);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : e.pivots) is_pivot[p] = true;
    Matrix basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(cols, Rational(0));
        v[free] = 1;
        for (std::size_t i = 0; i < e.rows.size(); ++i) v[e.pivots[i]] = -e.rows[i][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

/// True iff v is a linear combination of the rows of `spanning`.
inline bool in_row_span(const Matrix& spanning, const std::vector<Rational>& v) {
    Matrix with = spanning;
    with.push_back(v);
    return rank(with) == rank(spanning);
}

}  // namespace coadj::linalg
