#include <gtest/gtest.h>

#include "coadj/linalg.hpp"

using namespace coadj;
using linalg::Matrix;

namespace {

Matrix ints(std::initializer_list<std::initializer_list<int>> rows) {
    Matrix m;
    for (const auto& r : rows) {
        m.emplace_back();
        for (int v : r) m.back().emplace_back(v);
    }
    return m;
}

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

}  // namespace

TEST(Rank, SmallMatrices) {
    EXPECT_EQ(linalg::rank(ints({{1, 2}, {2, 4}})), 1u);
    EXPECT_EQ(linalg::rank(ints({{1, 2}, {3, 4}})), 2u);
    EXPECT_EQ(linalg::rank(ints({{0, 0}, {0, 0}})), 0u);
    EXPECT_EQ(linalg::rank(Matrix{}), 0u);
}

TEST(Rank, ExactWhereFloatingPointWouldDrift) {
    Matrix m(3, std::vector<Rational>(3));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m[i][j] = Rational(1, i + j + 1);  // Hilbert matrix
    EXPECT_EQ(linalg::rank(m), 3u);
    m[2] = m[0];
    for (auto& v : m[2]) v *= Rational(1, 3);
    EXPECT_EQ(linalg::rank(m), 2u);
}

TEST(Nullspace, VectorsAreAnnihilatedAndIndependent) {
    const Matrix a = ints({{1, 2, 3, 4}, {2, 4, 6, 8}, {0, 1, 1, 1}});
    const Matrix k = linalg::nullspace(a, 4);
    ASSERT_EQ(k.size(), 2u);
    for (const auto& v : k)
        for (const auto& row : a) EXPECT_EQ(dot(row, v), 0);
    EXPECT_EQ(linalg::rank(k), 2u);
}

TEST(Nullspace, EmptyMatrixGivesFullSpace) {
    EXPECT_EQ(linalg::nullspace(Matrix{}, 3).size(), 3u);
}

TEST(InRowSpan, Membership) {
    const Matrix span = ints({{1, 0, 1}, {0, 1, 1}});
    EXPECT_TRUE(linalg::in_row_span(span, {Rational(2), Rational(3), Rational(5)}));
    EXPECT_FALSE(linalg::in_row_span(span, {Rational(1), Rational(1), Rational(1)}));
    EXPECT_TRUE(linalg::in_row_span(Matrix{}, {Rational(0), Rational(0)}));
    EXPECT_FALSE(linalg::in_row_span(Matrix{}, {Rational(1), Rational(0)}));
}

TEST(Rref, PivotsAndCanonicalRows) {
    const auto e = linalg::rref(ints({{2, 4, 2}, {1, 3, 2}}), 3);
    ASSERT_EQ(e.pivots, (std::vector<std::size_t>{0, 1}));
    EXPECT_EQ(e.rows[0][0], 1);
    EXPECT_EQ(e.rows[0][1], 0);
    EXPECT_EQ(e.rows[1][1], 1);
    EXPECT_EQ(e.rows[0][2], -1);
    EXPECT_EQ(e.rows[1][2], 1);
}
