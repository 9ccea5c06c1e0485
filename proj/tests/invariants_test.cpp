#include <gtest/gtest.h>

#include "coadj/diagram.hpp"
#include "coadj/invariants.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace coadj;
using fixtures::P;

namespace {

WFamily family(const RegularIdeal& m) { return WFamily(m.n(), build_diagram(m).crosses()); }

bool equal_up_to_sign(const Polynomial& a, const Polynomial& b) { return a == b || a == Polynomial{} - b; }

}  // namespace

TEST(CaseOf, WorkedExample) {
    const auto fam = family(fixtures::worked_example());
    auto c = case_of({5, 4}, fam);
    EXPECT_EQ(c.h, 5);
    EXPECT_EQ(c.cross_case, CrossCase::One);
    c = case_of({7, 4}, fam);
    EXPECT_EQ(c.h, 3);
    EXPECT_EQ(c.cross_case, CrossCase::Two);
    c = case_of({4, 1}, fam);
    EXPECT_EQ(c.h, 4);
    EXPECT_EQ(c.cross_case, CrossCase::One);
}

TEST(ColumnRows, WorkedExample) {
    const auto fam = family(fixtures::worked_example());
    EXPECT_EQ(column_rows({5, 4}, fam), (std::pair{std::vector<int>{2, 3, 4}, std::vector<int>{5, 6, 7}}));
    EXPECT_EQ(column_rows({7, 4}, fam), (std::pair{std::vector<int>{1, 2, 3, 4}, std::vector<int>{3, 4, 6, 7}}));
    EXPECT_EQ(column_rows({4, 1}, fam), (std::pair{std::vector<int>{1}, std::vector<int>{4}}));
}

TEST(InvariantFor, WorkedExampleRecords) {
    const auto records = all_invariants(fixtures::worked_example());
    ASSERT_EQ(records.size(), 5u);
    EXPECT_EQ(records[0].p, P("y[4,1]"));
    EXPECT_EQ(records[1].p, P("y[6,2]"));
    EXPECT_EQ(records[2].p, P("y[7,3]"));
    EXPECT_TRUE(equal_up_to_sign(records[3].p, P("y[6,2]") * fixtures::worked_example_variant_p4()));
    EXPECT_TRUE(equal_up_to_sign(records[4].p, fixtures::worked_example_p5()));

    EXPECT_EQ(records[3].cross_case, CrossCase::Two);
    EXPECT_EQ(records[3].degree, 1);
    EXPECT_EQ(records[3].d_star, 1);
    for (const auto& r : records) {
        EXPECT_TRUE(r.extremal);
        if (r.cross_case == CrossCase::One) {
            EXPECT_EQ(r.degree, 0);
            EXPECT_FALSE(r.d_star.has_value());
        }
    }
}

TEST(InvariantFor, LeadingCoefficientIsPositive) {
    for (const auto& r : all_invariants(fixtures::worked_example())) EXPECT_GT(r.p.leading().second, 0);
}

TEST(InvariantFor, RejectsRootsOutsideS) {
    const auto m = fixtures::worked_example();
    EXPECT_THROW(invariant_for({6, 4}, m, family(m)), InputError);
}

TEST(AllInvariants, SmallCases) {
    const auto four = all_invariants(fixtures::empty_ideal(4));
    ASSERT_EQ(four.size(), 2u);
    EXPECT_EQ(four[0].p, P("y[4,1]"));
    EXPECT_TRUE(equal_up_to_sign(four[1].p, P("y[3,1]*y[4,2] - y[3,2]*y[4,1]")));
    EXPECT_TRUE(all_invariants(RegularIdeal::full(2)).empty());
}

TEST(AllInvariants, StructuralLawsOnAllIdealsUpToSeven) {
    for (int n = 2; n <= 7; ++n)
        for (const auto& m : oracle::all_ideals(n)) {
            const auto records = all_invariants(m);
            for (const auto& r : records) {
                ASSERT_EQ(r.rows.size(), r.cols.size());
                ASSERT_EQ(r.cols.back(), r.xi.col);
                for (std::size_t i = 1; i < r.cols.size(); ++i) ASSERT_EQ(r.cols[i], r.cols[i - 1] + 1);
                ASSERT_TRUE(r.extremal);
                ASSERT_EQ(r.degree, r.cross_case == CrossCase::One ? 0 : *r.d_star);
                for (int i = 1; i < n; ++i) ASSERT_TRUE(poisson_bracket_generator(i, r.p, m).is_zero());
                ASSERT_NO_THROW(triangular_decomposition(r));
            }
        }
}

TEST(TriangularDecomposition, WorkedExample) {
    const auto records = all_invariants(fixtures::worked_example());
    const auto t1 = triangular_decomposition(records[0]);
    EXPECT_EQ(t1.q, Polynomial(1));
    EXPECT_TRUE(t1.r.is_zero());

    const auto t4 = triangular_decomposition(records[3]);
    EXPECT_TRUE(equal_up_to_sign(t4.q, P("y[6,2]*y[4,1]")));
    EXPECT_TRUE(equal_up_to_sign(t4.r, P("y[6,2]*y[7,3]*y[3,1]")));

    const auto t5 = triangular_decomposition(records[4]);
    EXPECT_TRUE(equal_up_to_sign(t5.q, P("y[6,2]*y[7,3]")));
    EXPECT_EQ(P("y[5,4]") * t5.q + t5.r, records[4].p);
}

TEST(TriangularDecomposition, RejectsNonTriangularRecord) {
    auto r = all_invariants(fixtures::worked_example())[0];
    r.p = P("y[4,1]*y[4,1]");
    EXPECT_THROW(triangular_decomposition(r), InvariantViolation);
    r.p = P("y[6,2]");
    EXPECT_THROW(triangular_decomposition(r), InvariantViolation);
}
