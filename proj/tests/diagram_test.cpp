#include <gtest/gtest.h>

#include "coadj/diagram.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace coadj;

TEST(BuildDiagram, WorkedExampleStepsMatchReferencePictures) {
    const Diagram d = build_diagram(fixtures::worked_example());
    ASSERT_EQ(d.steps(), 5);
    const auto& steps = fixtures::worked_example_steps();
    for (int m = 0; m <= 5; ++m) EXPECT_EQ(render_grid(d, m), steps[static_cast<std::size_t>(m)]) << "step " << m;
    EXPECT_EQ(render_grid(d), steps.back());
    EXPECT_EQ(d.crosses(), (std::vector<Root>{{4, 1}, {6, 2}, {7, 3}, {7, 4}, {5, 4}}));
}

TEST(BuildDiagram, SmallCases) {
    const Diagram d3 = build_diagram(fixtures::empty_ideal(3));
    EXPECT_EQ(d3.at({3, 1}).symbol, Symbol::Cross);
    EXPECT_EQ(d3.at({3, 2}).symbol, Symbol::Minus);
    EXPECT_EQ(d3.at({2, 1}).symbol, Symbol::Plus);
    EXPECT_EQ(d3.crosses(), (std::vector<Root>{{3, 1}}));

    const Diagram d2 = build_diagram(RegularIdeal::full(2));
    EXPECT_EQ(d2.at({2, 1}).symbol, Symbol::Bullet);
    EXPECT_TRUE(d2.crosses().empty());

    const Diagram d1 = build_diagram(RegularIdeal::from_generators(1, {}));
    EXPECT_EQ(render_grid(d1), (std::vector<std::string>{"."}));
}

TEST(SymbolBySigns, WorkedExampleCells) {
    const auto m = fixtures::worked_example();
    EXPECT_EQ(symbol_by_signs(m, {4, 2}), Symbol::Minus);
    EXPECT_EQ(symbol_by_signs(m, {7, 2}), Symbol::Bullet);
    EXPECT_EQ(symbol_by_signs(m, {6, 4}), Symbol::Plus);
    EXPECT_EQ(symbol_by_signs(m, {7, 4}), Symbol::Cross);
}

TEST(SymbolBySigns, AgreesWithConstructionOnAllIdealsUpToEight) {
    for (int n = 2; n <= 8; ++n)
        for (const auto& m : oracle::all_ideals(n)) {
            const Diagram d = build_diagram(m);
            for (const auto& r : positive_roots(n)) ASSERT_EQ(symbol_by_signs(d, r), d.at(r).symbol) << to_string(r);
        }
}

TEST(DiagramCounts, Examples) {
    auto c = diagram_counts(build_diagram(fixtures::worked_example()));
    EXPECT_EQ(c.crosses, 5);
    EXPECT_EQ(c.plus_minus(), 12);
    EXPECT_EQ(c.bullets, 4);
    c = diagram_counts(build_diagram(fixtures::empty_ideal(3)));
    EXPECT_EQ(c.crosses, 1);
    EXPECT_EQ(c.plus_minus(), 2);
    EXPECT_EQ(c.bullets, 0);
    c = diagram_counts(build_diagram(RegularIdeal::full(2)));
    EXPECT_EQ(c.crosses, 0);
    EXPECT_EQ(c.plus_minus(), 0);
    EXPECT_EQ(c.bullets, 1);
}

TEST(DiagramCounts, BalancedOnAllIdealsUpToEight) {
    for (int n = 1; n <= 8; ++n)
        for (const auto& m : oracle::all_ideals(n)) {
            const auto c = diagram_counts(build_diagram(m));
            EXPECT_EQ(c.total(), n * (n - 1) / 2);
            EXPECT_EQ(c.plus, c.minus);
            EXPECT_EQ(c.bullets, static_cast<int>(m.size()));
            EXPECT_EQ(c.crosses + c.plus_minus(), m.quotient_dim());
        }
}

TEST(Diagram, FromCellsRebuildsTheSameDiagram) {
    const Diagram d = build_diagram(fixtures::worked_example());
    std::vector<std::pair<Root, Cell>> cells;
    for (const auto& r : positive_roots(7)) cells.emplace_back(r, d.at(r));
    EXPECT_EQ(Diagram::from_cells(7, cells), d);
    cells.pop_back();
    EXPECT_THROW(Diagram::from_cells(7, cells), InputError);
}

TEST(Diagram, RejectsRootsOutsideTheGrid) {
    const Diagram d = build_diagram(fixtures::empty_ideal(3));
    EXPECT_THROW(d.at({4, 1}), InputError);
}
