#include <doctest.h>

#include "rainbow/construction.hpp"
#include "rainbow/search.hpp"
#include "rainbow/verify.hpp"

using namespace rainbow;

namespace {

// Reference search without canonical-color symmetry breaking: every cell may
// take any of the c colors. Feasibility only; used to confirm the pruned
// search returns the same minimum on tiny grids.
bool feasible_plain(Grid& g, int pos, int palette, int q) {
    const int rows = g.rows(), cols = g.cols();
    if (pos == rows * cols) return true;
    const int r = pos / cols + 1, c = pos % cols + 1;
    for (Color color = 1; color <= palette; ++color) {
        g.at(r, c) = color;
        bool ok = true;
        for (int r2 = 1; r2 < r && ok; ++r2)
            for (int c2 = 1; c2 < c && ok; ++c2)
                ok = classify_quadruple(g.at(r2, c2), g.at(r2, c), g.at(r, c2), g.at(r, c)) >= q;
        if (ok && feasible_plain(g, pos + 1, palette, q)) return true;
    }
    g.at(r, c) = 0;
    return false;
}

int min_colors_plain(int rows, int cols, int q, int max_colors) {
    for (int palette = 1; palette <= max_colors; ++palette) {
        Grid g(rows, cols);
        if (feasible_plain(g, 0, palette, q)) return palette;
    }
    return -1;
}

}  // namespace

TEST_CASE("a single 4-cycle needs exactly three colors") {
    const SearchResult r = min_colors_exhaustive(2, 2, 3, 4);
    CHECK(r.status == SearchStatus::Exact);
    REQUIRE(r.min_colors.has_value());
    CHECK(*r.min_colors == 3);
    REQUIRE(r.witness.has_value());
    // Lexicographically smallest canonical witness.
    CHECK(r.witness->at(1, 1) == 1);
    CHECK(r.witness->at(1, 2) == 1);
    CHECK(r.witness->at(2, 1) == 2);
    CHECK(r.witness->at(2, 2) == 3);
    VerifyOptions q3;
    CHECK(verify_naive(*r.witness, q3).violation_count == 0);
    CHECK(r.nodes > 0);
}

TEST_CASE("three colors suffice for the 3x3 grid") {
    const SearchResult r = min_colors_exhaustive(3, 3, 3, 9);
    CHECK(r.status == SearchStatus::Exact);
    REQUIRE(r.min_colors.has_value());
    CHECK(*r.min_colors == 3);
    REQUIRE(r.witness.has_value());
    CHECK(verify_naive(*r.witness).violation_count == 0);
    CHECK(r.witness->max_color() <= 3);
}

TEST_CASE("2x3 stays within the forced bounds") {
    const SearchResult r = min_colors_exhaustive(2, 3, 3, 6);
    REQUIRE(r.min_colors.has_value());
    CHECK(*r.min_colors >= 3);
    CHECK(*r.min_colors <= 6);
    CHECK(verify_naive(*r.witness).violation_count == 0);
}

TEST_CASE("infeasible below q is proven, not guessed") {
    const SearchResult r = min_colors_exhaustive(2, 2, 3, 2);
    CHECK(r.status == SearchStatus::Exact);
    CHECK(!r.min_colors.has_value());
    CHECK(r.infeasible_up_to_max);
    CHECK(!r.witness.has_value());
}

TEST_CASE("a starved node budget reports unknown") {
    SearchOptions opt;
    opt.node_budget = 10;
    const SearchResult r = min_colors_exhaustive(4, 4, 3, 16, opt);
    CHECK(r.status == SearchStatus::BudgetExceeded);
    CHECK(!r.min_colors.has_value());
    CHECK(!r.infeasible_up_to_max);
}

TEST_CASE("minimum is monotone in both part sizes") {
    int val[5][5] = {};
    for (int rows = 2; rows <= 4; ++rows)
        for (int cols = 2; cols <= 4; ++cols) {
            if (rows * cols > 12) continue;
            const SearchResult r = min_colors_exhaustive(rows, cols, 3, rows * cols);
            REQUIRE(r.min_colors.has_value());
            val[rows][cols] = *r.min_colors;
            CHECK(*r.min_colors >= 3);
            CHECK(verify_naive(*r.witness).violation_count == 0);
        }
    CHECK(val[2][2] <= val[2][3]);
    CHECK(val[2][3] <= val[2][4]);
    CHECK(val[2][2] <= val[3][2]);
    CHECK(val[3][2] <= val[4][2]);
    CHECK(val[2][3] <= val[3][3]);
    CHECK(val[3][2] <= val[3][3]);
}

TEST_CASE("symmetry breaking does not change the minimum") {
    const std::pair<int, int> cases[] = {{2, 2}, {2, 3}, {3, 2}, {2, 4}, {4, 2}, {3, 3}};
    for (const auto& [rows, cols] : cases) {
        const SearchResult pruned = min_colors_exhaustive(rows, cols, 3, rows * cols);
        REQUIRE(pruned.min_colors.has_value());
        CHECK(*pruned.min_colors == min_colors_plain(rows, cols, 3, rows * cols));
    }
}

TEST_CASE("q = 4 demands fully rainbow 4-cycles") {
    const SearchResult r = min_colors_exhaustive(2, 2, 4, 4);
    REQUIRE(r.min_colors.has_value());
    CHECK(*r.min_colors == 4);
    VerifyOptions opt;
    opt.min_distinct = 4;
    CHECK(verify_naive(*r.witness, opt).violation_count == 0);
}

TEST_CASE("degenerate parts need one color") {
    const SearchResult r = min_colors_exhaustive(1, 5, 3, 5);
    REQUIRE(r.min_colors.has_value());
    CHECK(*r.min_colors == 1);
}

TEST_CASE("search is deterministic") {
    const SearchResult a = min_colors_exhaustive(3, 3, 3, 9);
    const SearchResult b = min_colors_exhaustive(3, 3, 3, 9);
    CHECK(a.nodes == b.nodes);
    CHECK(a.witness->cells() == b.witness->cells());
}

TEST_CASE("bound witness reports") {
    const WitnessReport w8 = verify_bound_witness(8);
    CHECK(w8.pass);
    CHECK(w8.colors_used <= 8);
    CHECK(w8.violations == 0);
    CHECK(w8.type == "Type1");

    const WitnessReport w12 = verify_bound_witness(12);
    CHECK(w12.pass);
    CHECK(w12.type == "Type2");

    const WitnessReport w5 = verify_bound_witness(5);
    CHECK(!w5.pass);
    CHECK(!w5.failure.empty());
}

TEST_CASE("search argument validation") {
    CHECK_THROWS_AS(min_colors_exhaustive(0, 2, 3, 4), std::invalid_argument);
    CHECK_THROWS_AS(min_colors_exhaustive(2, 2, 5, 4), std::invalid_argument);
    CHECK_THROWS_AS(min_colors_exhaustive(2, 2, 3, 0), std::invalid_argument);
}
