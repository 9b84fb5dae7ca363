#pragma once

#include <array>
#include <chrono>
#include <compare>
#include <cstdint>
#include <vector>

#include "rainbow/types.hpp"

namespace rainbow {

/// Number of distinct values among the four cells of a 2x2 submatrix, 1..4.
int classify_quadruple(Color a, Color b, Color c, Color d);

/// A 4-cycle (rows i<j, columns l<m) carrying fewer distinct colors than the
/// verifier's threshold. colors is (a_il, a_im, a_jl, a_jm).
struct Violation {
    int i = 0;
    int j = 0;
    int l = 0;
    int m = 0;
    std::array<Color, 4> colors{};
    int distinct = 0;

    auto operator<=>(const Violation&) const = default;
};

struct VerifyOptions {
    int min_distinct = 3;          // a 4-cycle needs >= this many distinct colors
    std::size_t store_limit = 1000;  // violations kept in the report; all are counted
};

struct VerificationReport {
    int rows = 0;
    int cols = 0;
    int colors_used = 0;
    std::int64_t quadruples_checked = 0;
    std::int64_t violation_count = 0;
    std::vector<Violation> violations;  // lexicographic by (i, j, l, m), capped
    bool truncated = false;
    std::chrono::nanoseconds elapsed{0};

    bool almost_rainbow() const { return violation_count == 0; }
    int n() const;  // order; requires a square grid
};

/// Checks every pair of rows against every pair of columns, O(rows^2 cols^2).
/// Violations are recorded in lexicographic (i, j, l, m) order.
VerificationReport verify_naive(const Grid& grid, const VerifyOptions& opt = {});

/// Same report as verify_naive, computed per row pair from column color
/// signatures: column l has signature {a_il, a_jl}; a violating column pair is
/// two singletons, a singleton plus a pair containing it, or two equal pairs.
/// O(rows^2 cols) plus output. Only supports min_distinct == 3.
VerificationReport verify_fast(const Grid& grid, const VerifyOptions& opt = {});

}  // namespace rainbow
