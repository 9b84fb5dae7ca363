#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "rainbow/types.hpp"

namespace rainbow {

/// Inclusive bound affine in n: (cn*n + c0) / den. Evaluation requires the
/// numerator to divide den exactly.
struct Frac {
    int cn = 0;
    int c0 = 0;
    int den = 1;

    int eval(int n) const;
};

struct Band {
    Frac lo;
    Frac hi;

    bool contains(int value, int n) const;
};

/// One case region of the verification plan: a box of (i, j, l, m) values
/// (with the global i<j, l<m constraints implicit). The regions for an order
/// partition the whole quadruple space.
struct Region {
    std::string id;
    Band i;
    Band j;
    Band l;
    Band m;
};

/// The region table for a construction family. Stored as data so the
/// boundaries can be audited row by row.
const std::vector<Region>& region_table(TypeTag tag);

struct RegionStats {
    std::string id;
    std::int64_t quadruples = 0;
    std::int64_t violations = 0;
};

struct CoverageMap {
    int n = 0;
    std::vector<RegionStats> regions;  // table order
    std::int64_t total_quadruples = 0;

    /// True when every nonempty region shows zero violations.
    bool all_clean() const;
};

struct RegionGap : std::runtime_error {
    RegionGap(int i, int j, int l, int m);
    int i, j, l, m;
};

/// Tags every quadruple (i<j, l<m) with its region and tallies quadruple and
/// violation counts per region. Throws RegionGap if a quadruple matches no
/// region of the table.
CoverageMap partition_coverage(const ColoringMatrix& mat);
CoverageMap partition_coverage(const ColoringMatrix& mat, const std::vector<Region>& table);

}  // namespace rainbow
