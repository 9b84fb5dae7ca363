#include "rainbow/partition.hpp"

#include "rainbow/verify.hpp"

namespace rainbow {

int Frac::eval(int n) const {
    const long long num = static_cast<long long>(cn) * n + c0;
    if (num % den != 0)
        throw std::logic_error("region bound is fractional at n = " + std::to_string(n));
    return static_cast<int>(num / den);
}

bool Band::contains(int value, int n) const {
    return lo.eval(n) <= value && value <= hi.eval(n);
}

RegionGap::RegionGap(int i_, int j_, int l_, int m_)
    : std::runtime_error("quadruple (" + std::to_string(i_) + "," + std::to_string(j_) + ";" +
                         std::to_string(l_) + "," + std::to_string(m_) + ") matches no region"),
      i(i_), j(j_), l(l_), m(m_) {}

bool CoverageMap::all_clean() const {
    for (const RegionStats& r : regions)
        if (r.quadruples > 0 && r.violations > 0) return false;
    return true;
}

namespace {

constexpr Frac kOne{0, 1, 1};
constexpr Frac kTwo{0, 2, 1};
constexpr Frac kThree{0, 3, 1};
constexpr Frac kN{1, 0, 1};
constexpr Frac kNm1{1, -1, 1};
constexpr Frac kNm2{1, -2, 1};
constexpr Frac kHalfm1{1, -2, 2};
constexpr Frac kHalf{1, 0, 2};
constexpr Frac kHalfp1{1, 2, 2};
constexpr Frac kHalfp2{1, 4, 2};

constexpr Band band(Frac lo, Frac hi) { return Band{lo, hi}; }

// The case regions of the verification plan. A row pair is either two body
// rows, row 1 with a body row, row 1 with row n, or a body row with row n; a
// column pair either avoids column 1 or contains it. The .case6 entries of
// groups 2 and 3 cover column pairs (l, n) that the written case lists leave
// out.
std::vector<Region> make_table() {
    std::vector<Region> t;
    const Band rows_body = band(kTwo, kNm1);
    const Band row1 = band(kOne, kOne);
    const Band row2 = band(kTwo, kTwo);
    const Band rown = band(kN, kN);
    const Band col1 = band(kOne, kOne);
    const Band cols_body = band(kTwo, kN);

    // Body rows against body rows / row 1.
    t.push_back({"step1.case1", rows_body, rows_body, cols_body, cols_body});
    t.push_back({"step1.case2", row1, rows_body, cols_body, cols_body});

    // Row 1 against row n, column pairs without column 1.
    t.push_back({"step2.case1", row1, rown, band(kTwo, kHalfm1), band(kTwo, kHalfm1)});
    t.push_back({"step2.case2", row1, rown, band(kTwo, kNm2), band(kHalf, kNm2)});
    t.push_back({"step2.case3", row1, rown, band(kTwo, kHalfm1), band(kNm1, kNm1)});
    t.push_back({"step2.case4", row1, rown, band(kHalf, kNm2), band(kNm1, kNm1)});
    t.push_back({"step2.case5", row1, rown, band(kNm1, kNm1), band(kN, kN)});
    t.push_back({"step2.case6", row1, rown, band(kTwo, kNm2), band(kN, kN)});

    // Body rows against row n, column pairs without column 1.
    t.push_back({"step3.case1", rows_body, rown, band(kTwo, kHalfm1), band(kTwo, kHalfm1)});
    t.push_back({"step3.case2", rows_body, rown, band(kTwo, kNm2), band(kHalf, kNm2)});
    t.push_back({"step3.case3", rows_body, rown, band(kTwo, kHalfm1), band(kNm1, kNm1)});
    t.push_back({"step3.case4", rows_body, rown, band(kHalf, kNm2), band(kNm1, kN)});
    t.push_back({"step3.case5", rows_body, rown, band(kNm1, kNm1), band(kN, kN)});
    t.push_back({"step3.case6", rows_body, rown, band(kTwo, kHalfm1), band(kN, kN)});

    // Row 1 against everything, column pairs containing column 1.
    t.push_back({"step4.case1", row1, row2, col1, cols_body});
    t.push_back({"step4.case2", row1, band(kThree, kHalfp1), col1, cols_body});
    t.push_back({"step4.case3", row1, band(kHalfp2, kNm1), col1, cols_body});
    t.push_back({"step4.case4", row1, rown, col1, cols_body});

    // Row 2 against rows 3..n.
    t.push_back({"step5.case1", row2, band(kThree, kHalfp1), col1, cols_body});
    t.push_back({"step5.case2", row2, band(kHalfp2, kNm1), col1, cols_body});
    t.push_back({"step5.case3", row2, rown, col1, cols_body});

    // Body row pairs from row 3 on.
    t.push_back({"step6.case1", band(kThree, kHalfp1), band(kThree, kNm1), col1, cols_body});
    t.push_back({"step6.case2", band(kHalfp2, kNm1), band(kHalfp2, kNm1), col1, cols_body});

    // Rows 3..n/2+1 against row n.
    t.push_back({"step7.case1", band(kThree, kHalfp1), rown, col1, band(kTwo, kHalfm1)});
    t.push_back({"step7.case2", band(kThree, kHalfp1), rown, col1, band(kHalf, kNm2)});
    t.push_back({"step7.case3", band(kThree, kHalfp1), rown, col1, band(kNm1, kNm1)});
    t.push_back({"step7.case4", band(kThree, kHalfp1), rown, col1, band(kN, kN)});

    // Rows n/2+2..n-1 against row n.
    t.push_back({"step8.case1", band(kHalfp2, kNm1), rown, col1, band(kTwo, kHalfm1)});
    t.push_back({"step8.case2", band(kHalfp2, kNm1), rown, col1, band(kHalf, kNm2)});
    t.push_back({"step8.case3", band(kHalfp2, kNm1), rown, col1, band(kNm1, kNm1)});
    t.push_back({"step8.case4", band(kHalfp2, kNm1), rown, col1, band(kN, kN)});

    return t;
}

}  // namespace

const std::vector<Region>& region_table(TypeTag tag) {
    // The three families share the same case boundaries today; the table is
    // keyed by family so a family-specific split has somewhere to live.
    static const std::vector<Region> type1 = make_table();
    static const std::vector<Region> type2 = make_table();
    static const std::vector<Region> type3 = make_table();
    switch (tag) {
        case TypeTag::Type1: return type1;
        case TypeTag::Type2: return type2;
        case TypeTag::Type3: return type3;
        default: throw std::invalid_argument("no region table for unsupported orders");
    }
}

CoverageMap partition_coverage(const ColoringMatrix& mat) {
    return partition_coverage(mat, region_table(mat.type()));
}

CoverageMap partition_coverage(const ColoringMatrix& mat, const std::vector<Region>& table) {
    const int n = mat.order();
    CoverageMap map;
    map.n = n;
    map.regions.reserve(table.size());
    for (const Region& r : table) map.regions.push_back(RegionStats{r.id, 0, 0});

    for (int i = 1; i <= n - 1; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int l = 1; l <= n - 1; ++l)
                for (int m = l + 1; m <= n; ++m) {
                    int hit = -1;
                    for (std::size_t r = 0; r < table.size(); ++r) {
                        const Region& reg = table[r];
                        if (reg.i.contains(i, n) && reg.j.contains(j, n) && reg.l.contains(l, n) &&
                            reg.m.contains(m, n)) {
                            if (hit >= 0)
                                throw std::logic_error("regions " + table[static_cast<std::size_t>(hit)].id +
                                                       " and " + reg.id + " overlap");
                            hit = static_cast<int>(r);
                        }
                    }
                    if (hit < 0) throw RegionGap(i, j, l, m);
                    RegionStats& stats = map.regions[static_cast<std::size_t>(hit)];
                    ++stats.quadruples;
                    ++map.total_quadruples;
                    if (classify_quadruple(mat.at(i, l), mat.at(i, m), mat.at(j, l), mat.at(j, m)) < 3)
                        ++stats.violations;
                }
    return map;
}

}  // namespace rainbow
