#include "rainbow/search.hpp"

#include <stdexcept>

#include "rainbow/construction.hpp"
#include "rainbow/verify.hpp"

namespace rainbow {

namespace {

struct Backtracker {
    int rows;
    int cols;
    int q;
    int palette;
    std::int64_t budget;
    std::int64_t nodes = 0;
    bool out_of_budget = false;
    std::vector<Color> cells;  // row-major, 0 = unassigned

    Backtracker(int rows_, int cols_, int q_, int palette_, std::int64_t budget_)
        : rows(rows_), cols(cols_), q(q_), palette(palette_), budget(budget_),
          cells(static_cast<std::size_t>(rows_) * cols_, 0) {}

    Color cell(int r, int c) const { return cells[static_cast<std::size_t>(r) * cols + c]; }

    // Every quadruple completed by assigning (r, c) must already show >= q
    // distinct colors; assignment order is row-major, so the completed ones
    // pair (r, c) with an earlier row and an earlier column.
    bool consistent(int r, int c) const {
        const Color d = cell(r, c);
        for (int r2 = 0; r2 < r; ++r2) {
            const Color b = cell(r2, c);
            for (int c2 = 0; c2 < c; ++c2)
                if (classify_quadruple(cell(r2, c2), b, cell(r, c2), d) < q) return false;
        }
        return true;
    }

    bool dfs(int pos, int used) {
        if (pos == rows * cols) return true;
        const int r = pos / cols, c = pos % cols;
        const int highest = std::min(palette, used + 1);
        for (Color color = 1; color <= highest; ++color) {
            if (++nodes > budget) {
                out_of_budget = true;
                return false;
            }
            cells[static_cast<std::size_t>(pos)] = color;
            if (consistent(r, c) && dfs(pos + 1, std::max(used, color))) return true;
            if (out_of_budget) break;
        }
        cells[static_cast<std::size_t>(pos)] = 0;
        return false;
    }
};

}  // namespace

SearchResult min_colors_exhaustive(int rows, int cols, int q, int max_colors, const SearchOptions& opt) {
    if (rows < 1 || cols < 1) throw std::invalid_argument("part sizes must be >= 1");
    if (q < 2 || q > 4) throw std::invalid_argument("q must be 2, 3 or 4");
    if (max_colors < 1) throw std::invalid_argument("max_colors must be >= 1");

    SearchResult result;
    result.rows = rows;
    result.cols = cols;
    result.q = q;
    result.max_colors = max_colors;

    if (rows < 2 || cols < 2) {
        // No 4-cycle exists, so one color suffices.
        result.min_colors = 1;
        result.witness = Grid(rows, cols, 1);
        return result;
    }

    // A single quadruple already needs q distinct colors, so palettes below q
    // are infeasible by pigeonhole and the scan starts at q.
    if (max_colors < q) {
        result.infeasible_up_to_max = true;
        return result;
    }

    std::int64_t nodes = 0;
    for (int palette = q; palette <= max_colors; ++palette) {
        Backtracker bt(rows, cols, q, palette, opt.node_budget - nodes);
        const bool found = bt.dfs(0, 0);
        nodes += bt.nodes;
        result.nodes = nodes;
        if (found) {
            result.min_colors = palette;
            Grid witness(rows, cols);
            for (int r = 1; r <= rows; ++r)
                for (int c = 1; c <= cols; ++c) witness.at(r, c) = bt.cell(r - 1, c - 1);
            result.witness = std::move(witness);
            return result;
        }
        if (bt.out_of_budget) {
            result.status = SearchStatus::BudgetExceeded;
            return result;
        }
    }
    result.infeasible_up_to_max = true;
    return result;
}

WitnessReport verify_bound_witness(int n, const InterpretationConfig& cfg) {
    WitnessReport report;
    report.n = n;
    try {
        const ColoringMatrix mat = build_matrix(n, cfg);
        report.type = to_string(mat.type());
        const VerificationReport ver = verify_fast(mat.grid());
        report.colors_used = ver.colors_used;
        report.violations = ver.violation_count;
        report.pass = ver.violation_count == 0 && ver.colors_used <= n;
    } catch (const std::exception& e) {
        report.pass = false;
        report.failure = e.what();
    }
    return report;
}

}  // namespace rainbow
