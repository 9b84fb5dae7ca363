#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "rainbow/interpretation.hpp"
#include "rainbow/types.hpp"

namespace rainbow {

struct SearchOptions {
    std::int64_t node_budget = 100'000'000;
};

enum class SearchStatus { Exact, BudgetExceeded };

struct SearchResult {
    int rows = 0;
    int cols = 0;
    int q = 3;
    int max_colors = 0;
    std::optional<int> min_colors;      // smallest feasible palette, when proven
    bool infeasible_up_to_max = false;  // proven min_colors > max_colors
    std::optional<Grid> witness;        // lexicographically smallest canonical coloring
    std::int64_t nodes = 0;
    SearchStatus status = SearchStatus::Exact;
};

/// Exact minimum number of colors for a rows x cols grid in which every
/// quadruple (row pair x column pair) must show at least q distinct colors.
/// Backtracking over cells in row-major order with canonical color order
/// (color c+1 may first appear only after 1..c have appeared); palettes are
/// tried ascending from q, so the first feasible palette is the minimum and
/// the returned witness is the lexicographically smallest canonical one.
/// Exceeding the node budget yields status BudgetExceeded and no answer.
SearchResult min_colors_exhaustive(int rows, int cols, int q, int max_colors,
                                   const SearchOptions& opt = {});

/// Builds the order-n coloring and checks it witnesses the n-color bound:
/// zero violations and at most n colors used.
struct WitnessReport {
    int n = 0;
    std::string type;
    bool pass = false;
    int colors_used = 0;
    std::int64_t violations = 0;
    std::string failure;  // build error text, if any
};

WitnessReport verify_bound_witness(int n, const InterpretationConfig& cfg = {});

}  // namespace rainbow
