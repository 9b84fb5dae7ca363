#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rainbow/types.hpp"

namespace rainbow {

/// How a body row index i maps to the cycle exponent s.
/// RowComplement (default): s = (n+1) - i, so row 2 carries exponent n-1 == 0
/// and exponents descend down the matrix. RowOffset is the reversed reading,
/// s = i - 1.
enum class ExponentRule { RowComplement, RowOffset };

/// Which representative of a residue class mod (n-1) names a color.
/// OneBased (default): ((x-1) mod (n-1)) + 1, values in {1,...,n-1} with the
/// 0 class represented by n-1. ZeroShift: (x mod (n-1)) + 1, the whole cycle
/// relabeled one step forward.
enum class ResidueRule { OneBased, ZeroShift };

/// Placement of the interior split between the two arithmetic tail branches of
/// the Type-3 first-column and last-row tables. AsWritten follows the tables
/// verbatim (n = 22 keeps its own overridden split). EarlyTail moves every
/// split one position earlier (which is exactly the n = 22 override applied to
/// all Type-3 orders); LateTail moves it one position later.
enum class Type3Split { AsWritten, EarlyTail, LateTail };

/// The small set of indexing conventions the construction leaves open.
/// The defaults are the documented reading; the alternatives exist so that
/// calibrate_interpretation can test every combination mechanically.
struct InterpretationConfig {
    ExponentRule exponent_rule = ExponentRule::RowComplement;
    ResidueRule residue_rule = ResidueRule::OneBased;
    Type3Split type3_split = Type3Split::AsWritten;

    bool operator==(const InterpretationConfig&) const = default;
    bool is_default() const { return *this == InterpretationConfig{}; }
    std::string name() const;
};

/// Full variant grid (12 configs), default first, deterministic order.
const std::vector<InterpretationConfig>& interpretation_grid();

std::optional<InterpretationConfig> interpretation_by_name(std::string_view name);
std::vector<std::string> interpretation_names();

/// One piecewise branch of a first-column / last-row table: indices idx in
/// [lo, hi] (inclusive, possibly empty) take the value
/// (ci*idx + cn*n + c0) / den.
struct Branch {
    int lo = 0;
    int hi = -1;
    int ci = 0;
    int cn = 0;
    int c0 = 0;
    int den = 1;

    bool empty() const { return lo > hi; }
    Color eval(int idx, int n) const;
};

/// Branch tables for the first column (indexed by row i) and the last row
/// (indexed by column l), resolved for a concrete order n. The branches tile
/// [1, n] exactly; a table that fails to (possible under shifted variants at
/// small n) throws BranchTableError. n = 6 is defined by literal vectors, not
/// branches, and is rejected here.
std::vector<Branch> first_column_branches(int n, const TypeClass& cls,
                                          const InterpretationConfig& cfg = {});
std::vector<Branch> last_row_branches(int n, const TypeClass& cls,
                                      const InterpretationConfig& cfg = {});

}  // namespace rainbow
