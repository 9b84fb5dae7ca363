#pragma once

#include <vector>

#include "rainbow/interpretation.hpp"
#include "rainbow/types.hpp"

namespace rainbow {

/// Total over n >= 1. Unsupported is a value, not an error.
TypeClass classify(int n);

/// sigma^(r)(c): the r-th power of the (n-1)-cycle (1 2 ... n-1) applied to c,
/// i.e. the representative of r+c chosen by cfg.residue_rule. Accepts any
/// integers r, c (negatives normalize). Requires n >= 3.
Color sigma_power(int r, int c, int n, const InterpretationConfig& cfg = {});

/// Exponent carried by body row i under cfg.exponent_rule.
int row_exponent(int i, int n, const InterpretationConfig& cfg = {});

/// Body cell (i, l) for 1 <= i <= n-1, 2 <= l <= n: row 1 is (2, 3, ..., n)
/// shifted in by the first column, so entry l; rows 2..n-1 are
/// sigma_power(row_exponent(i), l-1).
Color body_entry(int i, int l, int n, const InterpretationConfig& cfg = {});

/// First column (a_{1,1}, ..., a_{n,1}) of the matrix for a supported class.
std::vector<Color> first_column(int n, const TypeClass& cls,
                                const InterpretationConfig& cfg = {});

/// Last row (a_{n,1}, ..., a_{n,n}).
std::vector<Color> last_row(int n, const TypeClass& cls,
                            const InterpretationConfig& cfg = {});

/// Assembles the full n x n coloring: column 1 from first_column, row n from
/// last_row, everything else from body_entry. Throws UnsupportedOrder for
/// orders without a construction and CornerMismatch if the first-column and
/// last-row tables disagree on the shared cell (n, 1).
ColoringMatrix build_matrix(int n, const InterpretationConfig& cfg = {});

/// Even n in [from, to] with a construction, ascending.
std::vector<int> covered_orders(int from, int to);

}  // namespace rainbow
