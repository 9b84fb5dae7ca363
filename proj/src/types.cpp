#include "rainbow/types.hpp"

#include <algorithm>
#include <cassert>

namespace rainbow {

Grid::Grid(int rows, int cols, Color fill) : rows_(rows), cols_(cols) {
    if (rows < 1 || cols < 1)
        throw std::invalid_argument("grid dimensions must be positive");
    cells_.assign(static_cast<std::size_t>(rows) * cols, fill);
}

std::size_t Grid::index(int i, int l) const {
    assert(1 <= i && i <= rows_ && 1 <= l && l <= cols_);
    return static_cast<std::size_t>(i - 1) * cols_ + (l - 1);
}

Color Grid::max_color() const {
    return *std::max_element(cells_.begin(), cells_.end());
}

std::string to_string(TypeTag tag) {
    switch (tag) {
        case TypeTag::Type1: return "Type1";
        case TypeTag::Type2: return "Type2";
        case TypeTag::Type3: return "Type3";
        case TypeTag::Unsupported: return "Unsupported";
    }
    return "?";
}

std::string to_string(Variant variant) {
    switch (variant) {
        case Variant::Regular: return "Regular";
        case Variant::ExceptionN6: return "ExceptionN6";
        case Variant::ExceptionN10: return "ExceptionN10";
        case Variant::ExceptionN16: return "ExceptionN16";
        case Variant::ExceptionN22: return "ExceptionN22";
    }
    return "?";
}

UnsupportedOrder::UnsupportedOrder(int n_, const std::string& why)
    : std::runtime_error("n = " + std::to_string(n_) + ": " + why), n(n_) {}

CornerMismatch::CornerMismatch(int n_, Color from_column_, Color from_row_)
    : std::runtime_error("n = " + std::to_string(n_) + ": corner cell (n,1) differs, first column gives " +
                         std::to_string(from_column_) + " but last row gives " + std::to_string(from_row_)),
      n(n_),
      from_column(from_column_),
      from_row(from_row_) {}

ParseError::ParseError(const std::string& what, int line_, int column_)
    : std::runtime_error("line " + std::to_string(line_) + ", column " + std::to_string(column_) + ": " + what),
      line(line_),
      column(column_) {}

ColoringMatrix::ColoringMatrix(Grid grid, TypeTag type) : grid_(std::move(grid)), type_(type) {
    if (!grid_.square())
        throw std::invalid_argument("coloring matrix must be square");
    const int n = grid_.rows();
    for (Color c : grid_.cells())
        if (c < 1 || c > n)
            throw std::invalid_argument("coloring matrix entry " + std::to_string(c) +
                                        " outside 1.." + std::to_string(n));
}

}  // namespace rainbow
