#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rainbow {

// Edge colors are small positive integers; a matrix of order n uses 1..n.
using Color = int;

/// Dense rows x cols grid of colors with 1-based (row, column) access.
/// Row i is a left-part vertex of K_{rows,cols}, column l a right-part vertex,
/// so cell (i, l) is the color of the edge between them.
class Grid {
public:
    Grid(int rows, int cols, Color fill = 0);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    Color at(int i, int l) const { return cells_[index(i, l)]; }
    Color& at(int i, int l) { return cells_[index(i, l)]; }

    const std::vector<Color>& cells() const { return cells_; }
    Color max_color() const;

    bool operator==(const Grid&) const = default;

private:
    std::size_t index(int i, int l) const;

    int rows_;
    int cols_;
    std::vector<Color> cells_;
};

enum class TypeTag { Type1, Type2, Type3, Unsupported };
enum class Variant { Regular, ExceptionN6, ExceptionN10, ExceptionN16, ExceptionN22 };

std::string to_string(TypeTag tag);
std::string to_string(Variant variant);

/// Which construction family governs an order n, plus the family parameters:
///   Type1: n = 2+6k (k >= 1), Type2: n = 6+6k (k >= 0), Type3: n = 4+6k (k >= 1).
/// Odd n, n = 2 and n = 4 have no construction and classify as Unsupported.
struct TypeClass {
    TypeTag tag = TypeTag::Unsupported;
    int k = 0;
    Variant variant = Variant::Regular;
    std::optional<Color> y_value;  // Type 2 only: n/2-2 for even k, n/2+1 for odd k
    std::string reason;            // Unsupported only

    bool supported() const { return tag != TypeTag::Unsupported; }
    bool exceptional() const { return variant != Variant::Regular; }
};

struct UnsupportedOrder : std::runtime_error {
    UnsupportedOrder(int n, const std::string& why);
    int n;
};

struct CornerMismatch : std::runtime_error {
    CornerMismatch(int n, Color from_column, Color from_row);
    int n;
    Color from_column;
    Color from_row;
};

struct BranchTableError : std::runtime_error {
    explicit BranchTableError(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
    ParseError(const std::string& what, int line, int column);
    int line;
    int column;
};

/// A generated coloring of K_{n,n}: square, immutable, every entry in 1..n.
class ColoringMatrix {
public:
    ColoringMatrix(Grid grid, TypeTag type);

    int order() const { return grid_.rows(); }
    TypeTag type() const { return type_; }
    Color at(int i, int l) const { return grid_.at(i, l); }
    const Grid& grid() const { return grid_; }

private:
    Grid grid_;
    TypeTag type_;
};

}  // namespace rainbow
