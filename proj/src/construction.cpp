#include "rainbow/construction.hpp"

#include <stdexcept>

namespace rainbow {

namespace {

int floor_mod(long long x, int m) {
    int r = static_cast<int>(x % m);
    return r < 0 ? r + m : r;
}

// n = 6 is given as literal vectors. The five listed first-column values are
// rows 1..5; the shared corner (n,1) is read from the last row's first entry.
constexpr Color kFirstColumn6[6] = {1, 5, 6, 6, 4, 3};
constexpr Color kLastRow6[6] = {3, 6, 6, 6, 5, 1};

std::vector<Color> eval_branches(const std::vector<Branch>& branches, int n) {
    std::vector<Color> out(static_cast<std::size_t>(n));
    for (const Branch& b : branches)
        for (int idx = b.lo; idx <= b.hi; ++idx) {
            const Color c = b.eval(idx, n);
            if (c < 1 || c > n)
                throw BranchTableError("branch value " + std::to_string(c) + " outside 1.." +
                                       std::to_string(n) + " at index " + std::to_string(idx));
            out[static_cast<std::size_t>(idx - 1)] = c;
        }
    return out;
}

}  // namespace

TypeClass classify(int n) {
    if (n < 1) throw std::invalid_argument("order must be >= 1");
    TypeClass cls;
    if (n % 2 == 1) {
        cls.reason = "no construction for odd orders";
        return cls;
    }
    if (n == 2 || n == 4) {
        cls.reason = "no construction for n = " + std::to_string(n) + " (smallest covered order is 6)";
        return cls;
    }
    switch (n % 6) {
        case 2:
            cls.tag = TypeTag::Type1;
            cls.k = (n - 2) / 6;
            break;
        case 0:
            cls.tag = TypeTag::Type2;
            cls.k = (n - 6) / 6;
            cls.variant = (n == 6) ? Variant::ExceptionN6 : Variant::Regular;
            cls.y_value = (cls.k % 2 == 0) ? n / 2 - 2 : n / 2 + 1;
            break;
        case 4:
            cls.tag = TypeTag::Type3;
            cls.k = (n - 4) / 6;
            if (n == 10) cls.variant = Variant::ExceptionN10;
            else if (n == 16) cls.variant = Variant::ExceptionN16;
            else if (n == 22) cls.variant = Variant::ExceptionN22;
            break;
    }
    return cls;
}

Color sigma_power(int r, int c, int n, const InterpretationConfig& cfg) {
    if (n < 3) throw std::invalid_argument("sigma_power requires n >= 3");
    const long long x = static_cast<long long>(r) + c;
    const int m = n - 1;
    if (cfg.residue_rule == ResidueRule::OneBased)
        return floor_mod(x - 1, m) + 1;
    return floor_mod(x, m) + 1;
}

int row_exponent(int i, int n, const InterpretationConfig& cfg) {
    return cfg.exponent_rule == ExponentRule::RowComplement ? (n + 1) - i : i - 1;
}

Color body_entry(int i, int l, int n, const InterpretationConfig& cfg) {
    if (i < 1 || i > n - 1 || l < 2 || l > n)
        throw std::invalid_argument("body cell (" + std::to_string(i) + "," + std::to_string(l) +
                                    ") outside rows 1..n-1, columns 2..n");
    if (i == 1) return l;
    return sigma_power(row_exponent(i, n, cfg), l - 1, n, cfg);
}

std::vector<Color> first_column(int n, const TypeClass& cls, const InterpretationConfig& cfg) {
    if (!cls.supported()) throw UnsupportedOrder(n, cls.reason);
    if (cls.variant == Variant::ExceptionN6)
        return std::vector<Color>(kFirstColumn6, kFirstColumn6 + 6);
    return eval_branches(first_column_branches(n, cls, cfg), n);
}

std::vector<Color> last_row(int n, const TypeClass& cls, const InterpretationConfig& cfg) {
    if (!cls.supported()) throw UnsupportedOrder(n, cls.reason);
    if (cls.variant == Variant::ExceptionN6)
        return std::vector<Color>(kLastRow6, kLastRow6 + 6);
    return eval_branches(last_row_branches(n, cls, cfg), n);
}

ColoringMatrix build_matrix(int n, const InterpretationConfig& cfg) {
    const TypeClass cls = classify(n);
    if (!cls.supported()) throw UnsupportedOrder(n, cls.reason);

    const std::vector<Color> column = first_column(n, cls, cfg);
    const std::vector<Color> row = last_row(n, cls, cfg);
    if (column[static_cast<std::size_t>(n - 1)] != row[0])
        throw CornerMismatch(n, column[static_cast<std::size_t>(n - 1)], row[0]);

    Grid g(n, n);
    for (int i = 1; i <= n - 1; ++i) {
        g.at(i, 1) = column[static_cast<std::size_t>(i - 1)];
        for (int l = 2; l <= n; ++l) g.at(i, l) = body_entry(i, l, n, cfg);
    }
    for (int l = 1; l <= n; ++l) g.at(n, l) = row[static_cast<std::size_t>(l - 1)];
    return ColoringMatrix(std::move(g), cls.tag);
}

std::vector<int> covered_orders(int from, int to) {
    std::vector<int> out;
    for (int n = std::max(from, 1); n <= to; ++n)
        if (n % 2 == 0 && classify(n).supported()) out.push_back(n);
    return out;
}

}  // namespace rainbow
