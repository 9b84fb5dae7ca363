#include "rainbow/interpretation.hpp"

#include <algorithm>

namespace rainbow {

namespace {

// Inclusive bound affine in n: (cn*n + c0)/den.
struct Bound {
    int cn = 0;
    int c0 = 0;
    int den = 1;
};

int eval_bound(const Bound& b, int n) {
    const long long num = static_cast<long long>(b.cn) * n + b.c0;
    if (num % b.den != 0)
        throw BranchTableError("branch bound (" + std::to_string(b.cn) + "n+" + std::to_string(b.c0) +
                               ")/" + std::to_string(b.den) + " is fractional at n = " + std::to_string(n));
    return static_cast<int>(num / b.den);
}

struct BranchDef {
    Bound lo, hi;
    int ci = 0, cn = 0, c0 = 0, den = 1;
};

Branch resolve(const BranchDef& s, int n) {
    return Branch{eval_bound(s.lo, n), eval_bound(s.hi, n), s.ci, s.cn, s.c0, s.den};
}

// Common index bounds.
constexpr Bound kOne{0, 1, 1};
constexpr Bound kTwo{0, 2, 1};
constexpr Bound kThree{0, 3, 1};
constexpr Bound kN{1, 0, 1};
constexpr Bound kNm1{1, -1, 1};
constexpr Bound kNm2{1, -2, 1};
constexpr Bound kHalfm2{1, -4, 2};  // n/2 - 2
constexpr Bound kHalfm1{1, -2, 2};  // n/2 - 1
constexpr Bound kHalf{1, 0, 2};
constexpr Bound kHalfp1{1, 2, 2};
constexpr Bound kHalfp2{1, 4, 2};
constexpr Bound kHalfp3{1, 6, 2};

// Values, as (ci*idx + cn*n + c0)/den.
struct Val {
    int ci = 0, cn = 0, c0 = 0, den = 1;
};
constexpr Val kV1{0, 0, 1, 1};
constexpr Val kV3{0, 0, 3, 1};
constexpr Val kVn{0, 1, 0, 1};
constexpr Val kVnm1{0, 1, -1, 1};
constexpr Val kVnm2{0, 1, -2, 1};
constexpr Val kTail1{2, -1, -2, 1};  // 2(idx-1) - n
constexpr Val kTail2{2, -1, -4, 1};  // 2(idx-2) - n
constexpr Val kUhead1{-2, 1, 0, 1};  // n - 2*idx
constexpr Val kUhead2{-2, 1, -2, 1};  // n - 2(idx+1)

BranchDef def(Bound lo, Bound hi, Val v) { return BranchDef{lo, hi, v.ci, v.cn, v.c0, v.den}; }

void validate(std::vector<Branch>& branches, int n, const char* which) {
    // The tail branch ending at n-1 may evaluate past it under shifted splits
    // at small n; its upper end is clamped and empty branches are allowed, but
    // the nonempty ones must tile [1, n] exactly.
    int cursor = 1;
    for (const Branch& b : branches) {
        if (b.empty()) continue;
        if (b.lo != cursor)
            throw BranchTableError(std::string(which) + " branches do not tile [1, n] at n = " +
                                   std::to_string(n) + ": expected next index " + std::to_string(cursor) +
                                   ", got " + std::to_string(b.lo));
        cursor = b.hi + 1;
    }
    if (cursor != n + 1)
        throw BranchTableError(std::string(which) + " branches stop at index " + std::to_string(cursor - 1) +
                               " instead of n = " + std::to_string(n));
}

// The Type-3 special-slot value n-9 is overridden for the exceptional orders.
Val type3_special(Variant variant) {
    switch (variant) {
        case Variant::ExceptionN10: return Val{0, 1, -8, 1};
        case Variant::ExceptionN16: return Val{0, 1, -11, 1};
        case Variant::ExceptionN22: return Val{0, 1, -5, 1};
        default: return Val{0, 1, -9, 1};
    }
}

bool early_split(const TypeClass& cls, const InterpretationConfig& cfg) {
    if (cfg.type3_split == Type3Split::EarlyTail) return true;
    // n = 22 carries its own overridden split, which is the early one.
    return cfg.type3_split == Type3Split::AsWritten && cls.variant == Variant::ExceptionN22;
}

}  // namespace

Color Branch::eval(int idx, int n) const {
    const long long num = static_cast<long long>(ci) * idx + static_cast<long long>(cn) * n + c0;
    if (num % den != 0)
        throw BranchTableError("branch value is fractional at index " + std::to_string(idx) +
                               ", n = " + std::to_string(n));
    return static_cast<Color>(num / den);
}

std::vector<Branch> first_column_branches(int n, const TypeClass& cls, const InterpretationConfig& cfg) {
    if (!cls.supported())
        throw UnsupportedOrder(n, cls.reason);
    if (cls.variant == Variant::ExceptionN6)
        throw BranchTableError("n = 6 is defined by literal vectors, not branches");

    std::vector<BranchDef> specs;
    specs.push_back(def(kOne, kOne, kV1));
    specs.push_back(def(kTwo, kTwo, kV3));
    specs.push_back(def(kThree, kHalfp1, kVn));
    switch (cls.tag) {
        case TypeTag::Type1:
            specs.push_back(def(kHalfp2, kNm1, kTail1));
            break;
        case TypeTag::Type2: {
            const Val y = (cls.k % 2 == 0) ? Val{0, 1, -4, 2} : Val{0, 1, 2, 2};
            specs.push_back(def(kHalfp2, kHalfp2, y));
            specs.push_back(def(kHalfp3, kNm1, kTail2));
            break;
        }
        case TypeTag::Type3: {
            specs.push_back(def(kHalfp2, kHalfp2, type3_special(cls.variant)));
            Bound split_hi, split_lo2;
            if (early_split(cls, cfg)) {
                split_hi = Bound{5, -2, 6};
                split_lo2 = Bound{5, 4, 6};
            } else if (cfg.type3_split == Type3Split::LateTail) {
                split_hi = Bound{5, 10, 6};
                split_lo2 = Bound{5, 16, 6};
            } else {
                split_hi = Bound{5, 4, 6};
                split_lo2 = Bound{5, 10, 6};
            }
            specs.push_back(def(kHalfp3, split_hi, kTail2));
            specs.push_back(def(split_lo2, kNm1, kTail1));
            break;
        }
        default: break;
    }
    specs.push_back(def(kN, kN, kVnm2));

    std::vector<Branch> branches;
    branches.reserve(specs.size());
    for (const BranchDef& s : specs) {
        Branch b = resolve(s, n);
        if (b.hi > n - 1 && b.lo <= n - 1 && &s != &specs.back()) b.hi = n - 1;
        branches.push_back(b);
    }
    validate(branches, n, "first-column");
    return branches;
}

std::vector<Branch> last_row_branches(int n, const TypeClass& cls, const InterpretationConfig& cfg) {
    if (!cls.supported())
        throw UnsupportedOrder(n, cls.reason);
    if (cls.variant == Variant::ExceptionN6)
        throw BranchTableError("n = 6 is defined by literal vectors, not branches");

    std::vector<BranchDef> specs;
    switch (cls.tag) {
        case TypeTag::Type1:
            specs.push_back(def(kOne, kHalfm1, kUhead1));
            break;
        case TypeTag::Type2: {
            const Val y = (cls.k % 2 == 0) ? Val{0, 1, -4, 2} : Val{0, 1, 2, 2};
            specs.push_back(def(kOne, kOne, kVnm2));
            specs.push_back(def(kTwo, kHalfm2, kUhead2));
            specs.push_back(def(kHalfm1, kHalfm1, y));
            break;
        }
        case TypeTag::Type3: {
            Bound split_hi, split_lo2;
            if (early_split(cls, cfg)) {
                split_hi = Bound{1, -10, 6};
                split_lo2 = Bound{1, -4, 6};
            } else if (cfg.type3_split == Type3Split::LateTail) {
                split_hi = Bound{1, 2, 6};
                split_lo2 = Bound{1, 8, 6};
            } else {
                split_hi = Bound{1, -4, 6};
                split_lo2 = Bound{1, 2, 6};
            }
            specs.push_back(def(kOne, split_hi, kUhead1));
            specs.push_back(def(split_lo2, kHalfm2, kUhead2));
            specs.push_back(def(kHalfm1, kHalfm1, type3_special(cls.variant)));
            break;
        }
        default: break;
    }
    specs.push_back(def(kHalf, kNm2, kVn));
    specs.push_back(def(kNm1, kNm1, kVnm1));
    specs.push_back(def(kN, kN, kV1));

    std::vector<Branch> branches;
    branches.reserve(specs.size());
    for (const BranchDef& s : specs) branches.push_back(resolve(s, n));
    validate(branches, n, "last-row");
    return branches;
}

std::string InterpretationConfig::name() const {
    std::vector<std::string> parts;
    if (exponent_rule == ExponentRule::RowOffset) parts.push_back("exp-offset");
    if (residue_rule == ResidueRule::ZeroShift) parts.push_back("res-shift");
    if (type3_split == Type3Split::EarlyTail) parts.push_back("t3-early");
    if (type3_split == Type3Split::LateTail) parts.push_back("t3-late");
    if (parts.empty()) return "default";
    std::string out = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i) out += "+" + parts[i];
    return out;
}

const std::vector<InterpretationConfig>& interpretation_grid() {
    static const std::vector<InterpretationConfig> grid = [] {
        std::vector<InterpretationConfig> out;
        for (Type3Split split : {Type3Split::AsWritten, Type3Split::EarlyTail, Type3Split::LateTail})
            for (ResidueRule res : {ResidueRule::OneBased, ResidueRule::ZeroShift})
                for (ExponentRule exp : {ExponentRule::RowComplement, ExponentRule::RowOffset})
                    out.push_back(InterpretationConfig{exp, res, split});
        return out;
    }();
    return grid;
}

std::optional<InterpretationConfig> interpretation_by_name(std::string_view name) {
    for (const InterpretationConfig& cfg : interpretation_grid())
        if (cfg.name() == name) return cfg;
    return std::nullopt;
}

std::vector<std::string> interpretation_names() {
    std::vector<std::string> names;
    for (const InterpretationConfig& cfg : interpretation_grid()) names.push_back(cfg.name());
    return names;
}

}  // namespace rainbow
