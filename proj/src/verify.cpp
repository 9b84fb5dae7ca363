#include "rainbow/verify.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace rainbow {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t pairs_of(std::int64_t n) { return n * (n - 1) / 2; }

int count_colors(const Grid& g) {
    std::vector<char> seen(static_cast<std::size_t>(g.max_color()) + 1, 0);
    int used = 0;
    for (Color c : g.cells())
        if (!seen[static_cast<std::size_t>(c)]) {
            seen[static_cast<std::size_t>(c)] = 1;
            ++used;
        }
    return used;
}

void check_colors_positive(const Grid& g) {
    for (Color c : g.cells())
        if (c < 1) throw std::invalid_argument("grid colors must be >= 1");
}

// Scratch space reused across row pairs; cleared via the touched-color list so
// a row pair costs O(cols), not O(color space).
struct FastScratch {
    explicit FastScratch(int max_color)
        : single_count(static_cast<std::size_t>(max_color) + 1, 0),
          pair_count(static_cast<std::size_t>(max_color) + 1, 0),
          singles_by_color(static_cast<std::size_t>(max_color) + 1),
          pairs_by_color(static_cast<std::size_t>(max_color) + 1),
          marked(static_cast<std::size_t>(max_color) + 1, 0) {}

    std::vector<int> single_count;
    std::vector<int> pair_count;
    std::vector<std::vector<int>> singles_by_color;
    std::vector<std::vector<int>> pairs_by_color;
    std::vector<char> marked;
    std::vector<int> touched;
    std::vector<int> all_singles;
    std::vector<std::pair<std::int64_t, int>> pair_sigs;  // (signature key, column)

    void mark(int c) {
        if (!marked[static_cast<std::size_t>(c)]) {
            marked[static_cast<std::size_t>(c)] = 1;
            touched.push_back(c);
        }
    }

    void reset() {
        for (int c : touched) {
            single_count[static_cast<std::size_t>(c)] = 0;
            pair_count[static_cast<std::size_t>(c)] = 0;
            singles_by_color[static_cast<std::size_t>(c)].clear();
            pairs_by_color[static_cast<std::size_t>(c)].clear();
            marked[static_cast<std::size_t>(c)] = 0;
        }
        touched.clear();
        all_singles.clear();
        pair_sigs.clear();
    }
};

}  // namespace

int classify_quadruple(Color a, Color b, Color c, Color d) {
    int distinct = 1;
    if (b != a) ++distinct;
    if (c != a && c != b) ++distinct;
    if (d != a && d != b && d != c) ++distinct;
    return distinct;
}

int VerificationReport::n() const {
    if (rows != cols) throw std::logic_error("report is for a non-square grid");
    return rows;
}

VerificationReport verify_naive(const Grid& g, const VerifyOptions& opt) {
    check_colors_positive(g);
    const auto start = Clock::now();
    VerificationReport rep;
    rep.rows = g.rows();
    rep.cols = g.cols();
    rep.colors_used = count_colors(g);
    rep.quadruples_checked = pairs_of(g.rows()) * pairs_of(g.cols());

    for (int i = 1; i <= g.rows() - 1; ++i)
        for (int j = i + 1; j <= g.rows(); ++j)
            for (int l = 1; l <= g.cols() - 1; ++l)
                for (int m = l + 1; m <= g.cols(); ++m) {
                    const Color a = g.at(i, l), b = g.at(i, m), c = g.at(j, l), d = g.at(j, m);
                    const int distinct = classify_quadruple(a, b, c, d);
                    if (distinct < opt.min_distinct) {
                        ++rep.violation_count;
                        if (rep.violations.size() < opt.store_limit)
                            rep.violations.push_back(Violation{i, j, l, m, {a, b, c, d}, distinct});
                    }
                }

    rep.truncated = rep.violation_count > static_cast<std::int64_t>(rep.violations.size());
    rep.elapsed = Clock::now() - start;
    return rep;
}

VerificationReport verify_fast(const Grid& g, const VerifyOptions& opt) {
    if (opt.min_distinct != 3)
        throw std::invalid_argument("verify_fast implements the three-distinct-colors check only");
    check_colors_positive(g);
    const auto start = Clock::now();
    VerificationReport rep;
    rep.rows = g.rows();
    rep.cols = g.cols();
    rep.colors_used = count_colors(g);
    rep.quadruples_checked = pairs_of(g.rows()) * pairs_of(g.cols());

    const int cols = g.cols();
    const int max_color = g.max_color();
    FastScratch ws(max_color);
    const auto key_of = [max_color](int x, int y) {
        return static_cast<std::int64_t>(x) * (max_color + 1) + y;
    };

    for (int i = 1; i <= g.rows() - 1; ++i)
        for (int j = i + 1; j <= g.rows(); ++j) {
            ws.reset();
            for (int l = 1; l <= cols; ++l) {
                const Color a = g.at(i, l), b = g.at(j, l);
                const int x = std::min(a, b), y = std::max(a, b);
                if (x == y) {
                    ws.mark(x);
                    ++ws.single_count[static_cast<std::size_t>(x)];
                    ws.singles_by_color[static_cast<std::size_t>(x)].push_back(l);
                    ws.all_singles.push_back(l);
                } else {
                    ws.mark(x);
                    ws.mark(y);
                    ++ws.pair_count[static_cast<std::size_t>(x)];
                    ++ws.pair_count[static_cast<std::size_t>(y)];
                    ws.pairs_by_color[static_cast<std::size_t>(x)].push_back(l);
                    ws.pairs_by_color[static_cast<std::size_t>(y)].push_back(l);
                    ws.pair_sigs.emplace_back(key_of(x, y), l);
                }
            }

            // Count first: any two singleton columns clash, a singleton
            // clashes with every pair column containing its color, and equal
            // pair signatures clash.
            std::int64_t count = pairs_of(static_cast<std::int64_t>(ws.all_singles.size()));
            for (int c : ws.touched)
                count += static_cast<std::int64_t>(ws.single_count[static_cast<std::size_t>(c)]) *
                         ws.pair_count[static_cast<std::size_t>(c)];
            std::sort(ws.pair_sigs.begin(), ws.pair_sigs.end());
            for (std::size_t a = 0; a < ws.pair_sigs.size();) {
                std::size_t b = a;
                while (b < ws.pair_sigs.size() && ws.pair_sigs[b].first == ws.pair_sigs[a].first) ++b;
                count += pairs_of(static_cast<std::int64_t>(b - a));
                a = b;
            }
            rep.violation_count += count;

            if (count == 0 || rep.violations.size() >= opt.store_limit) continue;

            // Enumerate this row pair's violating column pairs in (l, m)
            // order by merging the sorted candidate lists for each l. The
            // three sources are disjoint, so plain merging emits each m once.
            for (int l = 1; l <= cols && rep.violations.size() < opt.store_limit; ++l) {
                const Color a = g.at(i, l), b = g.at(j, l);
                const int x = std::min(a, b), y = std::max(a, b);
                const std::vector<int>* list0;
                const std::vector<int>* list1;
                std::size_t gi = 0, gend = 0;  // same-signature range inside pair_sigs
                if (x == y) {
                    list0 = &ws.all_singles;
                    list1 = &ws.pairs_by_color[static_cast<std::size_t>(x)];
                } else {
                    list0 = &ws.singles_by_color[static_cast<std::size_t>(x)];
                    list1 = &ws.singles_by_color[static_cast<std::size_t>(y)];
                    const std::int64_t key = key_of(x, y);
                    const std::pair<std::int64_t, int> from{key, l + 1};
                    const std::pair<std::int64_t, int> to{key, std::numeric_limits<int>::max()};
                    gi = static_cast<std::size_t>(
                        std::lower_bound(ws.pair_sigs.begin(), ws.pair_sigs.end(), from) -
                        ws.pair_sigs.begin());
                    gend = static_cast<std::size_t>(
                        std::lower_bound(ws.pair_sigs.begin(), ws.pair_sigs.end(), to) -
                        ws.pair_sigs.begin());
                }
                std::size_t p0 = static_cast<std::size_t>(
                    std::upper_bound(list0->begin(), list0->end(), l) - list0->begin());
                std::size_t p1 = static_cast<std::size_t>(
                    std::upper_bound(list1->begin(), list1->end(), l) - list1->begin());

                while (rep.violations.size() < opt.store_limit) {
                    int next = std::numeric_limits<int>::max();
                    int which = -1;
                    if (p0 < list0->size() && (*list0)[p0] < next) {
                        next = (*list0)[p0];
                        which = 0;
                    }
                    if (p1 < list1->size() && (*list1)[p1] < next) {
                        next = (*list1)[p1];
                        which = 1;
                    }
                    if (gi < gend && ws.pair_sigs[gi].second < next) {
                        next = ws.pair_sigs[gi].second;
                        which = 2;
                    }
                    if (which < 0) break;
                    const Color am = g.at(i, next), bm = g.at(j, next);
                    rep.violations.push_back(Violation{
                        i, j, l, next, {a, am, b, bm}, classify_quadruple(a, am, b, bm)});
                    if (which == 0) ++p0;
                    else if (which == 1) ++p1;
                    else ++gi;
                }
            }
        }

    rep.truncated = rep.violation_count > static_cast<std::int64_t>(rep.violations.size());
    rep.elapsed = Clock::now() - start;
    return rep;
}

}  // namespace rainbow
