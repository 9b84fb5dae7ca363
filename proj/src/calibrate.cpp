#include "rainbow/calibrate.hpp"

#include <algorithm>

#include "rainbow/construction.hpp"

namespace rainbow {

namespace {

CalibrationEntry run_one(int n, const InterpretationConfig& cfg) {
    CalibrationEntry entry;
    entry.n = n;
    try {
        const ColoringMatrix mat = build_matrix(n, cfg);
        const VerificationReport rep = verify_fast(mat.grid());
        entry.violations = rep.violation_count;
        if (rep.violation_count == 0 && rep.colors_used <= n) {
            entry.status = "pass";
        } else {
            entry.status = "fail";
            if (!rep.violations.empty()) {
                const Violation& v = rep.violations.front();
                entry.detail = "first violation at rows (" + std::to_string(v.i) + "," + std::to_string(v.j) +
                               "), columns (" + std::to_string(v.l) + "," + std::to_string(v.m) + ")";
            }
        }
    } catch (const std::exception& e) {
        entry.status = "build-error";
        entry.detail = e.what();
    }
    return entry;
}

}  // namespace

bool CalibrationResult::passes_somewhere(int n) const {
    const auto it = passing_variants.find(n);
    return it != passing_variants.end() && !it->second.empty();
}

CalibrationResult calibrate_interpretation(const std::vector<int>& n_list) {
    if (n_list.empty()) throw std::invalid_argument("calibration needs at least one order");
    for (int n : n_list)
        if (!classify(n).supported()) throw UnsupportedOrder(n, classify(n).reason);

    CalibrationResult result;
    const auto& grid = interpretation_grid();

    for (const InterpretationConfig& cfg : grid) {
        VariantOutcome outcome;
        outcome.config = cfg;
        for (int n : n_list) {
            CalibrationEntry entry = run_one(n, cfg);
            if (entry.status == "pass") {
                ++outcome.passing;
                result.passing_variants[n].push_back(cfg.name());
            }
            outcome.entries.push_back(std::move(entry));
        }
        result.outcomes.push_back(std::move(outcome));
    }

    // Ties go to the earliest variant in the grid, which puts the documented
    // default reading first.
    std::size_t best = 0;
    for (std::size_t v = 1; v < result.outcomes.size(); ++v)
        if (result.outcomes[v].passing > result.outcomes[best].passing) best = v;
    result.best = result.outcomes[best].config;
    result.status = result.outcomes[best].entries;

    // For an order no variant satisfies, pin the lexicographically least
    // violating quadruple under the first variant that builds it (the default
    // reading, when it does).
    for (int n : n_list) {
        if (result.passes_somewhere(n)) continue;
        for (const InterpretationConfig& cfg : grid) {
            try {
                const ColoringMatrix mat = build_matrix(n, cfg);
                const VerificationReport rep = verify_fast(mat.grid());
                if (!rep.violations.empty()) {
                    result.counterexamples[n] = rep.violations.front();
                    break;
                }
            } catch (const std::exception&) {
                continue;
            }
        }
    }
    return result;
}

}  // namespace rainbow
