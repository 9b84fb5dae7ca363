#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "rainbow/interpretation.hpp"
#include "rainbow/verify.hpp"

namespace rainbow {

struct CalibrationEntry {
    int n = 0;
    std::string status;  // "pass", "fail", "build-error"
    std::int64_t violations = 0;
    std::string detail;
};

struct VariantOutcome {
    InterpretationConfig config;
    std::vector<CalibrationEntry> entries;
    int passing = 0;
};

struct CalibrationResult {
    InterpretationConfig best;              // most passing orders; ties favor the grid order
    std::vector<CalibrationEntry> status;   // per order, under best
    std::vector<VariantOutcome> outcomes;   // full grid detail
    std::map<int, std::vector<std::string>> passing_variants;  // order -> config names
    std::map<int, Violation> counterexamples;  // orders failing every variant -> lex-least violation

    bool passes_somewhere(int n) const;
};

/// Runs build + full verification for every order in n_list under every config
/// of the interpretation grid and reports which config satisfies the most
/// orders. Orders that fail under every variant get a minimal counterexample
/// (taken under the default config when it builds, else the first grid config
/// that does).
CalibrationResult calibrate_interpretation(const std::vector<int>& n_list);

}  // namespace rainbow
