#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "rainbow/search.hpp"
#include "rainbow/types.hpp"
#include "rainbow/verify.hpp"

namespace rainbow {

using ordered_json = nlohmann::ordered_json;

// {"n": int, "type": string, "entries": [[int,...],...]}, row-major.
ordered_json matrix_to_json(const ColoringMatrix& mat);
std::string matrix_to_json_text(const ColoringMatrix& mat);

// n lines of n comma-separated integers, no header, trailing newline.
std::string matrix_to_csv(const ColoringMatrix& mat);

/// Parse a square matrix with entries >= 1. Errors carry 1-based line and
/// column (field) positions.
Grid parse_matrix_csv(std::string_view text);
Grid parse_matrix_json(std::string_view text);
Grid parse_matrix_file(const std::filesystem::path& path);

// {"n","colors_used","checked","violations":[{"i","j","l","m","colors","distinct"}],"truncated"}
ordered_json report_to_json(const VerificationReport& report);

// {"rows","cols","q","min_colors","witness","nodes","status"}
ordered_json search_result_to_json(const SearchResult& result);

ordered_json violation_to_json(const Violation& v);

}  // namespace rainbow
