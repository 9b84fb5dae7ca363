#include "rainbow/io.hpp"

#include <fstream>
#include <sstream>

namespace rainbow {

namespace {

constexpr int kMaxOrder = 4096;
constexpr Color kMaxColor = 65535;

Grid grid_from_rows(const std::vector<std::vector<Color>>& rows) {
    const int n = static_cast<int>(rows.size());
    if (n == 0) throw ParseError("matrix is empty", 1, 1);
    if (n > kMaxOrder) throw ParseError("matrix larger than " + std::to_string(kMaxOrder), 1, 1);
    Grid g(n, static_cast<int>(rows.front().size()));
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != g.cols())
            throw ParseError("row has " + std::to_string(rows[static_cast<std::size_t>(i)].size()) +
                                 " entries, expected " + std::to_string(g.cols()),
                             i + 1, 1);
        for (int l = 0; l < g.cols(); ++l) {
            const Color c = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(l)];
            if (c < 1 || c > kMaxColor)
                throw ParseError("color " + std::to_string(c) + " outside 1.." + std::to_string(kMaxColor),
                                 i + 1, l + 1);
            g.at(i + 1, l + 1) = c;
        }
    }
    if (!g.square()) throw ParseError("matrix is not square", n, 1);
    return g;
}

std::pair<int, int> line_column_of(std::string_view text, std::size_t byte) {
    int line = 1, column = 1;
    for (std::size_t pos = 0; pos < byte && pos < text.size(); ++pos) {
        if (text[pos] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}

}  // namespace

ordered_json matrix_to_json(const ColoringMatrix& mat) {
    ordered_json j;
    j["n"] = mat.order();
    j["type"] = to_string(mat.type());
    ordered_json entries = ordered_json::array();
    for (int i = 1; i <= mat.order(); ++i) {
        ordered_json row = ordered_json::array();
        for (int l = 1; l <= mat.order(); ++l) row.push_back(mat.at(i, l));
        entries.push_back(std::move(row));
    }
    j["entries"] = std::move(entries);
    return j;
}

std::string matrix_to_json_text(const ColoringMatrix& mat) { return matrix_to_json(mat).dump() + "\n"; }

std::string matrix_to_csv(const ColoringMatrix& mat) {
    std::string out;
    for (int i = 1; i <= mat.order(); ++i) {
        for (int l = 1; l <= mat.order(); ++l) {
            if (l > 1) out += ',';
            out += std::to_string(mat.at(i, l));
        }
        out += '\n';
    }
    return out;
}

Grid parse_matrix_csv(std::string_view text) {
    std::vector<std::vector<Color>> rows;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (line.empty()) {
            if (pos < text.size())
                throw ParseError("blank line inside matrix", line_no, 1);
            continue;
        }
        std::vector<Color> row;
        int field_no = 0;
        std::size_t fpos = 0;
        while (fpos <= line.size()) {
            std::size_t comma = line.find(',', fpos);
            if (comma == std::string_view::npos) comma = line.size();
            std::string_view field = line.substr(fpos, comma - fpos);
            ++field_no;
            while (!field.empty() && (field.front() == ' ' || field.front() == '\t')) field.remove_prefix(1);
            while (!field.empty() && (field.back() == ' ' || field.back() == '\t')) field.remove_suffix(1);
            if (field.empty()) throw ParseError("empty field", line_no, field_no);
            Color value = 0;
            for (char ch : field) {
                if (ch < '0' || ch > '9')
                    throw ParseError("invalid integer '" + std::string(field) + "'", line_no, field_no);
                if (value > kMaxColor) break;
                value = value * 10 + (ch - '0');
            }
            if (value > kMaxColor)
                throw ParseError("color too large", line_no, field_no);
            row.push_back(value);
            if (comma == line.size()) break;
            fpos = comma + 1;
        }
        rows.push_back(std::move(row));
    }
    return grid_from_rows(rows);
}

Grid parse_matrix_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        const auto [line, column] = line_column_of(text, e.byte > 0 ? e.byte - 1 : 0);
        throw ParseError(std::string("invalid JSON: ") + e.what(), line, column);
    }
    if (!j.is_object() || !j.contains("entries") || !j["entries"].is_array())
        throw ParseError("expected an object with an \"entries\" array", 1, 1);
    std::vector<std::vector<Color>> rows;
    for (const auto& jrow : j["entries"]) {
        if (!jrow.is_array()) throw ParseError("\"entries\" must be an array of arrays",
                                               static_cast<int>(rows.size()) + 1, 1);
        std::vector<Color> row;
        for (const auto& cell : jrow) {
            if (!cell.is_number_integer())
                throw ParseError("matrix entries must be integers", static_cast<int>(rows.size()) + 1,
                                 static_cast<int>(row.size()) + 1);
            row.push_back(cell.get<Color>());
        }
        rows.push_back(std::move(row));
    }
    Grid g = grid_from_rows(rows);
    if (j.contains("n") && j["n"].is_number_integer() && j["n"].get<int>() != g.rows())
        throw ParseError("declared n = " + j["n"].dump() + " does not match " +
                             std::to_string(g.rows()) + " rows",
                         1, 1);
    return g;
}

Grid parse_matrix_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    const std::string text = buffer.str();

    std::string ext = path.extension().string();
    for (char& ch : ext) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    if (ext == ".json") return parse_matrix_json(text);
    if (ext == ".csv") return parse_matrix_csv(text);
    const std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && (text[first] == '{' || text[first] == '['))
        return parse_matrix_json(text);
    return parse_matrix_csv(text);
}

ordered_json violation_to_json(const Violation& v) {
    ordered_json j;
    j["i"] = v.i;
    j["j"] = v.j;
    j["l"] = v.l;
    j["m"] = v.m;
    j["colors"] = v.colors;
    j["distinct"] = v.distinct;
    return j;
}

ordered_json report_to_json(const VerificationReport& report) {
    ordered_json j;
    j["n"] = report.n();
    j["colors_used"] = report.colors_used;
    j["checked"] = report.quadruples_checked;
    ordered_json violations = ordered_json::array();
    for (const Violation& v : report.violations) violations.push_back(violation_to_json(v));
    j["violations"] = std::move(violations);
    j["truncated"] = report.truncated;
    return j;
}

ordered_json search_result_to_json(const SearchResult& result) {
    ordered_json j;
    j["rows"] = result.rows;
    j["cols"] = result.cols;
    j["q"] = result.q;
    if (result.min_colors) j["min_colors"] = *result.min_colors;
    else j["min_colors"] = nullptr;
    if (result.witness) {
        ordered_json rows = ordered_json::array();
        for (int r = 1; r <= result.witness->rows(); ++r) {
            ordered_json row = ordered_json::array();
            for (int c = 1; c <= result.witness->cols(); ++c) row.push_back(result.witness->at(r, c));
            rows.push_back(std::move(row));
        }
        j["witness"] = std::move(rows);
    } else {
        j["witness"] = nullptr;
    }
    j["nodes"] = result.nodes;
    j["status"] = result.status == SearchStatus::Exact ? "exact" : "budget";
    return j;
}

}  // namespace rainbow
