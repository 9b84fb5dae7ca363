#include <doctest.h>

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "rainbow/cli.hpp"
#include "rainbow/construction.hpp"
#include "rainbow/io.hpp"

using namespace rainbow;

namespace {

namespace fs = std::filesystem;

struct TempDir {
    TempDir() : path(fs::temp_directory_path() / ("rainbow-test-" + std::to_string(::getpid()))) {
        fs::create_directories(path);
    }
    ~TempDir() { std::error_code ec; fs::remove_all(path, ec); }
    fs::path file(const std::string& name) const { return path / name; }
    fs::path path;
};

void write_file(const fs::path& p, const std::string& text) {
    std::ofstream out(p, std::ios::binary);
    out << text;
}

std::string read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Runs the CLI in-process, capturing stdout and stderr.
struct CliResult {
    int exit_code;
    std::string out;
    std::string err;
};

CliResult run_cli(const std::vector<std::string>& args) {
    std::vector<const char*> argv;
    argv.push_back("rainbow");
    for (const std::string& a : args) argv.push_back(a.c_str());

    std::ostringstream out, err;
    std::streambuf* old_out = std::cout.rdbuf(out.rdbuf());
    std::streambuf* old_err = std::cerr.rdbuf(err.rdbuf());
    const int code = cli::run(static_cast<int>(argv.size()), argv.data());
    std::cout.rdbuf(old_out);
    std::cerr.rdbuf(old_err);
    return CliResult{code, out.str(), err.str()};
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

}  // namespace

TEST_CASE("matrix serialization round trips bit-exactly") {
    for (int n : {6, 8, 10, 12, 22}) {
        const ColoringMatrix mat = build_matrix(n);
        const std::string csv = matrix_to_csv(mat);
        CHECK(parse_matrix_csv(csv) == mat.grid());
        CHECK(matrix_to_csv(ColoringMatrix(parse_matrix_csv(csv), mat.type())) == csv);

        const std::string json = matrix_to_json_text(mat);
        CHECK(parse_matrix_json(json) == mat.grid());
        CHECK(matrix_to_json_text(ColoringMatrix(parse_matrix_json(json), mat.type())) == json);

        // Both encodings of one matrix decode to the same grid.
        CHECK(parse_matrix_csv(csv) == parse_matrix_json(json));
    }
}

TEST_CASE("csv text layout") {
    const std::string csv = matrix_to_csv(build_matrix(8));
    const auto lines = lines_of(csv);
    REQUIRE(lines.size() == 8);
    CHECK(lines[0] == "1,2,3,4,5,6,7,8");
    CHECK(csv.back() == '\n');

    CHECK(lines_of(matrix_to_csv(build_matrix(6))).back() == "3,6,6,6,5,1");
}

TEST_CASE("matrix json carries order and family") {
    const ordered_json j = matrix_to_json(build_matrix(12));
    CHECK(j["n"] == 12);
    CHECK(j["type"] == "Type2");
    CHECK(j["entries"].size() == 12);
    CHECK(j.dump().rfind("{\"n\":12,\"type\":\"Type2\",\"entries\":", 0) == 0);
}

TEST_CASE("parse diagnostics carry line and column") {
    CHECK_THROWS_WITH_AS(parse_matrix_csv("1,2\n3\n"), doctest::Contains("line 2"), ParseError);
    try {
        parse_matrix_csv("1,2\n3,x\n");
        REQUIRE(false);
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
        CHECK(e.column == 2);
    }
    CHECK_THROWS_AS(parse_matrix_csv("0,1\n1,2\n"), ParseError);   // colors start at 1
    CHECK_THROWS_AS(parse_matrix_csv("1,2,3\n4,5,6\n"), ParseError);  // not square
    CHECK_THROWS_AS(parse_matrix_csv(""), ParseError);
    CHECK_THROWS_AS(parse_matrix_json("{\"entries\": [[1,2],[3]]}"), ParseError);
    CHECK_THROWS_AS(parse_matrix_json("{\"entries\": [[1,2],[3,4]], \"n\": 3}"), ParseError);
    CHECK_THROWS_AS(parse_matrix_json("not json"), ParseError);
}

TEST_CASE("cli generate") {
    const CliResult r8 = run_cli({"generate", "--n", "8"});
    CHECK(r8.exit_code == 0);
    const auto lines = lines_of(r8.out);
    REQUIRE(lines.size() == 8);
    CHECK(lines[0] == "1,2,3,4,5,6,7,8");

    const CliResult r6 = run_cli({"generate", "--n", "6"});
    CHECK(lines_of(r6.out).back() == "3,6,6,6,5,1");

    CHECK(run_cli({"generate", "--n", "7"}).exit_code == 2);
    CHECK(run_cli({"generate", "--n", "4"}).exit_code == 2);

    // Deterministic bytes.
    CHECK(run_cli({"generate", "--n", "8"}).out == r8.out);

    TempDir tmp;
    const std::string path = tmp.file("m8.json").string();
    CHECK(run_cli({"generate", "--n", "8", "--format", "json", "--out", path}).exit_code == 0);
    CHECK(parse_matrix_file(path) == build_matrix(8).grid());
}

TEST_CASE("cli verify") {
    const CliResult both = run_cli({"verify", "--n", "12", "--algo", "both"});
    CHECK(both.exit_code == 0);
    const ordered_json rep = ordered_json::parse(both.out);
    CHECK(rep["n"] == 12);
    CHECK(rep["violations"].empty());
    CHECK(rep["truncated"] == false);

    // Verifying from a file reproduces the in-memory report byte for byte.
    TempDir tmp;
    const std::string path = tmp.file("m12.csv").string();
    REQUIRE(run_cli({"generate", "--n", "12", "--out", path}).exit_code == 0);
    const CliResult from_file = run_cli({"verify", "--input", path, "--algo", "both"});
    CHECK(from_file.exit_code == 0);
    CHECK(from_file.out == both.out);

    const std::string bad = tmp.file("bad.csv").string();
    write_file(bad, "0,1\n1,2\n");
    CHECK(run_cli({"verify", "--input", bad}).exit_code == 2);

    const std::string ones = tmp.file("ones.csv").string();
    write_file(ones, "1,1\n1,1\n");
    const CliResult rv = run_cli({"verify", "--input", ones, "--algo", "both"});
    CHECK(rv.exit_code == 1);
    CHECK(ordered_json::parse(rv.out)["violations"].size() == 1);

    CHECK(run_cli({"verify", "--n", "10"}).exit_code == 1);  // exceptional order, violating
    CHECK(run_cli({"verify", "--n", "9"}).exit_code == 2);
    CHECK(run_cli({"verify"}).exit_code == 2);
    CHECK(run_cli({"verify", "--input", tmp.file("missing.csv").string()}).exit_code == 2);
}

TEST_CASE("cli sweep") {
    TempDir tmp;
    const std::string path = tmp.file("sweep.jsonl").string();
    const CliResult r = run_cli({"sweep", "--from", "6", "--to", "30", "--report", path});
    CHECK(r.exit_code == 0);  // the exceptional failures are flagged, not fatal
    const auto lines = lines_of(read_file(path));
    REQUIRE(lines.size() == 13);  // 6,8,...,30
    int previous = 0;
    bool saw_finding = false;
    for (const std::string& line : lines) {
        const ordered_json rec = ordered_json::parse(line);
        CHECK(rec["n"].get<int>() > previous);
        previous = rec["n"].get<int>();
        if (rec["n"] == 10) {
            CHECK(rec["exceptional"] == true);
            saw_finding = rec.contains("finding");
        }
        if (rec["status"] == "fail") CHECK(rec["exceptional"] == true);
    }
    CHECK(saw_finding);

    const CliResult unsupported = run_cli({"sweep", "--from", "4", "--to", "4"});
    CHECK(unsupported.exit_code == 0);
    const auto ulines = lines_of(unsupported.out);
    REQUIRE(ulines.size() == 1);
    CHECK(ordered_json::parse(ulines[0])["status"] == "unsupported");

    const CliResult single = run_cli({"sweep", "--from", "8", "--to", "8"});
    CHECK(single.exit_code == 0);
    CHECK(ordered_json::parse(lines_of(single.out)[0])["status"] == "pass");

    CHECK(run_cli({"sweep", "--from", "9", "--to", "8"}).exit_code == 2);
}

TEST_CASE("cli search") {
    const CliResult r = run_cli({"search", "--rows", "3", "--cols", "3", "--q", "3",
                                 "--max-colors", "3"});
    CHECK(r.exit_code == 0);
    const ordered_json j = ordered_json::parse(r.out);
    CHECK(j["min_colors"] == 3);
    CHECK(j["status"] == "exact");
    CHECK(j["witness"].size() == 3);

    const CliResult infeasible = run_cli({"search", "--rows", "2", "--cols", "2",
                                          "--max-colors", "2"});
    CHECK(infeasible.exit_code == 0);
    const ordered_json ji = ordered_json::parse(infeasible.out);
    CHECK(ji["min_colors"].is_null());
    CHECK(ji["status"] == "exact");
    CHECK(infeasible.err.find("min_colors > max_colors") != std::string::npos);

    const CliResult starved = run_cli({"search", "--rows", "4", "--cols", "4", "--budget", "10"});
    CHECK(starved.exit_code == 3);
    CHECK(ordered_json::parse(starved.out)["status"] == "budget");

    CHECK(run_cli({"search", "--rows", "1", "--cols", "3"}).exit_code == 2);
    CHECK(run_cli({"search", "--rows", "2", "--cols", "2", "--q", "5"}).exit_code == 2);
}

TEST_CASE("cli bench") {
    const CliResult r = run_cli({"bench", "--n", "8,62"});
    CHECK(r.exit_code == 0);
    const ordered_json j = ordered_json::parse(r.out);
    REQUIRE(j["results"].size() == 2);
    CHECK(j["results"][0]["n"] == 8);
    CHECK(j["results"][0]["naive_ms"].is_number());
    CHECK(j["results"][0]["fast_ms"].is_number());
    CHECK(j["results"][1]["n"] == 62);
    CHECK(j["results"][1]["naive_ms"].is_null());  // naive is capped at order 60

    CHECK(run_cli({"bench", "--n", "7"}).exit_code == 2);
}

TEST_CASE("cli interpretation variants") {
    CHECK(run_cli({"generate", "--n", "28", "--interpretation", "t3-early"}).exit_code == 0);
    CHECK(run_cli({"generate", "--n", "28", "--interpretation", "bogus"}).exit_code == 2);
    // The early-split reading breaks the order-10 corner; that is a build error.
    CHECK(run_cli({"generate", "--n", "10", "--interpretation", "t3-early"}).exit_code == 2);
    CHECK(run_cli({"--help"}).exit_code == 0);
    CHECK(run_cli({}).exit_code == 2);
}
