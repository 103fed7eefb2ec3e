#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "dioph/cli.hpp"

using namespace dioph;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("bounds csv emits one row per n") {
    auto res = run_cli({"bounds", "--min-n", "3", "--max-n", "10", "--format", "csv"});
    CHECK(res.code == 0);
    int lines = 0;
    std::istringstream is(res.out);
    std::string line;
    while (std::getline(is, line))
        if (!line.empty()) ++lines;
    CHECK(lines == 9);  // header + 8 rows
    CHECK(res.out.find("furtwangler_baseline") != std::string::npos);
}

TEST_CASE("bounds json carries a manifest") {
    auto res = run_cli({"--deterministic", "bounds", "--format", "json"});
    CHECK(res.code == 0);
    json doc = json::parse(res.out);
    CHECK(doc.at("rows").size() == 8);
    CHECK(doc.at("manifest").at("started") == "1970-01-01T00:00:00Z");
    auto res2 = run_cli({"--deterministic", "bounds", "--format", "json"});
    CHECK(res.out == res2.out);  // byte-identical under --deterministic
}

TEST_CASE("verify f0 exits clean with a green certificate") {
    auto res = run_cli({"verify", "--theorem", "f0"});
    CHECK(res.code == 0);
    json doc = json::parse(res.out);
    CHECK(doc.at("ok").get<bool>());
    CHECK(doc.at("results")[0].at("verified").get<bool>());
}

TEST_CASE("roots subcommand") {
    {
        std::ofstream f("cli_poly.txt");
        f << "# x^2 - 2\n-2\n0\n1\n";
    }
    auto res = run_cli({"roots", "--poly", "cli_poly.txt", "--interval", "1/100:2"});
    CHECK(res.code == 0);
    json doc = json::parse(res.out);
    CHECK(doc.at("newton_sylvester").at("bound").get<int>() >= 1);
    CHECK(doc.at("bisection").at("count").get<int>() == 1);

    auto missing = run_cli({"roots", "--poly", "no_such_file.txt", "--interval", "0:1"});
    CHECK(missing.code == 2);
}

TEST_CASE("check subcommand") {
    {
        std::ofstream f("cli_matrix.json");
        f << R"({"n": 3, "s": 1, "diag": 1.0, "blocks": [1.0]})";
    }
    auto res = run_cli({"check", "--matrix", "cli_matrix.json", "--n", "3", "--s", "1"});
    CHECK(res.code == 0);
    json doc = json::parse(res.out);
    CHECK(doc.at("report").at("admissible").get<bool>());

    {
        std::ofstream f("cli_matrix_big.json");
        f << R"({"n": 3, "s": 1, "diag": 1.05, "blocks": [1.05]})";
    }
    auto big = run_cli({"check", "--matrix", "cli_matrix_big.json", "--n", "3", "--s", "1"});
    CHECK(big.code == 1);
    CHECK_FALSE(json::parse(big.out).at("report").at("admissible").get<bool>());

    auto dense = run_cli({"check", "--matrix", "cli_matrix.json", "--n", "4", "--s", "2"});
    CHECK(dense.code == 2);  // file disagrees with the flags
}

TEST_CASE("search smoke run") {
    auto res = run_cli({"search", "--n", "3", "--s", "1", "--iterations", "3", "--seed", "7",
                        "--log", "cli_search.log"});
    CHECK(res.code == 0);
    json doc = json::parse(res.out);
    CHECK(doc.at("search").at("best_volume").get<double>() > 1.8);
    CHECK(doc.at("manifest").at("seed").get<std::uint64_t>() == 7);
    std::ifstream log("cli_search.log");
    std::string line;
    REQUIRE(std::getline(log, line));
    CHECK(line.find(" - ") != std::string::npos);

    auto bad = run_cli({"search", "--n", "3", "--s", "2"});
    CHECK(bad.code == 2);
}

TEST_CASE("search json is byte-identical under --deterministic") {
    std::vector<std::string> args{"--deterministic", "search", "--n", "3", "--s", "1",
                                  "--iterations", "2", "--seed", "5"};
    auto a = run_cli(args);
    auto b = run_cli(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("usage errors") {
    CHECK(run_cli({"bogus"}).code == 2);
    CHECK(run_cli({"verify", "--theorem", "nope"}).code == 2);
    CHECK(run_cli({}).code == 2);
}
