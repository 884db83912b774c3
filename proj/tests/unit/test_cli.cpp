#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "srcdec_cli/cli.hpp"
#include "test_support.hpp"

using srcdec::testing::corpus_path;
namespace cli = srcdec::cli;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string corpus(const char* name) { return corpus_path(name).string(); }

fs::path scratch(const std::string& name, const std::string& content) {
    const fs::path p = fs::temp_directory_path() / ("srcdec_cli_test_" + name);
    std::ofstream(p) << content;
    return p;
}

}  // namespace

TEST_CASE("decompose emits three pairs as json") {
    const auto r = run({"decompose", corpus("ex5_1.sys"), "--format", "json"});
    REQUIRE(r.code == cli::kOk);
    const auto j = nlohmann::json::parse(r.out);
    REQUIRE(j["pairs"].size() == 3);
    CHECK(j["pairs"][0]["groebner_basis"] == nlohmann::json{"x^2", "y"});
    CHECK(j["pairs"][2]["w_characteristic_set"] ==
          nlohmann::json{"u", "v^3*x^2 + 1", "y - v^2*x^2"});
    CHECK(j["pairs"][1]["is_regular"] == true);
    CHECK(j["pairs"][1]["iterations_m"] == 2);
    CHECK(j["verified"].is_null());
    for (const char* key : {"gb_ms", "sat_ms", "quo_ms", "total_ms"})
        CHECK(j["stats"][key].get<double>() >= 0.0);
    CHECK(j["input"]["vars"] == nlohmann::json{"u", "v", "x", "y"});
}

TEST_CASE("deterministic json is byte-identical across runs") {
    const std::vector<std::string> args = {"decompose", corpus("ex5_2.sys"), "--format", "json",
                                           "--deterministic", "--check"};
    const auto a = run(args);
    const auto b = run(args);
    REQUIRE(a.code == cli::kOk);
    CHECK(a.out == b.out);
    CHECK(nlohmann::json::parse(a.out)["verified"] == true);
}

TEST_CASE("srcpair reports the iteration count") {
    const auto r = run({"srcpair", corpus("ex3_1.sys")});
    REQUIRE(r.code == cli::kOk);
    CHECK(r.out.find("G = {x - 1, y + 1, z}") != std::string::npos);
    CHECK(r.out.find("C = [x - 1, y + 1, z]") != std::string::npos);
    CHECK(r.out.find("m = 3") != std::string::npos);

    const auto traced = run({"srcpair", corpus("ex3_1.sys"), "--trace"});
    CHECK(traced.out.find("G2 = {x^2 - x, x*y + x, y^2 - x, z}") != std::string::npos);
}

TEST_CASE("gb of an inconsistent system") {
    const auto r = run({"gb", corpus("unit.sys")});
    REQUIRE(r.code == cli::kOk);
    CHECK(r.out == "{1}\n");
}

TEST_CASE("wchar and sat subcommands") {
    const auto w = run({"wchar", corpus("ex3_1.sys")});
    REQUIRE(w.code == cli::kOk);
    CHECK(w.out.find("[x^2 - x") != std::string::npos);

    const auto s = run({"sat", corpus("ex3_2.sys")});
    REQUIRE(s.code == cli::kOk);
    CHECK(s.out.find("{y^2, y*z, x*z + y, z^2}") != std::string::npos);
}

TEST_CASE("ordering override") {
    const auto r = run({"gb", corpus("ex3_1.sys"), "--order", "z < y < x"});
    REQUIRE(r.code == cli::kOk);
    const auto bad = run({"gb", corpus("ex3_1.sys"), "--order", "x < y"});
    CHECK(bad.code == cli::kInputError);
}

TEST_CASE("parse errors exit with code 1") {
    const auto file = scratch("bad.sys", "vars: x < y\nx + q\n");
    const auto r = run({"gb", file.string()});
    CHECK(r.code == cli::kInputError);
    CHECK(r.err.find("line 2, column 5") != std::string::npos);
    CHECK(run({"gb", "/nonexistent/file.sys"}).code == cli::kInputError);
    CHECK(run({"frobnicate"}).code == cli::kInputError);
    CHECK(run({"gb", corpus("ex5_1.sys"), "--format", "xml"}).code == cli::kInputError);
}

TEST_CASE("budget exhaustion exits with code 2 and a partial report") {
    const auto r = run({"decompose", corpus("ex5_2.sys"), "--budget", "40"});
    CHECK(r.code == cli::kBudgetExceeded);
    CHECK(r.err.find("budget") != std::string::npos);

    const auto j = run({"decompose", corpus("ex5_2.sys"), "--budget", "40", "--format", "json"});
    CHECK(j.code == cli::kBudgetExceeded);
    CHECK(nlohmann::json::parse(j.out)["partial"] == true);
}

TEST_CASE("verify accepts a produced decomposition and rejects a wrong one") {
    const auto good = run({"decompose", corpus("ex5_1.sys"), "--format", "json"});
    const auto pairs = scratch("good.json", good.out);
    CHECK(run({"verify", corpus("ex5_1.sys"), "--pairs", pairs.string()}).code == cli::kOk);

    auto j = nlohmann::json::parse(good.out);
    j["pairs"].erase(1);
    const auto wrong = scratch("wrong.json", j.dump());
    const auto r = run({"verify", corpus("ex5_1.sys"), "--pairs", wrong.string()});
    CHECK(r.code == cli::kVerificationFailed);

    CHECK(run({"verify", corpus("ex5_1.sys")}).code == cli::kOk);
}

TEST_CASE("bench prints a table over selected files") {
    const auto r = run({"bench", corpus("ex3_1.sys"), corpus("ex5_1.sys"), "--deterministic"});
    REQUIRE(r.code == cli::kOk);
    CHECK(r.out.find("ex5_1") != std::string::npos);
    CHECK(r.out.find("Pairs") != std::string::npos);

    const auto j = run({"bench", corpus("ex5_1.sys"), "--format", "json", "--deterministic"});
    REQUIRE(j.code == cli::kOk);
    CHECK(nlohmann::json::parse(j.out).is_object());
}

TEST_CASE("help exits cleanly") {
    const auto r = run({"--help"});
    CHECK(r.code == cli::kOk);
    CHECK(r.out.find("decompose") != std::string::npos);
}
