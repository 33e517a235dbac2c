#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <sys/wait.h>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "qcong/harness.hpp"

// Drives the installed CLI binary end to end: exit-code contract, JSON
// re-parse equality, atomic --out files.

namespace {

namespace fs = std::filesystem;

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    fs::path tmp = fs::temp_directory_path() / "qcong_cli_out.txt";
    std::string cmd = std::string(QCONG_CLI_PATH) + " " + args + " > " + tmp.string() + " 2>&1";
    int rc = std::system(cmd.c_str());
    std::ifstream in(tmp);
    std::stringstream ss;
    ss << in.rdbuf();
    int code = -1;
    if (WIFEXITED(rc)) code = WEXITSTATUS(rc);
    return {code, ss.str()};
}

}  // namespace

TEST_CASE("exit code 0 with skipped evens on a 1..9 span") {
    auto r = run_cli("verify --case thm1.5 --n 1..9");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("5 verified, 0 failed, 4 skipped") != std::string::npos);
}

TEST_CASE("unknown case id exits 2") {
    auto r = run_cli("verify --case nonexistent");
    CHECK(r.exit_code == 2);
    CHECK(r.out.find("unknown case id") != std::string::npos);
}

TEST_CASE("bad range selector exits 2") {
    auto r = run_cli("verify --case thm1.5 --n 9..1");
    CHECK(r.exit_code == 2);
    auto r2 = run_cli("verify --case thm1.5 --n 1..x");
    CHECK(r2.exit_code == 2);
    auto r3 = run_cli("frobnicate");
    CHECK(r3.exit_code == 2);
}

TEST_CASE("perturbed fixture exits 1 with a failed report") {
    auto r = run_cli("verify --case fixture-perturbed-rhs --format json");
    CHECK(r.exit_code == 1);
    auto arr = nlohmann::ordered_json::parse(r.out);
    REQUIRE(arr.is_array());
    REQUIRE(arr.size() == 1);
    CHECK(arr[0]["status"] == "failed");
    CHECK(!arr[0]["witness"].get<std::string>().empty());
}

TEST_CASE("identity suites run from the CLI") {
    auto r = run_cli("identity --name andrews-q-watson --n 1..8");
    CHECK(r.exit_code == 0);
    auto r2 = run_cli("identity --name no-such-identity");
    CHECK(r2.exit_code == 2);
}

TEST_CASE("list prints every registry id with provenance") {
    auto r = run_cli("list");
    CHECK(r.exit_code == 0);
    for (const auto& c : qcong::harness::registry())
        CHECK(r.out.find(c.id) != std::string::npos);
}

TEST_CASE("json output re-parses to the in-memory reports") {
    fs::path out = fs::temp_directory_path() / "qcong_cli_reports.json";
    std::error_code ec;
    fs::remove(out, ec);
    auto r = run_cli("verify --case rv-int,sun-tauraso --p 3,5 --format json --out " +
                     out.string());
    CHECK(r.exit_code == 0);
    REQUIRE(fs::exists(out));
    CHECK(!fs::exists(out.string() + ".tmp"));  // atomic write leaves no temp file

    std::ifstream in(out);
    auto arr = nlohmann::ordered_json::parse(in);

    qcong::harness::Overrides ov;
    ov.p = std::vector<int64_t>{3, 5};
    auto direct = qcong::harness::run_sweep({"rv-int", "sun-tauraso"}, ov, 1);
    REQUIRE(arr.size() == direct.size());
    for (std::size_t i = 0; i < direct.size(); ++i) {
        auto parsed = qcong::harness::report_from_json(arr[i]);
        CHECK(parsed.case_id == direct[i].case_id);
        CHECK(parsed.params == direct[i].params);
        CHECK(parsed.modulus == direct[i].modulus);
        CHECK(parsed.status == direct[i].status);
        CHECK(parsed.strategy == direct[i].strategy);
    }
    fs::remove(out, ec);
}
