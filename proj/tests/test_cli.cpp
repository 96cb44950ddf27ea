#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

// Runs the built binary with stdout captured; stderr is left for ctest logs.
RunResult run_cli(const std::string& args) {
    const auto out_path = std::filesystem::temp_directory_path() / "zaremba_cli_out.txt";
    const std::string cmd = std::string(ZAREMBA_CLI_PATH) + " " + args + " > " + out_path.string();
    const int raw = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WEXITSTATUS(raw);
    std::ifstream f(out_path, std::ios::binary);
    std::stringstream buf;
    buf << f.rdbuf();
    r.out = buf.str();
    std::filesystem::remove(out_path);
    return r;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::stringstream buf;
    buf << f.rdbuf();
    return buf.str();
}

} // namespace

TEST_CASE("kappa subcommand prints the value") {
    const RunResult r = run_cli("kappa --k 2 --n 7");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "12\n");
}

TEST_CASE("series-check passes and reports zero residuals") {
    const RunResult r = run_cli("series-check --k 2 --order 256 --homogeneous-order 64");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("MFE residual: 0") != std::string::npos);
    CHECK(r.out.find("homogeneous residual: 0") != std::string::npos);
}

TEST_CASE("probe reports an empty kernel") {
    const RunResult r = run_cli("probe --k 2 --deg 1 --poly-deg 2 --order 50");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("relations found: 0") != std::string::npos);
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run_cli("no-such-subcommand 2>/dev/null").exit_code == 2);
    CHECK(run_cli("kappa --k 1 --n 0 2>/dev/null").exit_code == 2);
    CHECK(run_cli("kappa --k 2 2>/dev/null").exit_code == 2); // no action selected
    CHECK(run_cli("takagi --x 1.5 2>/dev/null").exit_code == 2);
}

TEST_CASE("json mode emits schema-versioned reports") {
    for (const std::string args : {
             std::string("kappa --k 2 --n 5 --json"),
             std::string("series-check --k 2 --order 64 --homogeneous-order 16 --json"),
             std::string("spectrum --k 2 --j-max 4 --json"),
             std::string("omega --k 2 --depth 3 --json"),
             std::string("sums --k 2 --n-max 512 --json"),
             std::string("takagi --x 0.5 --json"),
             std::string("probe --k 2 --deg 1 --poly-deg 2 --order 50 --json"),
         }) {
        const RunResult r = run_cli(args);
        CHECK(r.exit_code == 0);
        const auto j = nlohmann::json::parse(r.out);
        CHECK(j["schema_version"] == 1);
        CHECK(j.contains("command"));
    }
}

TEST_CASE("kappa json value is a decimal string") {
    const RunResult r = run_cli("kappa --k 2 --n 5 --json");
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["value"] == "8");
}

TEST_CASE("omega gate fails when the tolerance is impossible") {
    const RunResult r = run_cli("omega --k 2 --depth 5 --fe-tol 0 2>/dev/null");
    CHECK(r.exit_code == 1);
}

TEST_CASE("artifact writes are deterministic") {
    const auto dir = std::filesystem::temp_directory_path();
    const auto a = dir / "zaremba_cli_cmp_a.csv";
    const auto b = dir / "zaremba_cli_cmp_b.csv";
    CHECK(run_cli("compare --k 2 --level 10 --samples 64 --out " + a.string()).exit_code == 0);
    CHECK(run_cli("compare --k 2 --level 10 --samples 64 --out " + b.string()).exit_code == 0);
    const std::string sa = slurp(a);
    CHECK(sa == slurp(b));
    CHECK(sa.substr(0, sa.find('\n')) == "x,norm_sum,takagi");
    // atomic write leaves no temp file behind
    CHECK_FALSE(std::filesystem::exists(a.string() + ".tmp"));
    std::filesystem::remove(a);
    std::filesystem::remove(b);
}

TEST_CASE("allocation cap from the environment surfaces as an error") {
    const auto out_path = std::filesystem::temp_directory_path() / "zaremba_cli_cap.txt";
    const std::string cmd = std::string("ZAREMBA_MAX_MEM=4096 ") + ZAREMBA_CLI_PATH +
                            " kappa --k 2 --range 1048576 > " + out_path.string() + " 2>&1";
    const int raw = std::system(cmd.c_str());
    CHECK(WEXITSTATUS(raw) == 1);
    const std::string out = slurp(out_path);
    CHECK(out.find("ZAREMBA_MAX_MEM") != std::string::npos);
    std::filesystem::remove(out_path);
}

TEST_CASE("json artifact format mirrors the table") {
    const auto path = std::filesystem::temp_directory_path() / "zaremba_cli_omega.json";
    const RunResult r = run_cli("omega --k 2 --depth 3 --out " + path.string() + " --format json");
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(slurp(path));
    CHECK(j["schema_version"] == 1);
    REQUIRE(j.contains("roots"));
    CHECK(j["roots"].size() == 8); // all roots of degree dividing 2^3
    CHECK(j["roots"][0]["re"] == 1.0);
    std::filesystem::remove(path);

    CHECK(run_cli("omega --k 2 --depth 3 --out x.csv --format xml 2>/dev/null").exit_code == 2);
}

TEST_CASE("omega csv artifact") {
    const auto path = std::filesystem::temp_directory_path() / "zaremba_cli_omega.csv";
    const RunResult r = run_cli("omega --k 2 --depth 3 --out " + path.string());
    CHECK(r.exit_code == 0);
    const std::string csv = slurp(path);
    CHECK(csv.substr(0, csv.find('\n')) == "m,j,re_omega,im_omega,fe_residual");
    std::filesystem::remove(path);
}
