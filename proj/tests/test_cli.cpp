#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include <nlohmann/json.hpp>

#include "oddrace/emit.hpp"
#include "oddrace/expected.hpp"

using namespace oddrace;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(ODDRACE_CLI_PATH) + " " + args + " 2>/dev/null";
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

} // namespace

TEST_CASE("delta3 subcommand") {
    auto r = run_cli("delta3 105 --odd-only");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "7\n");

    r = run_cli("delta3 0");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "0\n");

    r = run_cli("delta3 64 --odd-only --explain");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("closed form") != std::string::npos);
    CHECK(r.out.find("\n9\n") != std::string::npos);
    CHECK(r.out.find("[0, 64)") == 0);
}

TEST_CASE("table ranges and check mode") {
    auto r = run_cli("table 1 --max-n 10");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("5\t0\n") != std::string::npos);
    CHECK(r.out.find("10\t19\n") != std::string::npos);

    r = run_cli("table 1 --max-n 10 --check");
    CHECK(r.exit_code == 0);

    r = run_cli("table 1 --max-n 40");
    CHECK(r.exit_code == 2);

    r = run_cli("table 2 --max-m 5 --check");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("5\t0.5322\t0.5322\n") != std::string::npos);

    r = run_cli("table 3 --min 15 --max 16 --check --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("15,58,19\n") != std::string::npos);
    CHECK(r.out.find("16,492,421\n") != std::string::npos);

    r = run_cli("table 3 --min 14 --max 16");
    CHECK(r.exit_code == 2);
}

TEST_CASE("verify subcommand exit codes") {
    auto r = run_cli("verify identities --max-m 12");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);

    r = run_cli("verify nonsense");
    CHECK(r.exit_code == 2);
}

TEST_CASE("scan summary") {
    const auto r = run_cli("scan --limit 1000000 --threads 2 --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("1000000,78498,") != std::string::npos);
}

TEST_CASE("byte-identical output across runs and thread counts") {
    const auto a = run_cli("table 1 --max-n 14 --threads 1");
    const auto b = run_cli("table 1 --max-n 14 --threads 4");
    const auto c = run_cli("table 1 --max-n 14 --threads 4");
    CHECK(a.out == b.out);
    CHECK(b.out == c.out);
}

TEST_CASE("json output round-trips") {
    const auto r = run_cli("table 2 --max-m 6 --format json");
    CHECK(r.exit_code == 0);
    const auto parsed = nlohmann::json::parse(r.out);
    CHECK(parsed.is_array());
    CHECK(parsed.size() == 5);
    CHECK(parsed.dump() + "\n" == r.out);
    CHECK(parsed[0]["m"] == 2);
    CHECK(parsed[0]["x"] == 0.25);

    const auto r3 = run_cli("table 3 --min 15 --max 18 --format json");
    const auto parsed3 = nlohmann::json::parse(r3.out);
    CHECK(parsed3.dump() + "\n" == r3.out);
}

TEST_CASE("expected-values file loads and matches the embedded prefixes") {
    const ExpectedValues exp = load_expected(default_expected_path());
    CHECK(exp.table1.at(5) == 0);
    CHECK(exp.table1.at(24) == 14933);
    CHECK(exp.table1.at(30) == 265255);
    CHECK(exp.table2.at(10).x == doctest::Approx(0.6153));
    CHECK(exp.table2.count(8) == 0); // the reference table skips m = 8
    CHECK(exp.table3.at(24).delta_exact == 21790);
    CHECK(exp.record_primes_prefix ==
          std::vector<std::uint64_t>{2, 13, 41, 67, 79, 109, 131, 137});
    CHECK(exp.record_primes_prefix_computed ==
          std::vector<std::uint64_t>{2, 13, 41, 61, 67, 79, 109, 131, 137});
    CHECK(exp.conjecture1_exceptions == std::vector<std::uint64_t>{5, 6});
}

TEST_CASE("format_real uses dot decimal and 4 places") {
    CHECK(format_real(0.25) == "0.2500");
    CHECK(format_real(0.53219) == "0.5322");
    CHECK(format_real(-1.0) == "-1.0000");
}
