#include <cmath>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "oddrace/delta3.hpp"
#include "oddrace/emit.hpp"
#include "oddrace/expected.hpp"
#include "oddrace/prime_scan.hpp"
#include "oddrace/verify.hpp"

namespace {

using namespace oddrace;

OutputFormat parse_format(const std::string& s) {
    if (s == "csv") return OutputFormat::Csv;
    if (s == "tsv") return OutputFormat::Tsv;
    if (s == "json") return OutputFormat::Json;
    throw CLI::ValidationError("--format", "must be csv, tsv or json");
}

int check_table1(const std::vector<RecordRow>& rows, const ExpectedValues& exp) {
    int mismatches = 0;
    for (const auto& r : rows) {
        const auto it = exp.table1.find(r.n);
        if (it == exp.table1.end()) {
            std::cerr << "check: no reference row for n=" << r.n << "\n";
            continue;
        }
        if (it->second != r.m_n) {
            std::cerr << "check: n=" << r.n << " computed " << r.m_n << " expected " << it->second
                      << "\n";
            ++mismatches;
        }
    }
    return mismatches;
}

int check_table2(const std::vector<Table2Row>& rows, const ExpectedValues& exp) {
    int mismatches = 0;
    for (const auto& r : rows) {
        const auto it = exp.table2.find(r.m);
        if (it == exp.table2.end()) {
            std::cerr << "check: no reference row for m=" << r.m << " (skipped)\n";
            continue;
        }
        if (std::fabs(r.x - it->second.x) > 5e-4 || std::fabs(r.x_star - it->second.x_star) > 5e-4) {
            std::cerr << "check: m=" << r.m << " computed (" << format_real(r.x) << ", "
                      << format_real(r.x_star) << ") expected (" << format_real(it->second.x)
                      << ", " << format_real(it->second.x_star) << ")\n";
            ++mismatches;
        }
    }
    return mismatches;
}

int check_table3(const std::vector<IncrementRow>& rows, const ExpectedValues& exp) {
    int mismatches = 0;
    for (const auto& r : rows) {
        const auto it = exp.table3.find(r.n);
        if (it == exp.table3.end()) {
            std::cerr << "check: no reference row for n=" << r.n << "\n";
            continue;
        }
        const bool exact_ok = r.delta_exact == it->second.delta_exact;
        const bool approx_ok = std::llabs(r.delta_approx_rounded - it->second.by45) <= 1;
        if (!exact_ok || !approx_ok) {
            std::cerr << "check: n=" << r.n << " computed (" << r.delta_exact << ", "
                      << r.delta_approx_rounded << ") expected (" << it->second.delta_exact << ", "
                      << it->second.by45 << " +-1)\n";
            ++mismatches;
        }
    }
    return mismatches;
}

int print_suite(const verify::SuiteResult& result) {
    for (const auto& c : result.checks) {
        std::cout << (c.pass ? "PASS" : "FAIL") << "  " << c.name;
        if (!c.detail.empty()) std::cout << "  [" << c.detail << "]";
        std::cout << "\n";
    }
    std::cout << (result.all_pass() ? "ok" : "FAILED") << " (" << result.suite << ")\n";
    return result.all_pass() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"odious/evil prime race tables, closed-form deltas, and verification suites"};
    app.require_subcommand(1);
    app.fallthrough(); // --format/--data are accepted after subcommand names too

    std::string format = "tsv";
    app.add_option("--format", format, "output format: csv, tsv or json")->capture_default_str();
    std::string data_path = default_expected_path();
    app.add_option("--data", data_path, "expected-values JSON file")->capture_default_str();

    // table
    auto* table_cmd = app.add_subcommand("table", "print a reference table");
    int table_id = 0;
    table_cmd->add_option("id", table_id, "table number: 1, 2 or 3")->required();
    unsigned min_n = 0, max_n = 0, min_m = 2, max_m = 12;
    unsigned tmin = 15, tmax = 24;
    bool check = false, ratios = false;
    unsigned threads = 1;
    table_cmd->add_option("--min-n", min_n, "first window exponent (table 1)");
    table_cmd->add_option("--max-n", max_n, "last window exponent (table 1)");
    table_cmd->add_option("--min-m", min_m, "first power-of-4 exponent (table 2)");
    table_cmd->add_option("--max-m", max_m, "last power-of-4 exponent (table 2)");
    table_cmd->add_option("--min", tmin, "first increment exponent (table 3)");
    table_cmd->add_option("--max", tmax, "last increment exponent (table 3)");
    table_cmd->add_flag("--check", check, "compare against the expected-values file");
    table_cmd->add_flag("--ratios", ratios,
                        "append the even/odd jump ratio column to table 3");
    table_cmd->add_option("--threads", threads, "sieve worker threads");

    // delta3
    auto* delta_cmd = app.add_subcommand("delta3", "evaluate Delta_3([0,n)) by closed forms");
    std::uint64_t delta_n = 0;
    bool odd_only = false, explain = false;
    delta_cmd->add_option("n", delta_n, "upper bound of [0, n)")->required();
    delta_cmd->add_flag("--odd-only", odd_only, "count odd multiples of 3 only");
    delta_cmd->add_flag("--explain", explain, "print the decomposition terms");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    std::string suite;
    verify_cmd->add_option("suite", suite, "theorems|lemmas|identities|theorem1|conjecture1")
        ->required();
    unsigned v_max_n = 20, v_max_m = 64;
    std::uint64_t v_limit = 0;
    unsigned v_threads = 1;
    verify_cmd->add_option("--max-n", v_max_n, "exponent cap (theorems)");
    verify_cmd->add_option("--max-m", v_max_m, "identity size cap (identities)");
    verify_cmd->add_option("--limit", v_limit, "scan bound (lemmas, theorem1, conjecture1)");
    verify_cmd->add_option("--threads", v_threads, "sieve worker threads");

    // scan
    auto* scan_cmd = app.add_subcommand("scan", "run the prime race and print the final state");
    SieveConfig scan_cfg;
    scan_cmd->add_option("--limit", scan_cfg.limit, "sieve bound")->capture_default_str();
    scan_cmd->add_option("--threads", scan_cfg.threads, "sieve worker threads")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    try {
        const OutputFormat fmt = parse_format(format);

        if (table_cmd->parsed()) {
            const ExpectedValues expected = check ? load_expected(data_path) : ExpectedValues{};
            int mismatches = 0;
            if (table_id == 1) {
                if (min_n == 0) min_n = 5;
                if (max_n == 0) max_n = 24;
                if (min_n < 5 || max_n > 30 || min_n > max_n) {
                    std::cerr << "table 1 supports 5 <= n <= 30\n";
                    return 2;
                }
                SieveConfig cfg;
                cfg.limit = std::uint64_t{1} << max_n;
                cfg.threads = threads;
                const auto rows = record_minima(scan_race(cfg), min_n, max_n);
                std::cout << emit_table1(rows, fmt);
                if (check) mismatches = check_table1(rows, expected);
            } else if (table_id == 2) {
                if (min_m < 2 || max_m > 14 || min_m > max_m) {
                    std::cerr << "table 2 supports 2 <= m <= 14\n";
                    return 2;
                }
                SieveConfig cfg;
                cfg.limit = std::uint64_t{1} << (2 * max_m);
                cfg.threads = threads;
                const auto rows = table2_rows(scan_race(cfg), min_m, max_m);
                std::cout << emit_table2(rows, fmt);
                if (check) mismatches = check_table2(rows, expected);
            } else if (table_id == 3) {
                if (tmin < 15 || tmax > 28 || tmin > tmax) {
                    std::cerr << "table 3 supports 15 <= n <= 28\n";
                    return 2;
                }
                SieveConfig cfg;
                cfg.limit = std::uint64_t{1} << tmax;
                cfg.threads = threads;
                const auto rows = increments(scan_race(cfg), tmin, tmax);
                std::cout << emit_table3(rows, fmt, ratios);
                if (check) mismatches = check_table3(rows, expected);
            } else {
                std::cerr << "unknown table id " << table_id << "\n";
                return 2;
            }
            if (check && mismatches) {
                std::cerr << mismatches << " row(s) mismatched\n";
                return 1;
            }
            return 0;
        }

        if (delta_cmd->parsed()) {
            std::vector<DecompositionTerm> terms;
            const std::int64_t value = odd_only ? delta3_odd_prefix(delta_n, explain ? &terms : nullptr)
                                                : delta3_prefix(delta_n, explain ? &terms : nullptr);
            if (explain) {
                for (const auto& t : terms) {
                    std::cout << "[" << t.lo << ", " << t.lo + (std::uint64_t{1} << t.m) << ")"
                              << "  width 2^" << t.m << "  term " << t.value << "  ("
                              << (t.closed_form ? "closed form" : "oracle") << ")\n";
                }
            }
            std::cout << value << "\n";
            return 0;
        }

        if (verify_cmd->parsed()) {
            if (suite == "identities") return print_suite(verify::identities_suite(v_max_m));
            if (suite == "theorems") return print_suite(verify::theorems_suite(v_max_n));
            if (suite == "lemmas")
                return print_suite(verify::lemmas_suite(v_limit ? v_limit : 1000000));
            if (suite == "theorem1")
                return print_suite(verify::theorem1_suite(v_limit ? v_limit : 1000000,
                                                          std::min<std::uint64_t>(
                                                              v_limit ? v_limit : 10000, 10000)));
            if (suite == "conjecture1")
                return print_suite(verify::conjecture1_suite(
                    v_limit ? v_limit : (std::uint64_t{1} << 24), v_threads));
            std::cerr << "unknown suite '" << suite
                      << "' (expected theorems|lemmas|identities|theorem1|conjecture1)\n";
            return 2;
        }

        if (scan_cmd->parsed()) {
            std::cout << emit_scan_summary(scan_race(scan_cfg), fmt);
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
