#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace oddrace {

/// Reference rows for --check and the acceptance suite, loaded from the
/// versioned JSON data file shipped with the repo.
struct ExpectedValues {
    std::map<unsigned, std::int64_t> table1; // n -> m_n

    struct Table2Expected {
        double x = 0.0;
        double x_star = 0.0;
    };
    std::map<unsigned, Table2Expected> table2; // m -> (x, x*)

    struct Table3Expected {
        std::int64_t delta_exact = 0;
        std::int64_t by45 = 0; // approximation column, header quoted verbatim
    };
    std::map<unsigned, Table3Expected> table3; // n -> row

    std::vector<std::uint64_t> record_primes_prefix;          // as printed (skips 61)
    std::vector<std::uint64_t> record_primes_prefix_computed; // enumeration-confirmed
    std::vector<std::uint64_t> conjecture1_exceptions;
};

ExpectedValues load_expected(const std::string& path);

/// Default path baked at configure time (ODDRACE_DATA_FILE).
std::string default_expected_path();

} // namespace oddrace
