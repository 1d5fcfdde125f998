#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace oddrace::verify {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct SuiteResult {
    std::string suite;
    std::vector<CheckResult> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

/// Exact binomial identities (big-integer arithmetic, tolerance 0).
SuiteResult identities_suite(unsigned max_m = 64);

/// Every closed-form case row against the digit-DP oracle, the residue-class
/// forms, the counting functions, and the prefix decomposition.
SuiteResult theorems_suite(unsigned max_n = 20);

/// Parity-counter properties: |nu^o - nu^e| <= 1, the even-n equality, the
/// halving identity for even integers, and the bit-position mod-3 criterion.
SuiteResult lemmas_suite(std::uint64_t limit = 1000000);

/// Epsilon bound over all n <= eps_limit and the inclusion-exclusion
/// equality over all n <= ie_limit.
SuiteResult theorem1_suite(std::uint64_t eps_limit = 1000000, std::uint64_t ie_limit = 10000);

/// Evil-majority exceptions and the record-prime prefix.
SuiteResult conjecture1_suite(std::uint64_t limit = std::uint64_t{1} << 24, unsigned threads = 1);

} // namespace oddrace::verify
