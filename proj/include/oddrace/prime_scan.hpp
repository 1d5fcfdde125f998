#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "oddrace/parity.hpp"

namespace oddrace {

struct SieveConfig {
    std::uint64_t limit = std::uint64_t{1} << 24; // inclusive upper bound, <= 2^32
    std::uint64_t segment_size = std::uint64_t{1} << 22; // integers per segment, even
    unsigned threads = 1;
};

/// Running prime-race counts. excess() follows the race convention
/// (odious minus evil), the opposite direction of the Delta quantities.
struct PrimeRaceState {
    std::uint64_t pi_evil = 0;
    std::uint64_t pi_odious = 0;

    std::uint64_t pi() const { return pi_evil + pi_odious; }
    std::int64_t excess() const {
        return static_cast<std::int64_t>(pi_odious) - static_cast<std::int64_t>(pi_evil);
    }
    void add_unchecked(ParityClass c) { (c == ParityClass::Evil ? pi_evil : pi_odious) += 1; }
    friend bool operator==(const PrimeRaceState&, const PrimeRaceState&) = default;
};

/// State of the race after all primes <= 2^exponent.
struct PowerSnapshot {
    unsigned exponent = 0;
    std::uint64_t pi = 0;
    std::uint64_t pi_evil = 0;
    std::uint64_t pi_odious = 0;
    std::int64_t excess = 0;
    friend bool operator==(const PowerSnapshot&, const PowerSnapshot&) = default;
};

/// Minimum of the excess over the dyadic window (2^(n-1), 2^n), sampled at
/// the primes of the window (the excess only moves there).
struct RecordRow {
    unsigned n = 0;
    std::int64_t m_n = 0;
    friend bool operator==(const RecordRow&, const RecordRow&) = default;
};

struct IncrementRow {
    unsigned n = 0;
    std::int64_t delta_exact = 0;   // |excess(2^n) - excess(2^(n-1))|
    double delta_approx = 0.0;      // density-scaled 3^(n/2) estimate
    std::int64_t delta_approx_rounded = 0;
    double even_odd_ratio = 0.0;    // delta(n)/delta(n-1) for even n, else 0
    friend bool operator==(const IncrementRow&, const IncrementRow&) = default;
};

struct Table2Row {
    unsigned m = 0;
    double x = 0.0;       // ln(excess(4^m)) / ln(4^m)
    double x_star = 0.0;  // ln(floor(3 pi(n)/n * Delta_3^odd(n))) / ln(n), n = 4^m
    std::int64_t excess = 0;
    std::uint64_t pi = 0;
    std::int64_t delta3_odd = 0;
    std::int64_t scaled_estimate = 0;
    friend bool operator==(const Table2Row&, const Table2Row&) = default;
};

/// Everything one ordered pass over the primes produces.
struct RaceScanResult {
    SieveConfig config;
    PrimeRaceState final_state;
    std::vector<PowerSnapshot> snapshots;      // exponents 1..floor(log2 limit)
    std::vector<RecordRow> window_minima;      // complete windows, n >= 2
    std::vector<std::uint64_t> record_primes;  // strictly increasing excess records
    std::vector<std::uint64_t> majority_exceptions; // n with pi_evil(n) > pi_odious(n)
    bool majority_exceptions_truncated = false;
};

using PrimeVisitor = std::function<void(std::uint64_t prime, ParityClass cls)>;

/// Streams every prime <= config.limit in increasing order (deterministic for
/// any thread count) and returns the final race state.
PrimeRaceState for_each_prime(const SieveConfig& config, const PrimeVisitor& visit);

RaceScanResult scan_race(const SieveConfig& config);

/// Row extraction from a finished scan. Ranges must be covered by the scan
/// limit; otherwise std::invalid_argument.
std::vector<RecordRow> record_minima(const RaceScanResult& scan, unsigned min_n, unsigned max_n);
std::vector<Table2Row> table2_rows(const RaceScanResult& scan, unsigned min_m, unsigned max_m);
std::vector<IncrementRow> increments(const RaceScanResult& scan, unsigned min_n, unsigned max_n);

std::vector<std::uint64_t> record_primes(std::uint64_t limit, unsigned threads = 1);
std::vector<std::uint64_t> conjecture1_exceptions(std::uint64_t limit, unsigned threads = 1);

/// Both routes to the odd-composite parity imbalance at n.
struct Theorem1Result {
    std::int64_t prime_excess = 0;  // pi_odious(n) - pi_evil(n), primes <= n
    std::int64_t sigma_delta = 0;   // evil - odious over odd composites < n
    std::int64_t epsilon = 0;       // prime_excess - sigma_delta
    bool ie_computed = false;
    std::int64_t sigma_delta_ie = 0; // sigma_delta recomputed through the
                                     // square-free-modulus expansion
    std::int64_t epsilon_ie = 0;
};

/// Direct sieve classification plus, for n <= 10^4 (or force_ie), the
/// inclusion-exclusion route over odd square-free moduli evaluated with the
/// digit-DP counter.
Theorem1Result theorem1_epsilon(std::uint64_t n, bool force_ie = false);

struct Theorem1ScanResult {
    std::int64_t max_abs_epsilon = 0;
    std::uint64_t argmax_n = 0;
    bool ie_checked = false;
    std::uint64_t ie_mismatches = 0;     // n where the IE route disagrees
    std::uint64_t ie_anchors_checked = 0; // n where the full digit-DP sum ran
    std::uint64_t ie_anchor_mismatches = 0;
};

/// Evaluates epsilon_n for every 3 <= n <= limit. With with_ie, also carries
/// the inclusion-exclusion form along the scan and re-derives it from scratch
/// by digit DP at a handful of anchor points.
Theorem1ScanResult theorem1_scan(std::uint64_t limit, bool with_ie);

/// Excess of the odious over the evil integers coprime to 6 below n.
std::int64_t coprime6_excess(std::uint64_t n);

/// x and x* at an arbitrary bound (scans primes <= n). Throws
/// std::domain_error when a log argument is not positive; cross-checks the
/// coprime-to-6 excess against the odd delta while it is at it.
Table2Row heuristic_estimator(std::uint64_t n, unsigned threads = 1);

} // namespace oddrace
