#include "oddrace/prime_scan.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <vector>

#include "oddrace/delta3.hpp"
#include "oddrace/digit_dp.hpp"

namespace oddrace {

namespace {

constexpr std::uint64_t kMaxSieveLimit = std::uint64_t{1} << 32;
constexpr std::size_t kMaxStoredExceptions = 1 << 16;

void validate(const SieveConfig& cfg) {
    if (cfg.limit < 3) throw std::invalid_argument("sieve: limit must be >= 3");
    if (cfg.limit > kMaxSieveLimit) throw std::invalid_argument("sieve: limit exceeds 2^32 cap");
    if (cfg.segment_size < 2 || (cfg.segment_size & 1))
        throw std::invalid_argument("sieve: segment_size must be even and >= 2");
    if (cfg.threads < 1) throw std::invalid_argument("sieve: threads must be >= 1");
}

std::uint64_t isqrt(std::uint64_t n) {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

std::vector<std::uint32_t> odd_primes_upto(std::uint64_t n) {
    std::vector<std::uint32_t> primes;
    if (n < 3) return primes;
    std::vector<bool> composite(n + 1, false);
    for (std::uint64_t i = 3; i * i <= n; i += 2) {
        if (composite[i]) continue;
        for (std::uint64_t j = i * i; j <= n; j += 2 * i) composite[j] = true;
    }
    for (std::uint64_t i = 3; i <= n; i += 2)
        if (!composite[i]) primes.push_back(static_cast<std::uint32_t>(i));
    return primes;
}

// Bit i represents the odd value lo + 2i; set = survives sieving.
struct Segment {
    std::uint64_t lo = 0; // odd
    std::uint64_t hi = 0; // exclusive
    std::vector<std::uint64_t> words;
};

void sieve_segment(Segment& seg, const std::vector<std::uint32_t>& base) {
    const std::uint64_t nbits = (seg.hi - seg.lo + 1) / 2;
    seg.words.assign((nbits + 63) / 64, ~std::uint64_t{0});
    if (nbits % 64) seg.words.back() = (std::uint64_t{1} << (nbits % 64)) - 1;

    for (const std::uint32_t p : base) {
        const std::uint64_t p2 = std::uint64_t{p} * p;
        if (p2 >= seg.hi) break;
        std::uint64_t start = ((seg.lo + p - 1) / p) * p;
        if (start < p2) start = p2;
        if (!(start & 1)) start += p;
        for (std::uint64_t v = start; v < seg.hi; v += 2 * p) {
            const std::uint64_t idx = (v - seg.lo) / 2;
            seg.words[idx >> 6] &= ~(std::uint64_t{1} << (idx & 63));
        }
    }
    if (seg.lo == 1) seg.words[0] &= ~std::uint64_t{1}; // 1 is not prime
}

} // namespace

PrimeRaceState for_each_prime(const SieveConfig& cfg, const PrimeVisitor& visit) {
    validate(cfg);

    PrimeRaceState state;
    state.pi_odious = 1; // 2
    if (visit) visit(2, ParityClass::Odious);

    const auto base = odd_primes_upto(isqrt(cfg.limit));

    // Segments are sieved in parallel batches but always consumed in order,
    // so every derived quantity is independent of the thread count.
    const std::uint64_t span = cfg.segment_size;
    std::uint64_t next_lo = 3;
    std::vector<Segment> batch(cfg.threads);

    while (next_lo <= cfg.limit) {
        unsigned used = 0;
        for (unsigned t = 0; t < cfg.threads && next_lo <= cfg.limit; ++t) {
            batch[t].lo = next_lo;
            batch[t].hi = std::min(cfg.limit + 1, next_lo + span);
            next_lo = batch[t].hi;
            if (!(next_lo & 1)) ++next_lo; // keep segment origins odd
            ++used;
        }
        if (used == 1) {
            sieve_segment(batch[0], base);
        } else {
            std::vector<std::thread> workers;
            workers.reserve(used - 1);
            for (unsigned t = 1; t < used; ++t)
                workers.emplace_back([&batch, &base, t] { sieve_segment(batch[t], base); });
            sieve_segment(batch[0], base);
            for (auto& w : workers) w.join();
        }
        for (unsigned t = 0; t < used; ++t) {
            const Segment& seg = batch[t];
            for (std::size_t wi = 0; wi < seg.words.size(); ++wi) {
                std::uint64_t word = seg.words[wi];
                while (word) {
                    const int bit = std::countr_zero(word);
                    word &= word - 1;
                    const std::uint64_t p = seg.lo + 2 * (64 * wi + static_cast<std::uint64_t>(bit));
                    const ParityClass cls = classify(p);
                    state.add_unchecked(cls);
                    if (visit) visit(p, cls);
                }
            }
        }
    }
    return state;
}

RaceScanResult scan_race(const SieveConfig& cfg) {
    validate(cfg);

    RaceScanResult out;
    out.config = cfg;

    const unsigned max_exp = static_cast<unsigned>(std::bit_width(cfg.limit)) - 1;
    std::vector<std::optional<std::int64_t>> minima(max_exp + 2);

    PrimeRaceState st;
    unsigned next_exp = 1;
    std::int64_t best_excess = 0;
    std::uint64_t prev_prime = 1;

    auto flush_powers_below = [&](std::uint64_t x) {
        while (next_exp <= max_exp && (std::uint64_t{1} << next_exp) < x) {
            out.snapshots.push_back(
                {next_exp, st.pi(), st.pi_evil, st.pi_odious, st.excess()});
            ++next_exp;
        }
    };
    auto note_exception_span = [&](std::uint64_t from, std::uint64_t to_inclusive) {
        if (st.excess() >= 0) return;
        for (std::uint64_t n = from; n <= to_inclusive; ++n) {
            if (out.majority_exceptions.size() >= kMaxStoredExceptions) {
                out.majority_exceptions_truncated = true;
                return;
            }
            out.majority_exceptions.push_back(n);
        }
    };

    for_each_prime(cfg, [&](std::uint64_t p, ParityClass cls) {
        flush_powers_below(p);
        if (p > prev_prime) note_exception_span(prev_prime, p - 1);

        st.add_unchecked(cls);

        if (st.excess() > best_excess) {
            best_excess = st.excess();
            out.record_primes.push_back(p);
        }
        // p sits in the open window (2^(w-1), 2^w); only p = 2 is a power of 2
        const auto w = static_cast<unsigned>(std::bit_width(p));
        if (p != (std::uint64_t{1} << (w - 1)) && w <= max_exp) {
            auto& slot = minima[w];
            if (!slot || st.excess() < *slot) slot = st.excess();
        }
        prev_prime = p;
    });

    flush_powers_below(cfg.limit + 1);
    while (next_exp <= max_exp) {
        out.snapshots.push_back({next_exp, st.pi(), st.pi_evil, st.pi_odious, st.excess()});
        ++next_exp;
    }
    note_exception_span(prev_prime, cfg.limit);

    for (unsigned n = 2; n <= max_exp; ++n)
        if (minima[n]) out.window_minima.push_back({n, *minima[n]});

    out.final_state = st;
    return out;
}

namespace {

const PowerSnapshot& snapshot_at(const RaceScanResult& scan, unsigned exponent) {
    for (const auto& s : scan.snapshots)
        if (s.exponent == exponent) return s;
    throw std::invalid_argument("scan does not cover exponent " + std::to_string(exponent));
}

} // namespace

std::vector<RecordRow> record_minima(const RaceScanResult& scan, unsigned min_n, unsigned max_n) {
    if (min_n < 2 || min_n > max_n) throw std::invalid_argument("record_minima: bad range");
    std::vector<RecordRow> rows;
    for (unsigned n = min_n; n <= max_n; ++n) {
        const auto it = std::find_if(scan.window_minima.begin(), scan.window_minima.end(),
                                     [n](const RecordRow& r) { return r.n == n; });
        if (it == scan.window_minima.end())
            throw std::invalid_argument("scan does not cover window n=" + std::to_string(n));
        rows.push_back(*it);
    }
    return rows;
}

std::vector<Table2Row> table2_rows(const RaceScanResult& scan, unsigned min_m, unsigned max_m) {
    if (min_m < 2 || min_m > max_m) throw std::invalid_argument("table2_rows: requires 2 <= min_m <= max_m");
    std::vector<Table2Row> rows;
    for (unsigned m = min_m; m <= max_m; ++m) {
        const PowerSnapshot& snap = snapshot_at(scan, 2 * m);
        const std::uint64_t n = std::uint64_t{1} << (2 * m);
        if (snap.excess <= 0)
            throw std::domain_error("table2: excess at 4^" + std::to_string(m) + " is not positive");

        Table2Row row;
        row.m = m;
        row.excess = snap.excess;
        row.pi = snap.pi;
        row.delta3_odd = delta3_odd_prefix(n);
        // floor of the density-scaled estimate; the reference table takes the
        // integer part before the logarithm
        row.scaled_estimate = static_cast<std::int64_t>(
            3 * snap.pi * static_cast<std::uint64_t>(row.delta3_odd) / n);
        if (row.scaled_estimate <= 0)
            throw std::domain_error("table2: scaled estimate vanished at m=" + std::to_string(m));
        const double ln_n = std::log(static_cast<double>(n));
        row.x = std::log(static_cast<double>(row.excess)) / ln_n;
        row.x_star = std::log(static_cast<double>(row.scaled_estimate)) / ln_n;
        rows.push_back(row);
    }
    return rows;
}

std::vector<IncrementRow> increments(const RaceScanResult& scan, unsigned min_n, unsigned max_n) {
    if (min_n < 15 || min_n > max_n)
        throw std::invalid_argument("increments: requires 15 <= min_n <= max_n");
    std::vector<IncrementRow> rows;
    for (unsigned n = min_n; n <= max_n; ++n) {
        const PowerSnapshot& cur = snapshot_at(scan, n);
        const PowerSnapshot& prev = snapshot_at(scan, n - 1);

        IncrementRow row;
        row.n = n;
        row.delta_exact = std::llabs(cur.excess - prev.excess);

        const double dens_cur =
            static_cast<double>(cur.pi) / static_cast<double>(std::uint64_t{1} << n);
        const double dens_prev =
            static_cast<double>(prev.pi) / static_cast<double>(std::uint64_t{1} << (n - 1));
        if (n & 1) {
            row.delta_approx =
                static_cast<double>(pow3((n - 1) / 2)) * std::fabs(dens_prev - dens_cur);
        } else {
            row.delta_approx =
                static_cast<double>(pow3(n / 2 - 1)) * (3.0 * dens_cur - dens_prev);
        }
        row.delta_approx_rounded = std::llround(row.delta_approx);
        // how many times the jump into an even window exceeds the odd one
        if (!(n & 1)) {
            const std::int64_t prev_jump =
                std::llabs(prev.excess - snapshot_at(scan, n - 2).excess);
            if (prev_jump > 0)
                row.even_odd_ratio =
                    static_cast<double>(row.delta_exact) / static_cast<double>(prev_jump);
        }
        rows.push_back(row);
    }
    return rows;
}

std::vector<std::uint64_t> record_primes(std::uint64_t limit, unsigned threads) {
    SieveConfig cfg;
    cfg.limit = std::max<std::uint64_t>(limit, 3);
    cfg.threads = threads;
    auto scan = scan_race(cfg);
    if (limit < 3) scan.record_primes.resize(limit >= 2 ? 1 : 0);
    return std::move(scan.record_primes);
}

std::vector<std::uint64_t> conjecture1_exceptions(std::uint64_t limit, unsigned threads) {
    SieveConfig cfg;
    cfg.limit = std::max<std::uint64_t>(limit, 7);
    cfg.threads = threads;
    auto scan = scan_race(cfg);
    if (scan.majority_exceptions_truncated)
        throw std::runtime_error("conjecture1: exception list truncated");
    std::vector<std::uint64_t> out;
    for (const std::uint64_t n : scan.majority_exceptions)
        if (n <= limit) out.push_back(n);
    return out;
}

std::int64_t coprime6_excess(std::uint64_t n) {
    const CountPair odd_all = count_pair({n, 1, 0, Oddness::OddOnly});
    const CountPair odd_mult3 = count_pair({n, 3, 0, Oddness::OddOnly});
    const auto evil = static_cast<std::int64_t>(odd_all.evil - odd_mult3.evil);
    const auto odious = static_cast<std::int64_t>(odd_all.odious - odd_mult3.odious);
    return odious - evil;
}

Table2Row heuristic_estimator(std::uint64_t n, unsigned threads) {
    SieveConfig cfg;
    cfg.limit = std::max<std::uint64_t>(n, 3);
    cfg.threads = threads;
    const PrimeRaceState st = for_each_prime(cfg, nullptr);

    Table2Row row;
    row.excess = st.excess();
    row.pi = st.pi();
    row.delta3_odd = delta3_odd_prefix(n);
    // powers of 4 have an even exponent, i.e. odd bit width
    if (n > 0 && (n & (n - 1)) == 0 && (std::bit_width(n) & 1))
        row.m = (static_cast<unsigned>(std::bit_width(n)) - 1) / 2;

    const std::int64_t delta6 = coprime6_excess(n);
    if (std::llabs(delta6 - row.delta3_odd) > 2)
        throw std::logic_error("coprime-6 excess drifted from the odd delta at n=" +
                               std::to_string(n));

    if (row.excess <= 0)
        throw std::domain_error("heuristic_estimator: excess at " + std::to_string(n) +
                                " is not positive");
    row.scaled_estimate =
        3 * static_cast<std::int64_t>(row.pi) * row.delta3_odd / static_cast<std::int64_t>(n);
    if (row.scaled_estimate <= 0)
        throw std::domain_error("heuristic_estimator: scaled estimate vanished");
    const double ln_n = std::log(static_cast<double>(n));
    row.x = std::log(static_cast<double>(row.excess)) / ln_n;
    row.x_star = std::log(static_cast<double>(row.scaled_estimate)) / ln_n;
    return row;
}

} // namespace oddrace
