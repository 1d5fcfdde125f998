#include "oddrace/verify.hpp"

#include <cmath>
#include <cstdio>
#include <string>

#include "oddrace/binomial.hpp"
#include "oddrace/delta3.hpp"
#include "oddrace/digit_dp.hpp"
#include "oddrace/parity.hpp"
#include "oddrace/prime_scan.hpp"

namespace oddrace::verify {

namespace {

void add(SuiteResult& s, const std::string& name, bool pass, const std::string& detail = "") {
    s.checks.push_back({name, pass, detail});
}

std::string num(std::int64_t v) { return std::to_string(v); }

} // namespace

SuiteResult identities_suite(unsigned max_m) {
    SuiteResult s{"identities", {}};

    bool ok = true;
    std::string detail;
    for (unsigned m = 1; m <= max_m && ok; ++m) {
        for (auto [name, pair] : {std::pair{"lemma3", lemma3_lhs_rhs(m)},
                                  std::pair{"lemma4", lemma4_lhs_rhs(m)},
                                  std::pair{"lemma5", lemma5_lhs_rhs(m)},
                                  std::pair{"eq30", eq30_lhs_rhs(m)}}) {
            if (pair.first != pair.second) {
                ok = false;
                detail = std::string(name) + " fails at m=" + num(m);
            }
        }
    }
    add(s, "sum identities, 1 <= m <= " + num(max_m), ok, detail);

    ok = true;
    detail.clear();
    const unsigned conv_max = std::min(max_m, 40u);
    for (unsigned m = 1; m <= conv_max && ok; ++m) {
        for (unsigned k = 0; 3 * k <= m && ok; ++k) {
            for (auto v : {ConvolutionVariant::Symmetric, ConvolutionVariant::SecondLowered,
                           ConvolutionVariant::FirstLowered, ConvolutionVariant::ShiftUp,
                           ConvolutionVariant::ShiftDown}) {
                const auto [lhs, rhs] = convolution_identity(m, k, v);
                if (lhs != rhs) {
                    ok = false;
                    detail = "variant " + num(static_cast<int>(v)) + " fails at m=" + num(m) +
                             ", k=" + num(k);
                }
            }
        }
    }
    add(s, "convolution identities, m <= " + num(conv_max) + ", all variants", ok, detail);

    ok = true;
    detail.clear();
    for (unsigned l = 1; l <= 40 && ok; ++l) {
        for (unsigned k = 1; k <= l / 3 + 1 && ok; ++k) {
            const auto [lhs, rhs] = eq35_identity(l, k);
            if (lhs != rhs) {
                ok = false;
                detail = "fails at l=" + num(l) + ", k=" + num(k);
            }
        }
    }
    add(s, "recombination identity, l <= 40, k >= 1", ok, detail);

    // the identity is two Pascal steps, so k = 0 holds too (the use site only
    // ever needs k >= 1)
    ok = true;
    detail.clear();
    for (unsigned l = 1; l <= 40 && ok; ++l) {
        const auto [lhs0, rhs0] = eq35_identity(l, 0);
        if (lhs0 != rhs0) {
            ok = false;
            detail = "l=" + num(l) + ": " + lhs0.str() + " vs " + rhs0.str();
        }
    }
    add(s, "recombination identity extends to k = 0", ok, detail);

    return s;
}

SuiteResult theorems_suite(unsigned max_n) {
    SuiteResult s{"theorems", {}};

    std::uint64_t instances = 0;
    bool ok = true;
    std::string detail;
    auto check_interval = [&](const DyadicInterval& iv, bool odd_variant) {
        const std::int64_t closed = odd_variant ? thm2_delta3_odd(iv) : thm3_delta3(iv);
        const std::int64_t oracle =
            delta_interval(3, iv.lo(), iv.hi(), odd_variant ? Oddness::OddOnly : Oddness::Any);
        ++instances;
        if (closed != oracle && ok) {
            ok = false;
            detail = std::string(odd_variant ? "odd" : "all") + " form " +
                     num(static_cast<int>(iv.form)) + " n=" + num(iv.n) + " m=" + num(iv.m) +
                     ": closed " + num(closed) + " vs oracle " + num(oracle);
        }
    };

    for (unsigned n = 2; n <= max_n; ++n) check_interval(DyadicInterval::from_zero(n), true);
    for (unsigned n = 1; n <= max_n; ++n) check_interval(DyadicInterval::from_zero(n), false);
    for (unsigned n = 1; n <= max_n; ++n) {
        for (unsigned m = 0; m + 1 <= n; ++m) {
            const auto iv = DyadicInterval::power_plus(n, m);
            const bool ee = !(n & 1) && !(m & 1), oe = (n & 1) && !(m & 1);
            const bool eo = !(n & 1) && (m & 1), oo = (n & 1) && (m & 1);
            if ((ee && 2 <= m && m + 2 <= n) || (oe && 2 <= m) || (eo && 3 <= m) ||
                (oo && 3 <= m && m + 2 <= n))
                check_interval(iv, true);
            if ((n & 1 && m >= 1) || (ee && 2 <= m && m + 2 <= n) || (eo && 1 <= m))
                check_interval(iv, false);
        }
        if (n < 3) continue;
        for (unsigned m = 0; m + 3 <= n; ++m) {
            const auto iv = DyadicInterval::power_plus_quarter(n, m);
            const bool ee = !(n & 1) && !(m & 1), oe = (n & 1) && !(m & 1);
            const bool eo = !(n & 1) && (m & 1), oo = (n & 1) && (m & 1);
            if ((ee && 2 <= m && m + 4 <= n) || (oe && 2 <= m) || (eo && 3 <= m) ||
                (oo && 3 <= m && m + 4 <= n))
                check_interval(iv, true);
            if ((!(n & 1) && 1 <= m) || (oe && 2 <= m) || (oo && 1 <= m && m + 4 <= n))
                check_interval(iv, false);
        }
    }
    add(s, "closed forms vs digit-DP oracle, n <= " + num(max_n), ok,
        ok ? num(static_cast<std::int64_t>(instances)) + " instances" : detail);

    // residue classes mod 3 below 2^n
    ok = true;
    detail.clear();
    for (unsigned n = 0; n <= std::min(max_n, 16u) && ok; ++n) {
        for (int h = 1; h <= 2; ++h) {
            const std::int64_t closed = lemma6_delta_3h(h, n);
            const std::int64_t oracle = delta_interval(3, 0, std::uint64_t{1} << n, Oddness::Any,
                                                       static_cast<std::uint64_t>(h));
            if (closed != oracle) {
                ok = false;
                detail = "h=" + num(h) + " n=" + num(n) + ": " + num(closed) + " vs " + num(oracle);
            }
        }
    }
    add(s, "residue-class deltas match enumeration (case labels swapped vs the printed reference)",
        ok, ok ? "shipped forms follow the exact counter" : detail);

    ok = true;
    detail.clear();
    for (unsigned n = 1; n <= std::min(max_n, 40u) && ok; ++n) {
        const CountPair nu3 = nu3_closed(n);
        const std::uint64_t bound = std::uint64_t{1} << n;
        if (nu3.delta() != thm3_delta3(DyadicInterval::from_zero(n)) ||
            nu3.total() != count({bound, 3, 0, Oddness::Any})) {
            ok = false;
            detail = "nu3 at n=" + num(n);
        }
        if (n >= 2) {
            const CountPair mu3 = mu3_closed(n);
            if (mu3.delta() != thm2_delta3_odd(DyadicInterval::from_zero(n)) ||
                mu3.total() != count({bound, 3, 0, Oddness::OddOnly})) {
                ok = false;
                detail = "mu3 at n=" + num(n);
            }
        }
    }
    add(s, "counting functions nu3/mu3 agree with deltas and totals", ok, detail);

    ok = true;
    detail.clear();
    const std::uint64_t prefix_cap = std::uint64_t{1} << std::min(max_n, 16u);
    for (std::uint64_t n = 0; n <= prefix_cap; ++n) {
        if (delta3_odd_prefix(n) != delta_a_odd(3, n)) {
            ok = false;
            detail = "odd prefix at n=" + num(static_cast<std::int64_t>(n));
            break;
        }
        if (delta3_prefix(n) != delta_interval(3, 0, n, Oddness::Any)) {
            ok = false;
            detail = "full prefix at n=" + num(static_cast<std::int64_t>(n));
            break;
        }
    }
    add(s, "prefix decomposition equals oracle up to 2^" + num(std::min(max_n, 16u)), ok, detail);

    // growth envelope of the odd delta on canonical endpoints
    ok = true;
    detail.clear();
    for (unsigned n = 4; n <= std::min(max_n + 4, 24u) && ok; ++n) {
        const double scale = std::pow(3.0, n / 2.0);
        auto within = [&](std::uint64_t endpoint) {
            const auto d = static_cast<double>(delta3_odd_prefix(endpoint));
            return 0.005 * scale <= d && d <= 2.0 * scale;
        };
        if (!within(std::uint64_t{1} << n)) {
            ok = false;
            detail = "endpoint 2^" + num(n);
        }
        for (unsigned m = 2; m + 1 <= n && ok; ++m)
            if (!within((std::uint64_t{1} << n) + (std::uint64_t{1} << m))) {
                ok = false;
                detail = "endpoint 2^" + num(n) + "+2^" + num(m);
            }
        for (unsigned m = 2; m + 3 <= n && ok; ++m)
            if (!within((std::uint64_t{1} << n) + (std::uint64_t{1} << (n - 2)) +
                        (std::uint64_t{1} << m))) {
                ok = false;
                detail = "endpoint 2^" + num(n) + "+2^" + num(n - 2) + "+2^" + num(m);
            }
    }
    add(s, "sandwich bound 0.005*3^(n/2) <= delta <= 2*3^(n/2)", ok, detail);

    return s;
}

SuiteResult lemmas_suite(std::uint64_t limit) {
    SuiteResult s{"lemmas", {}};

    bool balance_ok = true, even_ok = true, halving_ok = true, mod3_ok = true;
    std::string balance_detail, even_detail, halving_detail, mod3_detail;

    CountPair run;   // all integers < n
    CountPair evens; // even integers < n
    for (std::uint64_t n = 0; n <= limit; ++n) {
        const CountPair nu = nu_counts(n);
        if (nu != run) {
            balance_ok = false;
            balance_detail = "nu_counts mismatch at n=" + std::to_string(n);
            break;
        }
        if (std::llabs(nu.delta()) > 1) {
            balance_ok = false;
            balance_detail = "|delta| > 1 at n=" + std::to_string(n);
            break;
        }
        if (!(n & 1) && nu.delta() != 0 && even_ok) {
            even_ok = false;
            even_detail = "even bound delta != 0 at n=" + std::to_string(n);
        }
        const CountPair lam = lambda_counts(n);
        if ((lam != evens || lam.delta() != nu_counts((n + 1) / 2).delta()) && halving_ok) {
            halving_ok = false;
            halving_detail = "lambda mismatch at n=" + std::to_string(n);
        }
        if ((divisible_by_3(n) != (n % 3 == 0)) && mod3_ok) {
            mod3_ok = false;
            mod3_detail = "criterion disagrees at n=" + std::to_string(n);
        }
        run.add(classify(n));
        if (!(n & 1)) evens.add(classify(n));
    }
    const std::string up_to = " for n <= " + std::to_string(limit);
    add(s, "counters match enumeration and |nu^e - nu^o| <= 1" + up_to, balance_ok, balance_detail);
    add(s, "nu^e(2m) = nu^o(2m)" + up_to, even_ok, even_detail);
    add(s, "even-integer counters halve the bound" + up_to, halving_ok, halving_detail);
    add(s, "bit-position criterion for divisibility by 3" + up_to, mod3_ok, mod3_detail);
    return s;
}

SuiteResult theorem1_suite(std::uint64_t eps_limit, std::uint64_t ie_limit) {
    SuiteResult s{"theorem1", {}};

    const Theorem1ScanResult eps = theorem1_scan(eps_limit, false);
    add(s, "|epsilon_n| <= 4 for n <= " + std::to_string(eps_limit), eps.max_abs_epsilon <= 4,
        "max |epsilon| = " + num(eps.max_abs_epsilon) + " at n=" + std::to_string(eps.argmax_n));

    const Theorem1ScanResult ie = theorem1_scan(ie_limit, true);
    add(s, "inclusion-exclusion form equals sigma form for n <= " + std::to_string(ie_limit),
        ie.ie_mismatches == 0, num(static_cast<std::int64_t>(ie.ie_mismatches)) + " mismatches");
    add(s, "digit-DP anchors reproduce the carried expansion",
        ie.ie_anchors_checked > 0 && ie.ie_anchor_mismatches == 0,
        std::to_string(ie.ie_anchors_checked) + " anchors");
    return s;
}

SuiteResult conjecture1_suite(std::uint64_t limit, unsigned threads) {
    SuiteResult s{"conjecture1", {}};

    SieveConfig cfg;
    cfg.limit = limit;
    cfg.threads = threads;
    const RaceScanResult scan = scan_race(cfg);

    const bool exc_ok = !scan.majority_exceptions_truncated &&
                        scan.majority_exceptions == std::vector<std::uint64_t>{5, 6};
    std::string exc_detail = "{";
    for (std::size_t i = 0; i < scan.majority_exceptions.size() && i < 8; ++i)
        exc_detail += (i ? "," : "") + std::to_string(scan.majority_exceptions[i]);
    exc_detail += "}";
    add(s, "evil-majority exceptions up to " + std::to_string(limit) + " are exactly {5, 6}",
        exc_ok, exc_detail);

    // The printed reference list skips 61, where the excess first reaches 4;
    // the computed prefix is enumeration-confirmed and every printed prime
    // must appear in it as a record, in order.
    const std::vector<std::uint64_t> computed_prefix{2, 13, 41, 61, 67, 79, 109, 131, 137};
    const std::vector<std::uint64_t> printed_prefix{2, 13, 41, 67, 79, 109, 131, 137};
    bool prefix_ok = scan.record_primes.size() >= computed_prefix.size() &&
                     std::equal(computed_prefix.begin(), computed_prefix.end(),
                                scan.record_primes.begin());
    std::size_t hit = 0;
    for (const std::uint64_t p : scan.record_primes)
        if (hit < printed_prefix.size() && p == printed_prefix[hit]) ++hit;
    prefix_ok = prefix_ok && hit == printed_prefix.size();
    add(s, "record primes start 2, 13, 41, 61, 67, 79, 109, 131, 137 "
           "(printed reference omits 61)",
        prefix_ok, std::to_string(scan.record_primes.size()) + " records total");

    bool records_odious = true;
    for (const std::uint64_t p : scan.record_primes)
        if (classify(p) != ParityClass::Odious) records_odious = false;
    add(s, "every record is set by an odious prime", records_odious);

    bool monotone = true;
    std::string mono_detail;
    const auto rows = scan.window_minima;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        if (rows[i].n >= 5 && rows[i - 1].n >= 5 && rows[i].m_n < rows[i - 1].m_n) {
            monotone = false;
            mono_detail = "m_n drops at n=" + std::to_string(rows[i].n);
        }
    }
    add(s, "window minima nondecreasing from n = 5 (observed property)", monotone, mono_detail);

    return s;
}

} // namespace oddrace::verify
