#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "oddrace/parity.hpp"

namespace oddrace {

/// Thrown when a closed form is asked for exponents outside the range of the
/// case it belongs to. The message names the violated bound; callers fall
/// back to the digit-DP oracle.
struct ClosedFormRangeError : std::domain_error {
    using std::domain_error::domain_error;
};

/// The canonical interval shapes the closed forms are stated on:
///   FromZero:         [0, 2^n)
///   PowerPlus:        [2^n, 2^n + 2^m),                m <= n-1
///   PowerPlusQuarter: [2^n + 2^(n-2), ... + 2^m),      n >= 2, m <= n-3
struct DyadicInterval {
    enum class Form : std::uint8_t { FromZero, PowerPlus, PowerPlusQuarter };

    Form form = Form::FromZero;
    unsigned n = 0;
    unsigned m = 0;

    static DyadicInterval from_zero(unsigned n);
    static DyadicInterval power_plus(unsigned n, unsigned m);
    static DyadicInterval power_plus_quarter(unsigned n, unsigned m);

    std::uint64_t lo() const;
    std::uint64_t hi() const;
};

/// Set-bit exponents of a prefix, with the even/odd exponent counts mod 3
/// that drive the five-case reduction of an arbitrary prefix onto canonical
/// intervals.
struct PrefixDecomposition {
    std::vector<unsigned> exponents; // strictly decreasing
    unsigned alpha = 0;              // #even exponents mod 3
    unsigned beta = 0;               // #odd exponents mod 3
};

PrefixDecomposition decompose_prefix(std::uint64_t prefix);

std::int64_t pow3(unsigned k);

/// Closed-form Delta_3^odd on a canonical interval. Throws
/// ClosedFormRangeError outside the stated case ranges.
std::int64_t thm2_delta3_odd(const DyadicInterval& interval);

/// Closed-form Delta_3 (all integers divisible by 3) on a canonical interval.
std::int64_t thm3_delta3(const DyadicInterval& interval);

/// Evil-minus-odious among integers = h (mod 3) below 2^n, h in {1, 2}.
/// Ships the enumeration-confirmed forms; see README for the case-label note.
std::int64_t lemma6_delta_3h(int h, unsigned n);

/// Closed-form evil/odious counts of multiples of 3 below 2^n (n >= 1).
CountPair nu3_closed(unsigned n);

/// Closed-form evil/odious counts of odd multiples of 3 below 2^n (n >= 2).
CountPair mu3_closed(unsigned n);

/// One piece of the prefix decomposition: the interval [lo, lo + 2^m) and the
/// delta contributed by it, with whether the closed form or the oracle
/// produced the value.
struct DecompositionTerm {
    std::uint64_t lo = 0;
    unsigned m = 0;
    std::int64_t value = 0;
    bool closed_form = true;
};

/// Delta_3^odd([0, n)) by walking set bits most-significant first and mapping
/// each piece onto a canonical closed form (oracle fallback outside case
/// ranges). Exact for any n < 2^62.
std::int64_t delta3_odd_prefix(std::uint64_t n);
std::int64_t delta3_odd_prefix(std::uint64_t n, std::vector<DecompositionTerm>* terms);

/// Delta_3([0, n)), same reduction against the all-integers closed forms.
std::int64_t delta3_prefix(std::uint64_t n);
std::int64_t delta3_prefix(std::uint64_t n, std::vector<DecompositionTerm>* terms);

/// ln(Delta_3^odd([0,n))) / ln n. Requires n >= 2 and a positive delta;
/// throws std::domain_error otherwise.
double thm4_exponent(std::uint64_t n);

} // namespace oddrace
