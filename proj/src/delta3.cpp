#include "oddrace/delta3.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "oddrace/digit_dp.hpp"

namespace oddrace {

namespace {

[[noreturn]] void range_error(const std::string& what, unsigned n, unsigned m) {
    throw ClosedFormRangeError(what + ": n=" + std::to_string(n) + ", m=" + std::to_string(m));
}

bool even(unsigned v) { return (v & 1) == 0; }

} // namespace

std::int64_t pow3(unsigned k) {
    if (k > 39) throw std::overflow_error("pow3: exponent too large for int64");
    std::int64_t r = 1;
    while (k--) r *= 3;
    return r;
}

DyadicInterval DyadicInterval::from_zero(unsigned n) {
    if (n > 61) throw std::invalid_argument("DyadicInterval: exponent too large");
    return {Form::FromZero, n, 0};
}

DyadicInterval DyadicInterval::power_plus(unsigned n, unsigned m) {
    if (n > 61) throw std::invalid_argument("DyadicInterval: exponent too large");
    if (n == 0 || m > n - 1)
        throw std::invalid_argument("DyadicInterval: PowerPlus requires m <= n-1");
    return {Form::PowerPlus, n, m};
}

DyadicInterval DyadicInterval::power_plus_quarter(unsigned n, unsigned m) {
    if (n > 61) throw std::invalid_argument("DyadicInterval: exponent too large");
    if (n < 2 || m + 3 > n)
        throw std::invalid_argument("DyadicInterval: PowerPlusQuarter requires n >= 2, m <= n-3");
    return {Form::PowerPlusQuarter, n, m};
}

std::uint64_t DyadicInterval::lo() const {
    switch (form) {
        case Form::FromZero: return 0;
        case Form::PowerPlus: return std::uint64_t{1} << n;
        case Form::PowerPlusQuarter:
            return (std::uint64_t{1} << n) + (std::uint64_t{1} << (n - 2));
    }
    return 0;
}

std::uint64_t DyadicInterval::hi() const {
    if (form == Form::FromZero) return std::uint64_t{1} << n;
    return lo() + (std::uint64_t{1} << m);
}

// ---------------------------------------------------------------------------
// Case rows. The *_row helpers take only the parity of the base exponent so
// the prefix-decomposition can dispatch them symbolically (base exponent
// large enough that its side of the range condition always holds); the
// public interval functions check the full (n, m) ranges first.

namespace {

// Delta_3^odd([2^n, 2^n + 2^m)), range condition on m only.
std::int64_t thm2_power_plus_row(bool n_even, unsigned m) {
    if (even(m)) {
        if (m < 2) range_error("delta3_odd power-plus row requires even m >= 2", 0, m);
        return n_even ? 0 : pow3((m - 2) / 2);
    }
    if (m < 3) range_error("delta3_odd power-plus row requires odd m >= 3", 0, m);
    return n_even ? -pow3((m - 3) / 2) : 2 * pow3((m - 3) / 2);
}

// Delta_3^odd([2^n + 2^(n-2), ... + 2^m)), range condition on m only.
std::int64_t thm2_quarter_row(bool n_even, unsigned m) {
    if (even(m)) {
        if (m < 2) range_error("delta3_odd quarter row requires even m >= 2", 0, m);
        return n_even ? -pow3((m - 2) / 2) : 0;
    }
    if (m < 3) range_error("delta3_odd quarter row requires odd m >= 3", 0, m);
    return n_even ? -2 * pow3((m - 3) / 2) : pow3((m - 3) / 2);
}

// Delta_3([2^n, 2^n + 2^m))
std::int64_t thm3_power_plus_row(bool n_even, unsigned m) {
    if (!n_even) {
        if (m < 1) range_error("delta3 power-plus row requires m >= 1", 0, m);
        return pow3((m - 1) / 2);
    }
    if (even(m)) {
        if (m < 2) range_error("delta3 power-plus row requires even m >= 2", 0, m);
        return pow3(m / 2 - 1);
    }
    return 0; // n even, m odd >= 1
}

// Delta_3([2^n + 2^(n-2), ... + 2^m))
std::int64_t thm3_quarter_row(bool n_even, unsigned m) {
    if (n_even) {
        if (m < 1) range_error("delta3 quarter row requires m >= 1", 0, m);
        return -pow3((m - 1) / 2);
    }
    if (even(m)) {
        if (m < 2) range_error("delta3 quarter row requires even m >= 2", 0, m);
        return -pow3(m / 2 - 1);
    }
    return 0; // n odd, m odd >= 1
}

} // namespace

std::int64_t thm2_delta3_odd(const DyadicInterval& iv) {
    const unsigned n = iv.n, m = iv.m;
    switch (iv.form) {
        case DyadicInterval::Form::FromZero:
            if (n < 2) range_error("delta3_odd([0,2^n)) requires n >= 2", n, m);
            return pow3(n / 2 - 1);
        case DyadicInterval::Form::PowerPlus:
            if (even(n) && even(m) && !(2 <= m && m + 2 <= n))
                range_error("delta3_odd power-plus (n even, m even) requires 2 <= m <= n-2", n, m);
            if (!even(n) && even(m) && !(2 <= m && m + 1 <= n))
                range_error("delta3_odd power-plus (n odd, m even) requires 2 <= m <= n-1", n, m);
            if (even(n) && !even(m) && !(3 <= m && m + 1 <= n))
                range_error("delta3_odd power-plus (n even, m odd) requires 3 <= m <= n-1", n, m);
            if (!even(n) && !even(m) && !(3 <= m && m + 2 <= n))
                range_error("delta3_odd power-plus (n odd, m odd) requires 3 <= m <= n-2", n, m);
            return thm2_power_plus_row(even(n), m);
        case DyadicInterval::Form::PowerPlusQuarter:
            if (even(n) && even(m) && !(2 <= m && m + 4 <= n))
                range_error("delta3_odd quarter (n even, m even) requires 2 <= m <= n-4", n, m);
            if (!even(n) && even(m) && !(2 <= m && m + 3 <= n))
                range_error("delta3_odd quarter (n odd, m even) requires 2 <= m <= n-3", n, m);
            if (even(n) && !even(m) && !(3 <= m && m + 3 <= n))
                range_error("delta3_odd quarter (n even, m odd) requires 3 <= m <= n-3", n, m);
            if (!even(n) && !even(m) && !(3 <= m && m + 4 <= n))
                range_error("delta3_odd quarter (n odd, m odd) requires 3 <= m <= n-4", n, m);
            return thm2_quarter_row(even(n), m);
    }
    throw std::logic_error("unreachable");
}

std::int64_t thm3_delta3(const DyadicInterval& iv) {
    const unsigned n = iv.n, m = iv.m;
    switch (iv.form) {
        case DyadicInterval::Form::FromZero:
            if (even(n)) {
                if (n < 2) range_error("delta3([0,2^n)) requires even n >= 2", n, m);
                return 2 * pow3(n / 2 - 1);
            }
            return pow3((n - 1) / 2); // n odd >= 1
        case DyadicInterval::Form::PowerPlus:
            if (!even(n) && !(1 <= m && m + 1 <= n))
                range_error("delta3 power-plus (n odd) requires 1 <= m <= n-1", n, m);
            if (even(n) && even(m) && !(2 <= m && m + 2 <= n))
                range_error("delta3 power-plus (n even, m even) requires 2 <= m <= n-2", n, m);
            if (even(n) && !even(m) && !(1 <= m && m + 1 <= n))
                range_error("delta3 power-plus (n even, m odd) requires 1 <= m <= n-1", n, m);
            return thm3_power_plus_row(even(n), m);
        case DyadicInterval::Form::PowerPlusQuarter:
            if (even(n) && !(1 <= m && m + 3 <= n))
                range_error("delta3 quarter (n even) requires 1 <= m <= n-3", n, m);
            if (!even(n) && even(m) && !(2 <= m && m + 3 <= n))
                range_error("delta3 quarter (n odd, m even) requires 2 <= m <= n-3", n, m);
            if (!even(n) && !even(m) && !(1 <= m && m + 4 <= n))
                range_error("delta3 quarter (n odd, m odd) requires 1 <= m <= n-4", n, m);
            return thm3_quarter_row(even(n), m);
    }
    throw std::logic_error("unreachable");
}

std::int64_t lemma6_delta_3h(int h, unsigned n) {
    if (h != 1 && h != 2) throw std::invalid_argument("lemma6_delta_3h: h must be 1 or 2");
    if (h == 1) {
        if (n == 0) return 0;
        return -pow3((n - 1) / 2);
    }
    if (n < 2 || !even(n)) return 0;
    return -pow3(n / 2 - 1);
}

CountPair nu3_closed(unsigned n) {
    if (n < 1 || n > 61) throw std::invalid_argument("nu3_closed: requires 1 <= n <= 61");
    std::int64_t half_total, spread;
    if (even(n)) {
        // total multiples of 3 below 2^n is 2 * (2^(n-1)+1)/3
        half_total = ((std::int64_t{1} << (n - 1)) + 1) / 3;
        spread = pow3(n / 2 - 1);
        return {static_cast<std::uint64_t>(half_total + spread),
                static_cast<std::uint64_t>(half_total - spread)};
    }
    half_total = ((std::int64_t{1} << n) + 1) / 3;
    spread = pow3((n - 1) / 2);
    return {static_cast<std::uint64_t>((half_total + spread) / 2),
            static_cast<std::uint64_t>((half_total - spread) / 2)};
}

CountPair mu3_closed(unsigned n) {
    if (n < 2 || n > 61) throw std::invalid_argument("mu3_closed: requires 2 <= n <= 61");
    const std::int64_t total = ((std::int64_t{1} << (n - 1)) + 1) / 3;
    const std::int64_t spread = pow3(n / 2 - 1);
    return {static_cast<std::uint64_t>((total + spread) / 2),
            static_cast<std::uint64_t>((total - spread) / 2)};
}

// ---------------------------------------------------------------------------
// Prefix decomposition.
//
// Walking the set bits of n most-significant first splits [0, n) into pieces
// [prefix, prefix + 2^m). With k bits consumed, alpha/beta the even/odd
// exponent counts mod 3, the piece reduces to a canonical interval: the sign
// is (-1)^k (one extra flip when a substitute one-bit prefix stands in), and
// alpha - beta in {-2..2} selects which case row applies.

PrefixDecomposition decompose_prefix(std::uint64_t prefix) {
    PrefixDecomposition out;
    unsigned a = 0, b = 0;
    for (int p = 62; p >= 0; --p) {
        if ((prefix >> p) & 1) {
            out.exponents.push_back(static_cast<unsigned>(p));
            (even(static_cast<unsigned>(p)) ? a : b)++;
        }
    }
    out.alpha = a % 3;
    out.beta = b % 3;
    return out;
}

namespace {

struct PrefixWalkState {
    unsigned k = 0;     // bits consumed
    unsigned a = 0, b = 0; // even/odd exponent counts

    int diff() const { return static_cast<int>(a % 3) - static_cast<int>(b % 3); }
    std::int64_t sign() const { return (k & 1) ? -1 : 1; } // (-1)^k
};

// One decomposition term for Delta_3^odd, closed form where the case ranges
// allow it, digit-DP fallback otherwise.
std::int64_t odd_term(const PrefixWalkState& st, std::uint64_t prefix, unsigned m, bool* closed) {
    *closed = true;
    try {
        switch (st.diff()) {
            case 0:
                if (m < 2) break;
                return st.sign() * pow3(m / 2 - 1);
            case 1:
                return -st.sign() * thm2_power_plus_row(true, m);
            case -1:
                return -st.sign() * thm2_power_plus_row(false, m);
            case 2:
                return st.sign() * thm2_quarter_row(true, m);
            case -2:
                return st.sign() * thm2_quarter_row(false, m);
        }
    } catch (const ClosedFormRangeError&) {
    }
    *closed = false;
    return delta_interval(3, prefix, prefix + (std::uint64_t{1} << m), Oddness::OddOnly);
}

std::int64_t all_term(const PrefixWalkState& st, std::uint64_t prefix, unsigned m, bool* closed) {
    *closed = true;
    try {
        switch (st.diff()) {
            case 0:
                if (m < 1) break;
                return st.sign() * (even(m) ? 2 * pow3(m / 2 - 1) : pow3((m - 1) / 2));
            case 1:
                return -st.sign() * thm3_power_plus_row(true, m);
            case -1:
                return -st.sign() * thm3_power_plus_row(false, m);
            case 2:
                return st.sign() * thm3_quarter_row(true, m);
            case -2:
                return st.sign() * thm3_quarter_row(false, m);
        }
    } catch (const ClosedFormRangeError&) {
    }
    *closed = false;
    return delta_interval(3, prefix, prefix + (std::uint64_t{1} << m), Oddness::Any);
}

template <typename TermFn>
std::int64_t prefix_walk(std::uint64_t n, std::vector<DecompositionTerm>* terms, TermFn term_fn) {
    if (n > kMaxDigitDpBound) throw std::invalid_argument("prefix walk: n exceeds 2^62 cap");
    std::int64_t total = 0;
    std::uint64_t prefix = 0;
    PrefixWalkState st;
    for (int p = 62; p >= 0; --p) {
        if (!((n >> p) & 1)) continue;
        const unsigned m = static_cast<unsigned>(p);
        bool closed = false;
        const std::int64_t v = term_fn(st, prefix, m, &closed);
        total += v;
        if (terms) terms->push_back({prefix, m, v, closed});
        prefix |= std::uint64_t{1} << p;
        st.k += 1;
        (even(m) ? st.a : st.b) += 1;
    }
    return total;
}

} // namespace

std::int64_t delta3_odd_prefix(std::uint64_t n, std::vector<DecompositionTerm>* terms) {
    return prefix_walk(n, terms, odd_term);
}

std::int64_t delta3_odd_prefix(std::uint64_t n) {
    return delta3_odd_prefix(n, nullptr);
}

std::int64_t delta3_prefix(std::uint64_t n, std::vector<DecompositionTerm>* terms) {
    return prefix_walk(n, terms, all_term);
}

std::int64_t delta3_prefix(std::uint64_t n) {
    return delta3_prefix(n, nullptr);
}

double thm4_exponent(std::uint64_t n) {
    if (n < 2) throw std::domain_error("thm4_exponent: requires n >= 2");
    const std::int64_t d = delta3_odd_prefix(n);
    if (d <= 0)
        throw std::domain_error("thm4_exponent: delta3_odd([0,n)) = " + std::to_string(d) +
                                " is not positive");
    return std::log(static_cast<double>(d)) / std::log(static_cast<double>(n));
}

} // namespace oddrace
