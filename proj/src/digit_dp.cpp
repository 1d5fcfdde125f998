#include "oddrace/digit_dp.hpp"

#include <array>
#include <bit>
#include <stdexcept>
#include <vector>

namespace oddrace {

namespace {

void validate(const DigitDpQuery& q) {
    if (q.modulus == 0) throw std::invalid_argument("digit_dp: modulus must be positive");
    if (q.modulus > kMaxDigitDpModulus)
        throw std::invalid_argument("digit_dp: modulus exceeds 2^20 cap");
    if (q.residue >= q.modulus)
        throw std::invalid_argument("digit_dp: residue must be < modulus");
    if (q.bound > kMaxDigitDpBound)
        throw std::invalid_argument("digit_dp: bound exceeds 2^62 cap");
}

} // namespace

CountPair count_pair(const DigitDpQuery& q) {
    validate(q);
    if (q.bound == 0) return {};

    const std::uint64_t a = q.modulus;
    const int bits = std::bit_width(q.bound);

    // residue of 2^p mod a per position
    std::vector<std::uint64_t> weight(static_cast<std::size_t>(bits));
    weight[0] = 1 % a;
    for (int p = 1; p < bits; ++p) weight[p] = (weight[p - 1] * 2) % a;

    // free[r][par]: prefixes strictly below the bound's prefix, by weighted
    // residue and ones parity. One implicit tight path tracks the bound.
    std::vector<std::array<std::uint64_t, 2>> free_states(a, {0, 0});
    std::vector<std::array<std::uint64_t, 2>> next(a, {0, 0});
    std::uint64_t tight_res = 0;
    unsigned tight_par = 0;

    for (int p = bits - 1; p >= 0; --p) {
        const bool last = (p == 0);
        const bool allow0 = !last || q.oddness != Oddness::OddOnly;
        const bool allow1 = !last || q.oddness != Oddness::EvenOnly;
        const std::uint64_t w = weight[p];

        for (auto& cell : next) cell = {0, 0};
        for (std::uint64_t r = 0; r < a; ++r) {
            for (unsigned par = 0; par < 2; ++par) {
                const std::uint64_t c = free_states[r][par];
                if (!c) continue;
                if (allow0) next[r][par] += c;
                if (allow1) {
                    std::uint64_t r1 = r + w;
                    if (r1 >= a) r1 -= a;
                    next[r1][par ^ 1] += c;
                }
            }
        }
        if ((q.bound >> p) & 1) {
            if (allow0) next[tight_res][tight_par] += 1;
            tight_res += w;
            if (tight_res >= a) tight_res -= a;
            tight_par ^= 1;
        }
        free_states.swap(next);
    }

    // The surviving tight path equals the bound itself and is excluded.
    return {free_states[q.residue][0], free_states[q.residue][1]};
}

std::uint64_t count(const DigitDpQuery& q, ParityFilter parity) {
    const CountPair c = count_pair(q);
    switch (parity) {
        case ParityFilter::Evil: return c.evil;
        case ParityFilter::Odious: return c.odious;
        case ParityFilter::Any: break;
    }
    return c.total();
}

std::int64_t delta_a_odd(std::uint64_t a, std::uint64_t n) {
    return count_pair({n, a, 0, Oddness::OddOnly}).delta();
}

std::int64_t delta_interval(std::uint64_t a, std::uint64_t lo, std::uint64_t hi,
                            Oddness oddness, std::uint64_t residue) {
    if (lo > hi) throw std::invalid_argument("delta_interval: lo > hi");
    const CountPair at_hi = count_pair({hi, a, residue, oddness});
    const CountPair at_lo = count_pair({lo, a, residue, oddness});
    return at_hi.delta() - at_lo.delta();
}

} // namespace oddrace
