#pragma once

#include <cstdint>

#include "oddrace/parity.hpp"

namespace oddrace {

enum class Oddness : std::uint8_t { Any, OddOnly, EvenOnly };
enum class ParityFilter : std::uint8_t { Any, Evil, Odious };

/// Counting query: integers x with 0 <= x < bound, x = residue (mod modulus),
/// optionally restricted to odd or even x. 0 matches residue 0, is even, Evil.
struct DigitDpQuery {
    std::uint64_t bound = 0;
    std::uint64_t modulus = 1;
    std::uint64_t residue = 0;
    Oddness oddness = Oddness::Any;
};

inline constexpr std::uint64_t kMaxDigitDpBound = std::uint64_t{1} << 62;
inline constexpr std::uint64_t kMaxDigitDpModulus = std::uint64_t{1} << 20;

/// Exact matching counts split by parity class, via a most-significant-first
/// digit DP over the binary expansion. O(modulus * log bound).
CountPair count_pair(const DigitDpQuery& query);

/// Scalar count with a parity filter applied (Any sums both classes).
std::uint64_t count(const DigitDpQuery& query, ParityFilter parity = ParityFilter::Any);

/// Delta_a^odd(n): evil minus odious among odd multiples of a below n.
std::int64_t delta_a_odd(std::uint64_t a, std::uint64_t n);

/// Evil-minus-odious delta over [lo, hi) for x = residue (mod a) under an
/// oddness filter. Rejects lo > hi.
std::int64_t delta_interval(std::uint64_t a, std::uint64_t lo, std::uint64_t hi,
                            Oddness oddness, std::uint64_t residue = 0);

} // namespace oddrace
