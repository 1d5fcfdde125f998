#pragma once

#include <bit>
#include <cstdint>

namespace oddrace {

/// Parity of the binary digit sum: Evil = even number of ones, Odious = odd.
enum class ParityClass : std::uint8_t { Evil = 0, Odious = 1 };

inline ParityClass classify(std::uint64_t n) {
    return (std::popcount(n) & 1) ? ParityClass::Odious : ParityClass::Evil;
}

inline ParityClass flip(ParityClass c) {
    return c == ParityClass::Evil ? ParityClass::Odious : ParityClass::Evil;
}

/// A pair of counts split by ParityClass. All signed differences in this
/// project are evil - odious.
struct CountPair {
    std::uint64_t evil = 0;
    std::uint64_t odious = 0;

    std::uint64_t total() const { return evil + odious; }
    std::int64_t delta() const {
        return static_cast<std::int64_t>(evil) - static_cast<std::int64_t>(odious);
    }
    CountPair& operator+=(const CountPair& o) {
        evil += o.evil;
        odious += o.odious;
        return *this;
    }
    void add(ParityClass c, std::uint64_t k = 1) {
        (c == ParityClass::Evil ? evil : odious) += k;
    }
    friend bool operator==(const CountPair&, const CountPair&) = default;
};

/// Counts of integers in [0, n) by parity class. O(log n).
CountPair nu_counts(std::uint64_t n);

/// Counts of even integers in [0, n) by parity class.
CountPair lambda_counts(std::uint64_t n);

/// How many 1-bits sit at even and at odd bit positions (bit 0 = LSB).
struct PositionParityCounts {
    unsigned i_even = 0;
    unsigned i_odd = 0;
    friend bool operator==(const PositionParityCounts&, const PositionParityCounts&) = default;
};

PositionParityCounts position_parity(std::uint64_t n);

/// Divisibility by 3 decided from bit positions alone:
/// 3 | n  <=>  i_even(n) == i_odd(n) (mod 3).
bool divisible_by_3(std::uint64_t n);

} // namespace oddrace
