#include "oddrace/parity.hpp"

namespace oddrace {

// Split [0, n) on set bits, top down. A block [prefix, prefix + 2^p) with
// p >= 1 contains 2^(p-1) integers of each class whatever the prefix parity;
// the p = 0 block is the prefix itself.
CountPair nu_counts(std::uint64_t n) {
    CountPair out;
    unsigned prefix_ones = 0;
    for (int p = 63; p >= 0; --p) {
        if (!((n >> p) & 1)) continue;
        if (p == 0) {
            out.add((prefix_ones & 1) ? ParityClass::Odious : ParityClass::Evil);
        } else {
            const std::uint64_t half = std::uint64_t{1} << (p - 1);
            out.evil += half;
            out.odious += half;
        }
        prefix_ones ^= 1;
    }
    return out;
}

// Even integers below n are {2t : t < ceil(n/2)} and popcount(2t) = popcount(t),
// so the even counters are the plain counters at the halved bound.
CountPair lambda_counts(std::uint64_t n) {
    return nu_counts((n + 1) / 2);
}

PositionParityCounts position_parity(std::uint64_t n) {
    constexpr std::uint64_t even_mask = 0x5555555555555555ull;
    PositionParityCounts out;
    out.i_even = static_cast<unsigned>(std::popcount(n & even_mask));
    out.i_odd = static_cast<unsigned>(std::popcount(n & ~even_mask));
    return out;
}

bool divisible_by_3(std::uint64_t n) {
    const auto pp = position_parity(n);
    // i_even - i_odd = i_even + 2*i_odd (mod 3), kept unsigned
    return (pp.i_even + 2u * pp.i_odd) % 3u == 0;
}

} // namespace oddrace
