#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "oddrace/digit_dp.hpp"
#include "oracle.hpp"

using namespace oddrace;

namespace {

oracle::Odd to_oracle(Oddness o) {
    switch (o) {
        case Oddness::OddOnly: return oracle::Odd::OddOnly;
        case Oddness::EvenOnly: return oracle::Odd::EvenOnly;
        default: return oracle::Odd::Any;
    }
}

} // namespace

TEST_CASE("worked 105 example") {
    CHECK(count({105, 3, 0, Oddness::OddOnly}) == 17);
    CHECK(count({105, 3, 0, Oddness::OddOnly}, ParityFilter::Odious) == 5);
    CHECK(count({105, 3, 0, Oddness::OddOnly}, ParityFilter::Evil) == 12);
    CHECK(delta_a_odd(3, 105) == 7);
}

TEST_CASE("empty and degenerate bounds") {
    CHECK(count({0, 7, 3, Oddness::Any}) == 0);
    CHECK(count_pair({0, 1, 0, Oddness::Any}) == CountPair{0, 0});
    CHECK(delta_interval(3, 40, 40, Oddness::Any) == 0);
}

TEST_CASE("zero counts as an even evil multiple of everything") {
    CHECK(count({1, 7, 0, Oddness::Any}) == 1);
    CHECK(count_pair({1, 7, 0, Oddness::Any}).evil == 1);
    CHECK(count({1, 7, 0, Oddness::OddOnly}) == 0);
    CHECK(count({1, 7, 0, Oddness::EvenOnly}) == 1);
}

TEST_CASE("invalid queries are rejected") {
    CHECK_THROWS_AS(count_pair({10, 0, 0, Oddness::Any}), std::invalid_argument);
    CHECK_THROWS_AS(count_pair({10, 3, 3, Oddness::Any}), std::invalid_argument);
    CHECK_THROWS_AS(count_pair({std::uint64_t{1} << 63, 3, 0, Oddness::Any}),
                    std::invalid_argument);
    CHECK_THROWS_AS(delta_interval(3, 5, 4, Oddness::Any), std::invalid_argument);
}

TEST_CASE("delta of odd integers below powers of two vanishes") {
    for (unsigned k = 2; k <= 16; ++k) {
        CHECK(delta_a_odd(1, std::uint64_t{1} << k) ==
              oracle::count_range(0, std::uint64_t{1} << k, 1, 0, oracle::Odd::OddOnly).delta());
        CHECK(delta_a_odd(1, std::uint64_t{1} << k) == 0);
    }
}

TEST_CASE("oracle equivalence over sampled bounds, moduli 1..15 and 105") {
    std::mt19937_64 rng(42);
    std::set<std::uint64_t> bounds;
    for (std::uint64_t b = 0; b <= 257; ++b) bounds.insert(b);
    for (unsigned k = 8; k <= 16; ++k) {
        bounds.insert((std::uint64_t{1} << k) - 1);
        bounds.insert(std::uint64_t{1} << k);
        bounds.insert((std::uint64_t{1} << k) + 1);
    }
    for (int i = 0; i < 160; ++i) bounds.insert(rng() % (1u << 16));

    std::vector<std::uint64_t> moduli{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 105};
    for (const std::uint64_t a : moduli) {
        std::set<std::uint64_t> residues{0, 1 % a, a - 1, rng() % a};
        for (const std::uint64_t r : residues) {
            for (const Oddness odd : {Oddness::Any, Oddness::OddOnly, Oddness::EvenOnly}) {
                for (const std::uint64_t b : bounds) {
                    const CountPair got = count_pair({b, a, r, odd});
                    const oracle::Counts want = oracle::count_range(0, b, a, r, to_oracle(odd));
                    REQUIRE(got.evil == want.evil);
                    REQUIRE(got.odious == want.odious);
                }
            }
        }
    }
}

TEST_CASE("parity filters partition every query") {
    std::mt19937_64 rng(1234);
    for (int i = 0; i < 300; ++i) {
        const DigitDpQuery q{rng() % (1u << 18), 1 + rng() % 50, 0,
                             static_cast<Oddness>(rng() % 3)};
        DigitDpQuery qq = q;
        qq.residue = rng() % q.modulus;
        CHECK(count(qq, ParityFilter::Evil) + count(qq, ParityFilter::Odious) ==
              count(qq, ParityFilter::Any));
    }
}

TEST_CASE("even-halving and odd-complement interval identities") {
    auto delta3_all = [](std::uint64_t lo, std::uint64_t hi) {
        return delta_interval(3, lo, hi, Oddness::Any);
    };

    // every prefix bound: the interval forms follow by differencing
    for (std::uint64_t b = 0; b <= (1u << 14); ++b) {
        REQUIRE(delta_interval(3, 0, 2 * b, Oddness::EvenOnly) == delta3_all(0, b));
        REQUIRE(delta_interval(3, 0, 2 * b, Oddness::OddOnly) ==
                delta3_all(0, 2 * b) - delta3_all(0, b));
    }

    std::mt19937_64 rng(99);
    for (int i = 0; i < 600; ++i) {
        std::uint64_t a = rng() % (1u << 14), b = rng() % (1u << 14);
        if (a > b) std::swap(a, b);
        CHECK(delta_interval(3, 2 * a, 2 * b, Oddness::EvenOnly) == delta3_all(a, b));
        CHECK(delta_interval(3, 2 * a, 2 * b, Oddness::OddOnly) ==
              delta3_all(2 * a, 2 * b) - delta3_all(a, b));
    }
}

TEST_CASE("interval deltas with explicit residues") {
    // spot values from the canonical interval [2^5, 2^5 + 2^3)
    CHECK(delta_interval(3, 32, 40, Oddness::OddOnly) == 2);
    CHECK(delta_interval(3, 32, 40, Oddness::Any) == 3);

    std::mt19937_64 rng(5);
    for (int i = 0; i < 200; ++i) {
        std::uint64_t lo = rng() % 5000, hi = rng() % 5000;
        if (lo > hi) std::swap(lo, hi);
        const std::uint64_t a = 1 + rng() % 12;
        const std::uint64_t r = rng() % a;
        const auto got = delta_interval(a, lo, hi, Oddness::Any, r);
        CHECK(got == oracle::count_range(lo, hi, a, r).delta());
    }
}
