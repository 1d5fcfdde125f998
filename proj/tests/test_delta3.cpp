#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "oddrace/delta3.hpp"
#include "oddrace/digit_dp.hpp"
#include "oracle.hpp"

using namespace oddrace;

TEST_CASE("closed forms on the pinned intervals") {
    CHECK(thm2_delta3_odd(DyadicInterval::from_zero(6)) == 9);
    CHECK(thm2_delta3_odd(DyadicInterval::power_plus(5, 3)) == 2);
    CHECK(thm2_delta3_odd(DyadicInterval::power_plus(6, 2)) == 0);

    CHECK(thm3_delta3(DyadicInterval::from_zero(4)) == 6);
    CHECK(thm3_delta3(DyadicInterval::power_plus(5, 3)) == 3);
    CHECK(thm3_delta3(DyadicInterval::power_plus(4, 3)) == 0);
}

TEST_CASE("out-of-range closed forms throw with the violated bound named") {
    CHECK_THROWS_AS(thm2_delta3_odd(DyadicInterval::from_zero(1)), ClosedFormRangeError);
    CHECK_THROWS_AS(thm2_delta3_odd(DyadicInterval::power_plus(4, 1)), ClosedFormRangeError);
    CHECK_THROWS_AS(thm3_delta3(DyadicInterval::from_zero(0)), ClosedFormRangeError);
    CHECK_THROWS_WITH_AS(thm2_delta3_odd(DyadicInterval::power_plus(6, 1)),
                         doctest::Contains("3 <= m <= n-1"), ClosedFormRangeError);
    CHECK_THROWS_WITH_AS(thm2_delta3_odd(DyadicInterval::power_plus(2, 0)),
                         doctest::Contains("2 <= m <= n-2"), ClosedFormRangeError);
    CHECK_THROWS_AS(DyadicInterval::power_plus(4, 4), std::invalid_argument);
    CHECK_THROWS_AS(DyadicInterval::power_plus_quarter(4, 2), std::invalid_argument);
}

TEST_CASE("every theorem case row equals the oracle for n <= 14") {
    for (unsigned n = 2; n <= 14; ++n) {
        CHECK(thm2_delta3_odd(DyadicInterval::from_zero(n)) ==
              delta_a_odd(3, std::uint64_t{1} << n));
    }
    for (unsigned n = 1; n <= 14; ++n) {
        CHECK(thm3_delta3(DyadicInterval::from_zero(n)) ==
              delta_interval(3, 0, std::uint64_t{1} << n, Oddness::Any));
        for (unsigned m = 0; m + 1 <= n; ++m) {
            const auto iv = DyadicInterval::power_plus(n, m);
            for (const bool odd : {true, false}) {
                try {
                    const std::int64_t closed = odd ? thm2_delta3_odd(iv) : thm3_delta3(iv);
                    CHECK(closed == delta_interval(3, iv.lo(), iv.hi(),
                                                   odd ? Oddness::OddOnly : Oddness::Any));
                } catch (const ClosedFormRangeError&) {
                }
            }
        }
        for (unsigned m = 0; n >= 3 && m + 3 <= n; ++m) {
            const auto iv = DyadicInterval::power_plus_quarter(n, m);
            for (const bool odd : {true, false}) {
                try {
                    const std::int64_t closed = odd ? thm2_delta3_odd(iv) : thm3_delta3(iv);
                    CHECK(closed == delta_interval(3, iv.lo(), iv.hi(),
                                                   odd ? Oddness::OddOnly : Oddness::Any));
                } catch (const ClosedFormRangeError&) {
                }
            }
        }
    }
}

TEST_CASE("residue-class forms match enumeration") {
    CHECK(lemma6_delta_3h(1, 4) == -3);
    CHECK(lemma6_delta_3h(2, 3) == 0);
    CHECK(lemma6_delta_3h(1, 0) == 0);
    CHECK_THROWS_AS(lemma6_delta_3h(3, 4), std::invalid_argument);

    for (unsigned n = 0; n <= 16; ++n) {
        for (int h = 1; h <= 2; ++h) {
            const auto want =
                oracle::count_range(0, std::uint64_t{1} << n, 3, static_cast<std::uint64_t>(h));
            CHECK(lemma6_delta_3h(h, n) == want.delta());
        }
    }
}

TEST_CASE("counting functions at powers of two") {
    CHECK(nu3_closed(4) == CountPair{6, 0});
    CHECK(mu3_closed(4) == CountPair{3, 0});
    CHECK(nu3_closed(1) == CountPair{1, 0});
    CHECK_THROWS_AS(nu3_closed(0), std::invalid_argument);
    CHECK_THROWS_AS(mu3_closed(1), std::invalid_argument);

    for (unsigned n = 1; n <= 16; ++n) {
        const auto want = oracle::count_range(0, std::uint64_t{1} << n, 3, 0);
        CHECK(nu3_closed(n).evil == want.evil);
        CHECK(nu3_closed(n).odious == want.odious);
        if (n < 2) continue;
        const auto want_odd =
            oracle::count_range(0, std::uint64_t{1} << n, 3, 0, oracle::Odd::OddOnly);
        CHECK(mu3_closed(n).evil == want_odd.evil);
        CHECK(mu3_closed(n).odious == want_odd.odious);
    }
}

TEST_CASE("prefix exponent bookkeeping") {
    const PrefixDecomposition d = decompose_prefix(96); // 2^6 + 2^5
    CHECK(d.exponents == std::vector<unsigned>{6, 5});
    CHECK(d.alpha == 1);
    CHECK(d.beta == 1);

    const PrefixDecomposition e = decompose_prefix(0);
    CHECK(e.exponents.empty());
    CHECK(e.alpha == 0);
    CHECK(e.beta == 0);

    // alpha - beta tracks the prefix residue mod 3 (2^even = 1, 2^odd = -1)
    std::mt19937_64 rng(31);
    for (int i = 0; i < 500; ++i) {
        const std::uint64_t p = rng() % (std::uint64_t{1} << 40);
        const PrefixDecomposition pd = decompose_prefix(p);
        CHECK((3 + static_cast<int>(pd.alpha) - static_cast<int>(pd.beta)) % 3 ==
              static_cast<int>(p % 3));
    }
}

TEST_CASE("prefix decomposition of 105 reproduces the worked example") {
    std::vector<DecompositionTerm> terms;
    CHECK(delta3_odd_prefix(105, &terms) == 7);
    REQUIRE(terms.size() == 4);
    CHECK(terms[0].value == 9);
    CHECK(terms[1].value == -3);
    CHECK(terms[2].value == 1);
    CHECK(terms[3].value == 0); // [104, 105) holds no odd number
    CHECK(terms[0].lo == 0);
    CHECK(terms[1].lo == 64);
    CHECK(terms[2].lo == 96);
    CHECK(terms[3].lo == 104);

    CHECK(delta3_odd_prefix(104) == 7);
    CHECK(delta3_odd_prefix(64) == 9);
    CHECK(delta3_odd_prefix(0) == 0);
}

TEST_CASE("prefix walks agree with the oracle everywhere below 2^14") {
    for (std::uint64_t n = 0; n <= (1u << 14); ++n) {
        REQUIRE(delta3_odd_prefix(n) == delta_a_odd(3, n));
        REQUIRE(delta3_prefix(n) == delta_interval(3, 0, n, Oddness::Any));
    }
}

TEST_CASE("prefix walks agree with the oracle on random 40-bit bounds") {
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 120; ++i) {
        const std::uint64_t n = rng() % (std::uint64_t{1} << 40);
        REQUIRE(delta3_odd_prefix(n) == delta_a_odd(3, n));
        REQUIRE(delta3_prefix(n) == delta_interval(3, 0, n, Oddness::Any));
    }
}

TEST_CASE("odd and even parts recombine") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 300; ++i) {
        const std::uint64_t n = rng() % (1u << 16);
        CHECK(delta3_prefix(n) ==
              delta3_odd_prefix(n) + delta_interval(3, 0, n, Oddness::EvenOnly));
    }
}

TEST_CASE("dyadic identity holds to 2^40") {
    for (unsigned n = 2; n <= 40; ++n)
        CHECK(delta3_odd_prefix(std::uint64_t{1} << n) == pow3(n / 2 - 1));
}

TEST_CASE("growth exponent") {
    CHECK(thm4_exponent(4) == doctest::Approx(0.0));
    CHECK(thm4_exponent(105) == doctest::Approx(std::log(7.0) / std::log(105.0)));
    CHECK(thm4_exponent(std::uint64_t{1} << 20) ==
          doctest::Approx(std::log(19683.0) / std::log(1048576.0)));
    CHECK_THROWS_AS(thm4_exponent(1), std::domain_error);
    CHECK_THROWS_AS(thm4_exponent(2), std::domain_error); // delta is 0 below 2
}
