#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oddrace/binomial.hpp"

using namespace oddrace;

TEST_CASE("binomial convention") {
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(4, 0) == 1);
    CHECK(binomial(4, 5) == 0);
    CHECK(binomial(4, -1) == 0);
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(120, 60) == ExactInt("96614908840363322603893139521372656"));
}

TEST_CASE("lemma3 pinned and exhaustive") {
    auto [l1, r1] = lemma3_lhs_rhs(3);
    CHECK(l1 == 21);
    CHECK(r1 == 21);
    auto [l2, r2] = lemma3_lhs_rhs(1);
    CHECK(l2 == 2);
    CHECK(r2 == 2);
    for (unsigned m = 1; m <= 64; ++m) {
        const auto [lhs, rhs] = lemma3_lhs_rhs(m);
        REQUIRE(lhs == rhs);
    }
}

TEST_CASE("lemma4 pinned and exhaustive") {
    auto [l1, r1] = lemma4_lhs_rhs(1);
    CHECK(l1 == 2);
    CHECK(r1 == 2);
    auto [l2, r2] = lemma4_lhs_rhs(6);
    CHECK(l2 == 925);
    CHECK(r2 == 925);
    for (unsigned m = 1; m <= 64; ++m) {
        const auto [lhs, rhs] = lemma4_lhs_rhs(m);
        REQUIRE(lhs == rhs);
    }
}

TEST_CASE("lemma5 pinned and exhaustive") {
    auto [l1, r1] = lemma5_lhs_rhs(1);
    CHECK(l1 == 2);
    CHECK(r1 == 2);
    auto [l2, r2] = lemma5_lhs_rhs(3);
    CHECK(l2 == 19);
    CHECK(r2 == 19);
    for (unsigned m = 1; m <= 64; ++m) {
        const auto [lhs, rhs] = lemma5_lhs_rhs(m);
        REQUIRE(lhs == rhs);
    }
}

TEST_CASE("six-step column sums for every residue class") {
    // s = m mod 6 walks 1..5, 0 as m runs; all classes get exercised
    for (unsigned m = 1; m <= 64; ++m) {
        const auto [lhs, rhs] = eq30_lhs_rhs(m);
        REQUIRE(lhs == rhs);
    }
}

TEST_CASE("convolutions pinned") {
    auto [l1, r1] = convolution_identity(4, 1);
    CHECK(l1 == 8);
    CHECK(r1 == 8);
    auto [l2, r2] = convolution_identity(2, 0);
    CHECK(l2 == 6);
    CHECK(r2 == 6);
    auto [l3, r3] = convolution_identity(30, 5);
    CHECK(l3 == r3);
}

TEST_CASE("convolutions exhaustive over all variants") {
    for (unsigned m = 1; m <= 40; ++m) {
        for (unsigned k = 0; 3 * k <= m; ++k) {
            for (const auto v :
                 {ConvolutionVariant::Symmetric, ConvolutionVariant::SecondLowered,
                  ConvolutionVariant::FirstLowered, ConvolutionVariant::ShiftUp,
                  ConvolutionVariant::ShiftDown}) {
                const auto [lhs, rhs] = convolution_identity(m, k, v);
                REQUIRE(lhs == rhs);
            }
        }
    }
}

TEST_CASE("recombination identity") {
    auto [l1, r1] = eq35_identity(2, 1);
    CHECK(l1 == 1);
    CHECK(r1 == 1);
    auto [l2, r2] = eq35_identity(10, 2);
    CHECK(l2 == r2);

    for (unsigned l = 1; l <= 40; ++l)
        for (unsigned k = 1; k <= l / 3 + 1; ++k) {
            const auto [lhs, rhs] = eq35_identity(l, k);
            REQUIRE(lhs == rhs);
        }

    // two Pascal steps, so k = 0 holds as well even though the use site only
    // needs k >= 1: C(2,0)+C(2,2) = 2 = C(4,2) - 2 C(2,1)
    auto [l0, r0] = eq35_identity(1, 0);
    CHECK(l0 == 2);
    CHECK(r0 == 2);
    for (unsigned l = 1; l <= 40; ++l) {
        const auto [lhs, rhs] = eq35_identity(l, 0);
        REQUIRE(lhs == rhs);
    }
}
