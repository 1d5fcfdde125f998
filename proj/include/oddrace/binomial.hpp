#pragma once

#include <cstdint>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace oddrace {

using ExactInt = boost::multiprecision::cpp_int;

/// C(n, r) with the convention C(n, r) = 0 for r < 0 or r > n.
ExactInt binomial(std::int64_t n, std::int64_t r);

/// Each pair is (sum side, closed-form side); equality is the identity under
/// test. Closed forms are evaluated over exact rationals and asserted
/// integral (a failed assertion throws std::logic_error).

/// sum_{k=0..floor(m/3)} C(2m, m+3k)  vs  (2^(2m-1)+1)/3 + C(2m,m)/2
std::pair<ExactInt, ExactInt> lemma3_lhs_rhs(unsigned m);

/// sum_{t=0..floor(m/6)} C(2m, m+6t)  vs  ((2^(2m-1)+1)/3 + 3^(m-1) + C(2m,m)) / 2
std::pair<ExactInt, ExactInt> lemma4_lhs_rhs(unsigned m);

/// sum_{k>=0} (-1)^k C(2m, m+3k)  vs  3^(m-1) + C(2m,m)/2
std::pair<ExactInt, ExactInt> lemma5_lhs_rhs(unsigned m);

/// sum_{k: 6k+s <= 2m} C(2m, 6k+s) with s = m mod 6  vs  (2^(2m-1)+3^m+1)/3
std::pair<ExactInt, ExactInt> eq30_lhs_rhs(unsigned m);

/// Vandermonde-type convolutions. Symmetric is the base identity
/// sum_j C(m,j) C(m,j+3k) = C(2m, m+3k); the other variants are the shifted
/// forms that appear in the interval-delta derivations.
enum class ConvolutionVariant : std::uint8_t {
    Symmetric,     // sum C(m,j)   C(m,  j+3k)   = C(2m,   m+3k)
    SecondLowered, // sum C(m,j)   C(m-1,j+3k)   = C(2m-1, m+3k)
    FirstLowered,  // sum C(m-1,j) C(m,  j+3k)   = C(2m-1, m+3k-1)
    ShiftUp,       // sum C(m,j-1) C(m,  j+3k)   = C(2m,   m+3k+1)
    ShiftDown,     // sum C(m,j)   C(m,  j+3k-1) = C(2m,   m+3k-1)
};

std::pair<ExactInt, ExactInt> convolution_identity(unsigned m, unsigned k,
                                                   ConvolutionVariant variant = ConvolutionVariant::Symmetric);

/// C(2l, l+3k-1) + C(2l, l+3k+1)  vs  C(2l+2, l+3k+1) - 2 C(2l, l+3k).
/// Pascal's rule applied twice, so it holds for every k >= 0 even though its
/// use site only needs k >= 1.
std::pair<ExactInt, ExactInt> eq35_identity(unsigned l, unsigned k);

} // namespace oddrace
