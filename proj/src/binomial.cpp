#include "oddrace/binomial.hpp"

#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace oddrace {

namespace {

using Rational = boost::multiprecision::cpp_rational;

ExactInt pow_int(ExactInt base, unsigned exp) {
    ExactInt r = 1;
    while (exp--) r *= base;
    return r;
}

// Closed forms carry divisions by 2 and 3; evaluate them exactly and refuse
// to round.
ExactInt as_integer(const Rational& r) {
    if (boost::multiprecision::denominator(r) != 1)
        throw std::logic_error("closed form did not evaluate to an integer");
    return boost::multiprecision::numerator(r);
}

} // namespace

ExactInt binomial(std::int64_t n, std::int64_t r) {
    if (r < 0 || r > n || n < 0) return 0;
    if (r > n - r) r = n - r;
    ExactInt result = 1;
    for (std::int64_t i = 1; i <= r; ++i) {
        result *= (n - r + i);
        result /= i; // always exact: result is C(n-r+i, i)
    }
    return result;
}

std::pair<ExactInt, ExactInt> lemma3_lhs_rhs(unsigned m) {
    if (m < 1) throw std::invalid_argument("lemma3: m >= 1");
    ExactInt lhs = 0;
    for (unsigned k = 0; 3 * k <= m; ++k) lhs += binomial(2 * m, m + 3 * k);
    const Rational rhs = Rational(pow_int(2, 2 * m - 1) + 1, 3) + Rational(binomial(2 * m, m), 2);
    return {lhs, as_integer(rhs)};
}

std::pair<ExactInt, ExactInt> lemma4_lhs_rhs(unsigned m) {
    if (m < 1) throw std::invalid_argument("lemma4: m >= 1");
    ExactInt lhs = 0;
    for (unsigned t = 0; 6 * t <= m; ++t) lhs += binomial(2 * m, m + 6 * t);
    const Rational rhs =
        (Rational(pow_int(2, 2 * m - 1) + 1, 3) + pow_int(3, m - 1) + binomial(2 * m, m)) / 2;
    return {lhs, as_integer(rhs)};
}

std::pair<ExactInt, ExactInt> lemma5_lhs_rhs(unsigned m) {
    if (m < 1) throw std::invalid_argument("lemma5: m >= 1");
    ExactInt lhs = 0;
    for (unsigned k = 0; 3 * k <= m; ++k) {
        const ExactInt term = binomial(2 * m, m + 3 * k);
        lhs += (k & 1) ? -term : term;
    }
    const Rational rhs = pow_int(3, m - 1) + Rational(binomial(2 * m, m), 2);
    return {lhs, as_integer(rhs)};
}

std::pair<ExactInt, ExactInt> eq30_lhs_rhs(unsigned m) {
    if (m < 1) throw std::invalid_argument("eq30: m >= 1");
    const unsigned s = m % 6;
    ExactInt lhs = 0;
    for (unsigned k = 0; 6 * k + s <= 2 * m; ++k) lhs += binomial(2 * m, 6 * k + s);
    const Rational rhs = Rational(pow_int(2, 2 * m - 1) + pow_int(3, m) + 1, 3);
    return {lhs, as_integer(rhs)};
}

std::pair<ExactInt, ExactInt> convolution_identity(unsigned m, unsigned k, ConvolutionVariant variant) {
    if (m < 1) throw std::invalid_argument("convolution: m >= 1");
    const auto im = static_cast<std::int64_t>(m);
    const auto offset = static_cast<std::int64_t>(3 * k);

    ExactInt lhs = 0, rhs = 0;
    switch (variant) {
        case ConvolutionVariant::Symmetric:
            for (std::int64_t j = 0; j <= im; ++j) lhs += binomial(im, j) * binomial(im, j + offset);
            rhs = binomial(2 * im, im + offset);
            break;
        case ConvolutionVariant::SecondLowered:
            for (std::int64_t j = 0; j <= im; ++j) lhs += binomial(im, j) * binomial(im - 1, j + offset);
            rhs = binomial(2 * im - 1, im + offset);
            break;
        case ConvolutionVariant::FirstLowered:
            for (std::int64_t j = 0; j <= im; ++j) lhs += binomial(im - 1, j) * binomial(im, j + offset);
            rhs = binomial(2 * im - 1, im + offset - 1);
            break;
        case ConvolutionVariant::ShiftUp:
            for (std::int64_t j = 1; j <= im + 1; ++j) lhs += binomial(im, j - 1) * binomial(im, j + offset);
            rhs = binomial(2 * im, im + offset + 1);
            break;
        case ConvolutionVariant::ShiftDown:
            for (std::int64_t j = 0; j <= im + 1; ++j) lhs += binomial(im, j) * binomial(im, j + offset - 1);
            rhs = binomial(2 * im, im + offset - 1);
            break;
    }
    return {lhs, rhs};
}

std::pair<ExactInt, ExactInt> eq35_identity(unsigned l, unsigned k) {
    if (l < 1) throw std::invalid_argument("eq35: l >= 1");
    const auto il = static_cast<std::int64_t>(l);
    const auto off = static_cast<std::int64_t>(3 * k);
    const ExactInt lhs = binomial(2 * il, il + off - 1) + binomial(2 * il, il + off + 1);
    const ExactInt rhs = binomial(2 * il + 2, il + off + 1) - 2 * binomial(2 * il, il + off);
    return {lhs, rhs};
}

} // namespace oddrace
