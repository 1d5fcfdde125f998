#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "oddrace/digit_dp.hpp"
#include "oddrace/parity.hpp"
#include "oddrace/prime_scan.hpp"

// The odd-composite route to the prime-race excess (sigma form) and its
// inclusion-exclusion counterpart over odd square-free moduli (IE form).
//
// Expanding sum_p Delta_p^odd(n) - sum_{p<q} Delta_pq^odd(n) + ... collects
// every odd x in [3, n) exactly once, primes included, so the exact bridge
// between the two routes is
//
//   sigma^e(n) - sigma^o(n) = IE(n) + excess(n) - 1 + [n odd prime] f(n)
//
// with f = +1 for evil, -1 for odious, excess = pi_odious - pi_evil over
// primes <= n. Both sides are computed independently and compared.

namespace oddrace {

namespace {

constexpr std::uint64_t kIeDefaultCap = 10000;

std::vector<std::uint8_t> primality_upto(std::uint64_t n) {
    std::vector<std::uint8_t> is_prime(n + 1, 1);
    is_prime[0] = 0;
    if (n >= 1) is_prime[1] = 0;
    for (std::uint64_t i = 2; i * i <= n; ++i) {
        if (!is_prime[i]) continue;
        for (std::uint64_t j = i * i; j <= n; j += i) is_prime[j] = 0;
    }
    return is_prime;
}

std::int64_t sign_of(std::uint64_t x) {
    return classify(x) == ParityClass::Evil ? 1 : -1;
}

// Moebius function by linear sieve.
std::vector<std::int8_t> mobius_upto(std::uint64_t n) {
    std::vector<std::int8_t> mu(n + 1, 0);
    std::vector<std::uint32_t> primes;
    std::vector<std::uint8_t> composite(n + 1, 0);
    if (n >= 1) mu[1] = 1;
    for (std::uint64_t i = 2; i <= n; ++i) {
        if (!composite[i]) {
            primes.push_back(static_cast<std::uint32_t>(i));
            mu[i] = -1;
        }
        for (const std::uint32_t p : primes) {
            const std::uint64_t ip = i * p;
            if (ip > n) break;
            composite[ip] = 1;
            if (i % p == 0) {
                mu[ip] = 0;
                break;
            }
            mu[ip] = static_cast<std::int8_t>(-mu[i]);
        }
    }
    return mu;
}

// sum over odd square-free moduli m in [3, n) of (-1)^(omega(m)+1) *
// Delta_m^odd(n), every term through the digit-DP counter.
std::int64_t ie_sum_digit_dp(std::uint64_t n, const std::vector<std::uint8_t>& is_prime) {
    std::vector<std::uint32_t> odd_primes;
    for (std::uint64_t p = 3; p < n && p < is_prime.size(); p += 2)
        if (is_prime[p]) odd_primes.push_back(static_cast<std::uint32_t>(p));

    std::int64_t total = 0;
    // depth-first over subsets {p1 < p2 < ...} with product < n
    struct Frame {
        std::size_t next_idx;
        std::uint64_t product;
        unsigned size;
    };
    std::vector<Frame> stack;
    stack.push_back({0, 1, 0});
    while (!stack.empty()) {
        const Frame f = stack.back();
        stack.pop_back();
        for (std::size_t i = f.next_idx; i < odd_primes.size(); ++i) {
            const std::uint64_t prod = f.product * odd_primes[i];
            if (prod >= n) break;
            const std::int64_t term = delta_a_odd(prod, n);
            total += (f.size % 2 == 0) ? term : -term;
            stack.push_back({i + 1, prod, f.size + 1});
        }
    }
    return total;
}

struct RunningCounts {
    PrimeRaceState pi;   // primes <= n
    CountPair sigma;     // odd composites < n
    std::int64_t ie = 0; // IE(n), carried incrementally when weights exist
};

std::int64_t sigma_from_ie(const RunningCounts& rc, std::uint64_t n,
                           const std::vector<std::uint8_t>& is_prime) {
    std::int64_t v = rc.ie + rc.pi.excess() - 1;
    if (n < is_prime.size() && is_prime[n] && (n & 1)) v += sign_of(n);
    return v;
}

} // namespace

Theorem1Result theorem1_epsilon(std::uint64_t n, bool force_ie) {
    if (n < 3) throw std::invalid_argument("theorem1_epsilon: requires n >= 3");
    if (n > (std::uint64_t{1} << 26))
        throw std::invalid_argument("theorem1_epsilon: n exceeds 2^26 cap");

    const auto is_prime = primality_upto(n);

    Theorem1Result out;
    PrimeRaceState pi;
    CountPair sigma;
    for (std::uint64_t x = 2; x <= n; ++x) {
        if (is_prime[x]) {
            pi.add_unchecked(classify(x));
        } else if ((x & 1) && x < n && x > 1) {
            sigma.add(classify(x));
        }
    }
    out.prime_excess = pi.excess();
    out.sigma_delta = sigma.delta();
    out.epsilon = out.prime_excess - out.sigma_delta;

    if (n <= kIeDefaultCap || force_ie) {
        const std::int64_t ie = ie_sum_digit_dp(n, is_prime);
        std::int64_t sigma_ie = ie + pi.excess() - 1;
        if (is_prime[n] && (n & 1)) sigma_ie += sign_of(n);
        out.ie_computed = true;
        out.sigma_delta_ie = sigma_ie;
        out.epsilon_ie = out.prime_excess - sigma_ie;
    }
    return out;
}

Theorem1ScanResult theorem1_scan(std::uint64_t limit, bool with_ie) {
    if (limit < 3) throw std::invalid_argument("theorem1_scan: requires limit >= 3");
    if (limit > (std::uint64_t{1} << 26))
        throw std::invalid_argument("theorem1_scan: limit exceeds 2^26 cap");

    const auto is_prime = primality_upto(limit);

    // IE weight of odd x: sum over odd square-free divisors m >= 3 of
    // (-1)^(omega(m)+1) = -mu(m); accumulating f(x) * w(x) over odd x < n
    // reproduces the modulus expansion term by term.
    std::vector<std::int32_t> ie_weight;
    std::vector<std::uint64_t> anchors;
    if (with_ie) {
        const auto mu = mobius_upto(limit);
        ie_weight.assign(limit + 1, 0);
        for (std::uint64_t m = 3; m <= limit; m += 2) {
            if (mu[m] == 0) continue;
            for (std::uint64_t x = m; x <= limit; x += 2 * m) ie_weight[x] -= mu[m];
        }
        for (std::uint64_t a : {std::uint64_t{100}, std::uint64_t{487}, std::uint64_t{1000},
                                std::uint64_t{2048}, std::uint64_t{3163}, limit})
            if (a >= 3 && a <= limit) anchors.push_back(a);
        std::sort(anchors.begin(), anchors.end());
        anchors.erase(std::unique(anchors.begin(), anchors.end()), anchors.end());
    }

    Theorem1ScanResult out;
    out.ie_checked = with_ie;

    RunningCounts rc;
    rc.pi.pi_odious = 1; // x = 2, processed below from n = 3
    std::size_t anchor_idx = 0;

    for (std::uint64_t n = 3; n <= limit; ++n) {
        if (is_prime[n]) rc.pi.add_unchecked(classify(n));
        const std::uint64_t x = n - 1;
        if ((x & 1) && x > 1) {
            if (!is_prime[x]) rc.sigma.add(classify(x));
            if (with_ie && x >= 3) rc.ie += sign_of(x) * ie_weight[x];
        }

        const std::int64_t eps = rc.pi.excess() - rc.sigma.delta();
        if (std::llabs(eps) > out.max_abs_epsilon) {
            out.max_abs_epsilon = std::llabs(eps);
            out.argmax_n = n;
        }
        if (with_ie) {
            if (sigma_from_ie(rc, n, is_prime) != rc.sigma.delta()) ++out.ie_mismatches;
            if (anchor_idx < anchors.size() && anchors[anchor_idx] == n) {
                ++anchor_idx;
                ++out.ie_anchors_checked;
                if (ie_sum_digit_dp(n, is_prime) != rc.ie) ++out.ie_anchor_mismatches;
            }
        }
    }
    return out;
}

} // namespace oddrace
