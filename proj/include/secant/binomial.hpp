#pragma once

#include <cstdint>

#include "secant/rational.hpp"

namespace secant {

/// Generalized binomial coefficient C(n, k) for any integers n, k:
/// zero for k < 0, the falling-factorial quotient n(n-1)...(n-k+1)/k!
/// otherwise. For n < 0 this agrees with upper negation,
/// C(n, k) = (-1)^k C(k - n - 1, k).
inline BigInt binomial(std::int64_t n, std::int64_t k)
{
    if (k < 0)
        return 0;
    if (n >= 0 && k > n)
        return 0;
    if (n >= 0 && k > n - k)
        k = n - k;
    BigInt result = 1;
    for (std::int64_t i = 0; i < k; ++i) {
        result *= BigInt(n - i);
        result /= BigInt(i + 1);
    }
    return result;
}

inline Rational binomial_q(std::int64_t n, std::int64_t k) { return Rational(binomial(n, k)); }

/// Checks upper negation C(-r, m) = (-1)^m C(r + m - 1, m) and Vandermonde's
/// identity sum_k C(m, k) C(s, r - k) = C(m + s, r) for every parameter tuple
/// with entries in [0, bound] (negated top for upper negation), plus Pascal's
/// rule over [-bound, bound]^2.
inline bool verify_binomial_identities(int bound)
{
    if (bound < 1)
        return false;
    for (int r = 0; r <= bound; ++r)
        for (int m = 0; m <= bound; ++m) {
            const BigInt sign = (m % 2 == 0) ? 1 : -1;
            if (binomial(-r, m) != sign * binomial(r + m - 1, m))
                return false;
        }
    for (int m = 0; m <= bound; ++m)
        for (int s = 0; s <= bound; ++s)
            for (int r = 0; r <= bound; ++r) {
                BigInt sum = 0;
                for (int k = 0; k <= r; ++k)
                    sum += binomial(m, k) * binomial(s, r - k);
                if (sum != binomial(m + s, r))
                    return false;
            }
    for (int n = -bound; n <= bound; ++n)
        for (int k = 1; k <= bound; ++k)
            if (binomial(n, k) != binomial(n - 1, k - 1) + binomial(n - 1, k))
                return false;
    return true;
}

} // namespace secant
