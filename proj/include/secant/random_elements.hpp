#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "secant/ambient_class.hpp"
#include "secant/chern_series.hpp"
#include "secant/theta_poly.hpp"
#include "secant/upstream_class.hpp"

namespace secant {

/// Seeded generator of ring elements with small rational coefficients
/// (numerators in [-5, 5], denominators in [1, 4]) for property checks.
class RandomElements {
public:
    explicit RandomElements(std::uint64_t seed) : rng_(seed) {}

    Rational rational()
    {
        std::uniform_int_distribution<int> num(-5, 5);
        std::uniform_int_distribution<int> den(1, 4);
        return Rational(BigInt(num(rng_)), BigInt(den(rng_)));
    }

    ThetaPoly theta_poly() { return {rational(), rational(), rational()}; }

    UpstreamClass upstream() { return {theta_poly(), theta_poly(), theta_poly()}; }

    /// Dense random class; each entry is zero with probability 1/3.
    AmbientClass ambient(int d)
    {
        std::uniform_int_distribution<int> coin(0, 2);
        AmbientClass x(d);
        for (int a = 0; a < AmbientClass::theta_rows; ++a)
            for (int b = 0; b < x.h_rows(); ++b)
                if (coin(rng_) != 0)
                    x += AmbientClass::monomial(d, a, b, rational());
        return x;
    }

    /// Series with constant term 1 (unit = true) or 0.
    ChernSeries<AmbientClass> ambient_series(int d, int order, bool unit)
    {
        std::vector<AmbientClass> c{unit ? AmbientClass::one(d) : AmbientClass(d)};
        for (int k = 1; k <= order; ++k)
            c.push_back(ambient(d));
        return ChernSeries<AmbientClass>(std::move(c));
    }

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

private:
    std::mt19937_64 rng_;
};

} // namespace secant
