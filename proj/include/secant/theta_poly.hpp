#pragma once

#include <array>
#include <ostream>
#include <string>

#include "secant/detail/format_terms.hpp"
#include "secant/error.hpp"
#include "secant/rational.hpp"

namespace secant {

/// Element c0 + c1*T + c2*T^2 of Q[T]/(T^3), T the theta divisor class on
/// the degree-3 Picard variety of a genus-2 curve (a surface, hence T^3 = 0).
struct ThetaPoly {
    Rational c0;
    Rational c1;
    Rational c2;

    static constexpr int top_degree = 2;

    static ThetaPoly one() { return {1, 0, 0}; }
    static ThetaPoly theta() { return {0, 1, 0}; }
    static ThetaPoly constant(Rational c) { return {std::move(c), 0, 0}; }

    [[nodiscard]] const Rational& operator[](int k) const
    {
        switch (k) {
        case 0: return c0;
        case 1: return c1;
        case 2: return c2;
        default: throw DomainError("theta power " + std::to_string(k) + " outside [0, 2]");
        }
    }

    /// Part of cohomological degree k (the T^k term alone).
    [[nodiscard]] ThetaPoly graded_part(int k) const
    {
        ThetaPoly r;
        switch (k) {
        case 0: r.c0 = c0; break;
        case 1: r.c1 = c1; break;
        case 2: r.c2 = c2; break;
        default: break;
        }
        return r;
    }

    [[nodiscard]] bool is_zero() const { return c0.is_zero() && c1.is_zero() && c2.is_zero(); }

    ThetaPoly& operator+=(const ThetaPoly& o)
    {
        c0 += o.c0;
        c1 += o.c1;
        c2 += o.c2;
        return *this;
    }
    ThetaPoly& operator-=(const ThetaPoly& o)
    {
        c0 -= o.c0;
        c1 -= o.c1;
        c2 -= o.c2;
        return *this;
    }
    ThetaPoly& operator*=(const Rational& s)
    {
        c0 *= s;
        c1 *= s;
        c2 *= s;
        return *this;
    }

    friend ThetaPoly operator+(ThetaPoly a, const ThetaPoly& b) { return a += b; }
    friend ThetaPoly operator-(ThetaPoly a, const ThetaPoly& b) { return a -= b; }
    friend ThetaPoly operator-(const ThetaPoly& a) { return {-a.c0, -a.c1, -a.c2}; }
    friend ThetaPoly operator*(ThetaPoly a, const Rational& s) { return a *= s; }
    friend ThetaPoly operator*(const Rational& s, ThetaPoly a) { return a *= s; }

    friend ThetaPoly operator*(const ThetaPoly& a, const ThetaPoly& b)
    {
        return {a.c0 * b.c0, a.c0 * b.c1 + a.c1 * b.c0, a.c0 * b.c2 + a.c1 * b.c1 + a.c2 * b.c0};
    }
    ThetaPoly& operator*=(const ThetaPoly& o) { return *this = *this * o; }

    friend bool operator==(const ThetaPoly&, const ThetaPoly&) = default;

    /// "2 - T", "1/2*T^2", ... in ascending T-power.
    [[nodiscard]] std::string to_string() const
    {
        return detail::format_terms({{c0, ""}, {c1, "T"}, {c2, "T^2"}});
    }

    friend std::ostream& operator<<(std::ostream& os, const ThetaPoly& p) { return os << p.to_string(); }
};

inline ThetaPoly zero_like(const ThetaPoly&) { return {}; }
inline ThetaPoly one_like(const ThetaPoly&) { return ThetaPoly::one(); }

/// Inverse of a unit (nonzero constant term); T is nilpotent so the
/// geometric series stops after T^2.
inline ThetaPoly inverse(const ThetaPoly& p)
{
    if (p.c0.is_zero())
        throw DomainError("theta polynomial " + p.to_string() + " is not a unit");
    const Rational a = Rational(1) / p.c0;
    const ThetaPoly y = ThetaPoly{0, p.c1, p.c2} * a;
    return (ThetaPoly::one() - y + y * y) * a;
}

} // namespace secant
