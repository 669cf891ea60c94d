#pragma once

#include <ostream>
#include <string>

#include "secant/detail/format_terms.hpp"
#include "secant/theta_poly.hpp"

namespace secant {

/// Even cohomology of C x Pic^3(C) as a free Q[T]/(T^3)-module on {1, f, g}:
/// f is the pulled-back point class of the curve, g the Kunneth component
/// of c1 of the Poincare bundle (written gamma below), T = q^*Theta.
/// Products reduce by f^2 = 0, f*gamma = 0, gamma^2 = -2 f T, hence gamma^3 = 0.
struct UpstreamClass {
    ThetaPoly u1;
    ThetaPoly uf;
    ThetaPoly ug;

    static UpstreamClass one() { return {ThetaPoly::one(), {}, {}}; }
    static UpstreamClass f() { return {{}, ThetaPoly::one(), {}}; }
    static UpstreamClass gamma() { return {{}, {}, ThetaPoly::one()}; }
    /// q^* of a class on Pic^3(C).
    static UpstreamClass pullback(const ThetaPoly& p) { return {p, {}, {}}; }
    static UpstreamClass constant(const Rational& c) { return pullback(ThetaPoly::constant(c)); }

    [[nodiscard]] bool is_zero() const { return u1.is_zero() && uf.is_zero() && ug.is_zero(); }

    UpstreamClass& operator+=(const UpstreamClass& o)
    {
        u1 += o.u1;
        uf += o.uf;
        ug += o.ug;
        return *this;
    }
    UpstreamClass& operator-=(const UpstreamClass& o)
    {
        u1 -= o.u1;
        uf -= o.uf;
        ug -= o.ug;
        return *this;
    }
    UpstreamClass& operator*=(const Rational& s)
    {
        u1 *= s;
        uf *= s;
        ug *= s;
        return *this;
    }

    friend UpstreamClass operator+(UpstreamClass a, const UpstreamClass& b) { return a += b; }
    friend UpstreamClass operator-(UpstreamClass a, const UpstreamClass& b) { return a -= b; }
    friend UpstreamClass operator-(const UpstreamClass& a) { return {-a.u1, -a.uf, -a.ug}; }
    friend UpstreamClass operator*(UpstreamClass a, const Rational& s) { return a *= s; }
    friend UpstreamClass operator*(const Rational& s, UpstreamClass a) { return a *= s; }

    friend UpstreamClass operator*(const UpstreamClass& a, const UpstreamClass& b)
    {
        // (a1 + af f + ag gamma)(b1 + bf f + bg gamma); f^2, f*gamma vanish
        return {a.u1 * b.u1,
                a.u1 * b.uf + a.uf * b.u1 - ThetaPoly{0, 2, 0} * a.ug * b.ug,
                a.u1 * b.ug + a.ug * b.u1};
    }
    UpstreamClass& operator*=(const UpstreamClass& o) { return *this = *this * o; }

    friend bool operator==(const UpstreamClass&, const UpstreamClass&) = default;

    /// "1 + 3*f + gamma - f*T"
    [[nodiscard]] std::string to_string() const
    {
        std::vector<std::pair<Rational, std::string>> terms;
        const char* basis[] = {"", "f", "gamma"};
        const ThetaPoly* parts[] = {&u1, &uf, &ug};
        for (int i = 0; i < 3; ++i)
            for (int k = 0; k <= ThetaPoly::top_degree; ++k)
                terms.emplace_back((*parts[i])[k], detail::join_monomial(basis[i], detail::power("T", k)));
        return detail::format_terms(terms);
    }

    friend std::ostream& operator<<(std::ostream& os, const UpstreamClass& x) { return os << x.to_string(); }
};

inline UpstreamClass zero_like(const UpstreamClass&) { return {}; }
inline UpstreamClass one_like(const UpstreamClass&) { return UpstreamClass::one(); }

inline UpstreamClass upstream_mul(const UpstreamClass& a, const UpstreamClass& b) { return a * b; }

} // namespace secant
