#pragma once

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "secant/error.hpp"
#include "secant/rational.hpp"

namespace secant {

/// Commutative Q-algebra usable as a series coefficient. zero_like/one_like
/// carry any context (the curve degree for AmbientClass) from a sample value.
template <class R>
concept CoefficientRing = std::copyable<R> && std::equality_comparable<R> && requires(const R& a, const R& b, const Rational& q) {
    { a + b } -> std::same_as<R>;
    { a - b } -> std::same_as<R>;
    { a * b } -> std::same_as<R>;
    { -a } -> std::same_as<R>;
    { a * q } -> std::same_as<R>;
    { zero_like(a) } -> std::same_as<R>;
    { one_like(a) } -> std::same_as<R>;
    { a.is_zero() } -> std::convertible_to<bool>;
    { a.to_string() } -> std::convertible_to<std::string>;
};

/// Polynomial sum_{k <= order} c_k t^k in a formal variable t, all higher
/// powers of t discarded. Holds at least the constant term.
template <CoefficientRing R>
class ChernSeries {
public:
    explicit ChernSeries(std::vector<R> coeffs) : coeffs_(std::move(coeffs))
    {
        if (coeffs_.empty())
            throw DomainError("a series needs at least a constant term");
    }

    static ChernSeries zero(const R& sample, int order)
    {
        check_order(order);
        return ChernSeries(std::vector<R>(static_cast<std::size_t>(order) + 1, zero_like(sample)));
    }
    static ChernSeries constant(const R& value, int order)
    {
        ChernSeries s = zero(value, order);
        s.coeffs_[0] = value;
        return s;
    }
    static ChernSeries one(const R& sample, int order) { return constant(one_like(sample), order); }

    /// value * t^power (zero when power > order).
    static ChernSeries monomial(const R& value, int power, int order)
    {
        ChernSeries s = zero(value, order);
        if (power < 0)
            throw DomainError("negative power of t");
        if (power <= order)
            s.coeffs_[static_cast<std::size_t>(power)] = value;
        return s;
    }
    /// The series variable t itself.
    static ChernSeries variable(const R& sample, int order) { return monomial(one_like(sample), 1, order); }

    [[nodiscard]] int order() const { return static_cast<int>(coeffs_.size()) - 1; }

    /// Coefficient of t^k; zero beyond the truncation order.
    [[nodiscard]] R operator[](int k) const
    {
        if (k < 0)
            throw DomainError("negative power of t");
        if (k > order())
            return zero_like(coeffs_.front());
        return coeffs_[static_cast<std::size_t>(k)];
    }
    [[nodiscard]] const R& constant_term() const { return coeffs_.front(); }
    [[nodiscard]] const std::vector<R>& coefficients() const { return coeffs_; }

    [[nodiscard]] ChernSeries truncated(int order) const
    {
        check_order(order);
        std::vector<R> c;
        c.reserve(static_cast<std::size_t>(order) + 1);
        for (int k = 0; k <= order; ++k)
            c.push_back((*this)[k]);
        return ChernSeries(std::move(c));
    }

    [[nodiscard]] bool is_zero() const
    {
        return std::all_of(coeffs_.begin(), coeffs_.end(), [](const R& c) { return c.is_zero(); });
    }

    /// c_{-t}: coefficient k picks up (-1)^k.
    [[nodiscard]] ChernSeries negated_variable() const
    {
        ChernSeries r = *this;
        for (std::size_t k = 1; k < r.coeffs_.size(); k += 2)
            r.coeffs_[k] = -r.coeffs_[k];
        return r;
    }

    friend bool operator==(const ChernSeries&, const ChernSeries&) = default;

    [[nodiscard]] std::string to_string() const
    {
        std::string out;
        for (int k = 0; k <= order(); ++k) {
            if (coeffs_[static_cast<std::size_t>(k)].is_zero())
                continue;
            if (!out.empty())
                out += " + ";
            out += "(" + coeffs_[static_cast<std::size_t>(k)].to_string() + ")";
            if (k > 0)
                out += k == 1 ? "*t" : "*t^" + std::to_string(k);
        }
        return (out.empty() ? "0" : out) + " + O(t^" + std::to_string(order() + 1) + ")";
    }

    friend std::ostream& operator<<(std::ostream& os, const ChernSeries& s) { return os << s.to_string(); }

private:
    static void check_order(int order)
    {
        if (order < 0)
            throw DomainError("negative truncation order");
    }

    std::vector<R> coeffs_;
};

template <CoefficientRing R>
ChernSeries<R> series_add(const ChernSeries<R>& a, const ChernSeries<R>& b)
{
    const int n = std::min(a.order(), b.order());
    std::vector<R> c;
    c.reserve(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k)
        c.push_back(a[k] + b[k]);
    return ChernSeries<R>(std::move(c));
}

template <CoefficientRing R>
ChernSeries<R> series_scale(const ChernSeries<R>& a, const R& s)
{
    std::vector<R> c;
    c.reserve(a.coefficients().size());
    for (const R& x : a.coefficients())
        c.push_back(x * s);
    return ChernSeries<R>(std::move(c));
}

template <CoefficientRing R>
ChernSeries<R> series_scale(const ChernSeries<R>& a, const Rational& s)
{
    std::vector<R> c;
    c.reserve(a.coefficients().size());
    for (const R& x : a.coefficients())
        c.push_back(x * s);
    return ChernSeries<R>(std::move(c));
}

template <CoefficientRing R>
ChernSeries<R> series_sub(const ChernSeries<R>& a, const ChernSeries<R>& b)
{
    return series_add(a, series_scale(b, Rational(-1)));
}

/// Cauchy product truncated at min(a.order, b.order).
template <CoefficientRing R>
ChernSeries<R> series_mul(const ChernSeries<R>& a, const ChernSeries<R>& b)
{
    const int n = std::min(a.order(), b.order());
    const auto& ac = a.coefficients();
    const auto& bc = b.coefficients();
    std::vector<R> c(static_cast<std::size_t>(n) + 1, zero_like(ac.front()));
    for (int i = 0; i <= n; ++i) {
        if (ac[static_cast<std::size_t>(i)].is_zero())
            continue;
        for (int j = 0; i + j <= n; ++j) {
            if (bc[static_cast<std::size_t>(j)].is_zero())
                continue;
            c[static_cast<std::size_t>(i + j)] =
                c[static_cast<std::size_t>(i + j)] + ac[static_cast<std::size_t>(i)] * bc[static_cast<std::size_t>(j)];
        }
    }
    return ChernSeries<R>(std::move(c));
}

/// Multiplicative inverse of a series whose constant term is the ring unit:
/// b_0 = 1, b_k = -sum_{j=1..k} a_j b_{k-j}.
template <CoefficientRing R>
ChernSeries<R> series_inv(const ChernSeries<R>& a)
{
    const R unit = one_like(a.constant_term());
    if (!(a.constant_term() == unit))
        throw DomainError("series inverse needs constant term 1, got " + a.constant_term().to_string());
    const int n = a.order();
    std::vector<R> b;
    b.reserve(static_cast<std::size_t>(n) + 1);
    b.push_back(unit);
    for (int k = 1; k <= n; ++k) {
        R acc = zero_like(unit);
        for (int j = 1; j <= k; ++j) {
            const R& aj = a.coefficients()[static_cast<std::size_t>(j)];
            if (!aj.is_zero())
                acc = acc + aj * b[static_cast<std::size_t>(k - j)];
        }
        b.push_back(-acc);
    }
    return ChernSeries<R>(std::move(b));
}

/// a^m for any integer m; negative powers go through series_inv.
template <CoefficientRing R>
ChernSeries<R> series_pow(const ChernSeries<R>& a, int m)
{
    ChernSeries<R> base = m < 0 ? series_inv(a) : a;
    ChernSeries<R> result = ChernSeries<R>::one(a.constant_term(), a.order());
    for (unsigned e = m < 0 ? static_cast<unsigned>(-m) : static_cast<unsigned>(m); e != 0; e >>= 1) {
        if (e & 1U)
            result = series_mul(result, base);
        if (e > 1)
            base = series_mul(base, base);
    }
    return result;
}

/// sum_j x^j / j! for x with zero constant term. x^j starts at t^j, so
/// j <= order is a hard bound on the loop.
template <CoefficientRing R>
ChernSeries<R> series_exp(const ChernSeries<R>& x)
{
    if (!x.constant_term().is_zero())
        throw DomainError("series exponential needs zero constant term, got " + x.constant_term().to_string());
    const int n = x.order();
    ChernSeries<R> result = ChernSeries<R>::one(x.constant_term(), n);
    ChernSeries<R> term = result;
    for (int j = 1; j <= n; ++j) {
        term = series_scale(series_mul(term, x), Rational(1) / Rational(j));
        if (term.is_zero())
            break;
        result = series_add(result, term);
    }
    return result;
}

/// Composition a(g(t)) for g with zero constant term, truncated at
/// min(a.order, g.order). Powers of g are only formed up to the last nonzero
/// coefficient of a.
template <CoefficientRing R>
ChernSeries<R> series_subst(const ChernSeries<R>& a, const ChernSeries<R>& g)
{
    if (!g.constant_term().is_zero())
        throw DomainError("substituted series needs zero constant term, got " + g.constant_term().to_string());
    const int n = std::min(a.order(), g.order());
    int last = n;
    while (last > 0 && a[last].is_zero())
        --last;
    const ChernSeries<R> inner = g.truncated(n);
    ChernSeries<R> result = ChernSeries<R>::constant(a[0], n);
    ChernSeries<R> power = ChernSeries<R>::one(a.constant_term(), n);
    for (int k = 1; k <= last; ++k) {
        power = series_mul(power, inner);
        if (!a[k].is_zero())
            result = series_add(result, series_scale(power, a[k]));
    }
    return result;
}

template <CoefficientRing R>
ChernSeries<R> operator+(const ChernSeries<R>& a, const ChernSeries<R>& b) { return series_add(a, b); }
template <CoefficientRing R>
ChernSeries<R> operator-(const ChernSeries<R>& a, const ChernSeries<R>& b) { return series_sub(a, b); }
template <CoefficientRing R>
ChernSeries<R> operator*(const ChernSeries<R>& a, const ChernSeries<R>& b) { return series_mul(a, b); }

} // namespace secant
