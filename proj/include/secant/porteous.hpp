#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "secant/ambient_class.hpp"
#include "secant/binomial.hpp"
#include "secant/chern_series.hpp"
#include "secant/error.hpp"
#include "secant/grr.hpp"

namespace secant {

using AmbientSeries = ChernSeries<AmbientClass>;

/// Pullback of a series on Pic^3(C) to Pic^3(C) x P^(d-2), coefficientwise.
inline AmbientSeries lift_series(const ChernSeries<ThetaPoly>& s, int d)
{
    std::vector<AmbientClass> c;
    c.reserve(s.coefficients().size());
    for (const ThetaPoly& x : s.coefficients())
        c.push_back(AmbientClass::lift(x, d));
    return AmbientSeries(std::move(c));
}

/// base (x) O(-twist_power) on the product, optionally dualized first.
struct TwistedBundle {
    BundleData base;
    int twist_power = 0;
    bool dual = false;

    [[nodiscard]] int rank() const { return base.rank; }
};

/// Bundle E = G (x) O(-1) (the source of the multiplication map).
inline TwistedBundle source_bundle(int d) { return {compute_bundle_characters(d).g_bundle, 1, false}; }
/// Bundle F = H^* (x) O (the target).
inline TwistedBundle target_bundle(int d) { return {compute_bundle_characters(d).h_bundle, 0, true}; }

/// Chern polynomial of (bundle of rank `rank` with Chern polynomial c)
/// tensored with O(-sign): (1 - sign h t)^rank c(t / (1 - sign h t)).
inline AmbientSeries twist_by_hyperplane(const AmbientSeries& c, int rank, int sign)
{
    const AmbientClass& c0 = c.constant_term();
    if (!(c0 == one_like(c0)))
        throw DomainError("Chern polynomial must start with 1, got " + c0.to_string());
    if (rank < 0)
        throw DomainError("negative bundle rank");
    if (sign == 0)
        return c;
    const int d = c0.d();
    const int order = c.order();
    const AmbientSeries one_minus =
        AmbientSeries::one(c0, order) - AmbientSeries::monomial(AmbientClass::h(d) * Rational(sign), 1, order);
    const AmbientSeries shifted = AmbientSeries::variable(c0, order) * series_inv(one_minus);
    return series_pow(one_minus, rank) * series_subst(c, shifted);
}

inline AmbientSeries chern_series(const TwistedBundle& bundle, int d, int order)
{
    ChernSeries<ThetaPoly> c = chern_polynomial(bundle.base, order);
    if (bundle.dual)
        c = c.negated_variable();
    return twist_by_hyperplane(lift_series(c, d), bundle.rank(), bundle.twist_power);
}

/// c_t(F) = c_{-t}(H) = exp(T t).
inline AmbientSeries chern_series_F(int d, int order)
{
    require_curve_degree(d);
    return chern_series(target_bundle(d), d, order);
}

/// c_t(E) = (1 - h t)^(d-4) exp(-T t / (1 - h t)).
inline AmbientSeries chern_series_E(int d, int order)
{
    require_curve_degree(d);
    return chern_series(source_bundle(d), d, order);
}

/// c_t(F - E) = c_t(F) / c_t(E).
inline AmbientSeries chern_difference(int d, int order)
{
    require_curve_degree(d);
    if (order < d - 5)
        throw DomainError("truncation order " + std::to_string(order) + " is below d - 5 = " +
                          std::to_string(d - 5));
    return chern_series_F(d, order) * series_inv(chern_series_E(d, order));
}

inline AmbientSeries chern_difference(int d) { return chern_difference(d, d - 5); }

/// c_t(F - E) from the product formula
/// (1 - h t)^(4-d) exp((2 T t - T h t^2) / (1 - h t)).
inline AmbientSeries chern_difference_exponential_form(int d, int order)
{
    require_curve_degree(d);
    const AmbientClass unit = AmbientClass::one(d);
    const AmbientClass theta = AmbientClass::theta(d);
    const AmbientClass h = AmbientClass::h(d);
    const AmbientSeries one_minus = AmbientSeries::one(unit, order) - AmbientSeries::monomial(h, 1, order);
    const AmbientSeries numerator = AmbientSeries::monomial(theta * Rational(2), 1, order) -
                                    AmbientSeries::monomial(theta * h, 2, order);
    return series_pow(one_minus, 4 - d) * series_exp(numerator * series_inv(one_minus));
}

/// c_t(F - E) from the expansion into five sums, each term
/// C(d + k - 3, k) times a fixed polynomial in T, h and t.
inline AmbientSeries chern_difference_five_sum(int d, int order)
{
    require_curve_degree(d);
    auto mono = [d](int a, int b, Rational c) { return AmbientClass::monomial(d, a, b, std::move(c)); };
    auto weight = [d](int k) { return binomial_q(d + k - 3, k); };

    std::vector<AmbientClass> c;
    for (int m = 0; m <= order; ++m) {
        AmbientClass x(d);
        if (int k = m; k >= 0)
            x += mono(0, k, weight(k));
        if (int k = m - 1; k >= 0)
            x += (mono(1, k, 2) + mono(0, k + 1, -2)) * weight(k);
        if (int k = m - 2; k >= 0)
            x += (mono(2, k, 2) + mono(1, k + 1, -3) + mono(0, k + 2, 1)) * weight(k);
        if (int k = m - 3; k >= 0)
            x += (mono(1, k + 2, 1) + mono(2, k + 1, -2)) * weight(k);
        if (int k = m - 4; k >= 0)
            x += mono(2, k + 2, Rational(1) / Rational(2)) * weight(k);
        c.push_back(std::move(x));
    }
    return AmbientSeries(std::move(c));
}

/// Closed form of c_i(F - E), 1 <= i <= d - 5:
///   C(d-5+i, i) h^i
/// + (C(d-5+i, i-1) + C(d-6+i, i-1)) T h^(i-1)
/// + (2 C(d-6+i, i-2) + C(d-7+i, i-4) / 2) T^2 h^(i-2)
inline AmbientClass ci_closed_form(int i, int d)
{
    require_curve_degree(d);
    if (i < 1 || i > d - 5)
        throw DomainError("Chern index " + std::to_string(i) + " outside [1, " + std::to_string(d - 5) + "]");
    AmbientClass x = AmbientClass::monomial(d, 0, i, binomial_q(d - 5 + i, i));
    x += AmbientClass::monomial(d, 1, i - 1, binomial_q(d - 5 + i, i - 1) + binomial_q(d - 6 + i, i - 1));
    if (i >= 2)
        x += AmbientClass::monomial(d, 2, i - 2,
                                    Rational(2) * binomial_q(d - 6 + i, i - 2) +
                                        binomial_q(d - 7 + i, i - 4) / Rational(2));
    return x;
}

/// [1, c_1, ..., c_n] from the closed form.
inline std::vector<AmbientClass> chern_classes_closed_form(int d)
{
    std::vector<AmbientClass> c{AmbientClass::one(d)};
    for (int i = 1; i <= d - 5; ++i)
        c.push_back(ci_closed_form(i, d));
    return c;
}

/// [1, c_1, ..., c_n] from series division.
inline std::vector<AmbientClass> chern_classes_divided(int d) { return chern_difference(d).coefficients(); }

/// n x n Toeplitz-Hessenberg matrix with entry (r, col) = c_{col - r + 1},
/// c_0 = 1 and c_{<0} = 0.
struct PorteousMatrix {
    int n = 0;
    std::vector<std::vector<AmbientClass>> entries;

    /// chern[i] = c_i for 0 <= i <= n, chern[0] = 1.
    static PorteousMatrix from_chern_classes(const std::vector<AmbientClass>& chern, int n)
    {
        if (n < 1 || static_cast<int>(chern.size()) < n + 1)
            throw DomainError("need c_0 .. c_" + std::to_string(n) + " for the Porteous matrix");
        PorteousMatrix m{n, {}};
        const AmbientClass zero = zero_like(chern.front());
        m.entries.assign(static_cast<std::size_t>(n), std::vector<AmbientClass>(static_cast<std::size_t>(n), zero));
        for (int r = 0; r < n; ++r)
            for (int col = std::max(0, r - 1); col < n; ++col)
                m.entries[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] =
                    chern[static_cast<std::size_t>(col - r + 1)];
        return m;
    }

    [[nodiscard]] const AmbientClass& operator()(int r, int col) const
    {
        return entries[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
    }

    /// Ones on the subdiagonal, zeros below it, constant diagonals.
    [[nodiscard]] bool is_toeplitz_hessenberg() const
    {
        const AmbientClass& any = (*this)(0, 0);
        for (int r = 0; r < n; ++r)
            for (int col = 0; col < n; ++col) {
                const AmbientClass& x = (*this)(r, col);
                if (col < r - 1 && !x.is_zero())
                    return false;
                if (col == r - 1 && !(x == one_like(any)))
                    return false;
                if (r > 0 && col > 0 && col >= r - 1 && !(x == (*this)(r - 1, col - 1)))
                    return false;
            }
        return true;
    }
};

/// Determinant of an upper Hessenberg matrix by repeated cofactor expansion
/// along the first column. Only two first-column entries are nonzero, and
/// every minor that appears is a leading row followed by a trailing block,
/// so the trailing determinants T_j = det(m[j:, j:]) satisfy
///   T_j = sum_k (-1)^k (m[j+1][j] ... m[j+k][j+k-1]) m[j][j+k] T_{j+k+1}
/// with T_n = 1. Division-free: the coefficient ring has zero divisors.
template <CoefficientRing R>
R upper_hessenberg_determinant(const std::vector<std::vector<R>>& m)
{
    const int n = static_cast<int>(m.size());
    if (n == 0)
        throw DomainError("empty matrix");
    auto at = [&m](int r, int c) -> const R& { return m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]; };
    for (int r = 0; r < n; ++r) {
        if (static_cast<int>(m[static_cast<std::size_t>(r)].size()) != n)
            throw DomainError("matrix is not square");
        for (int c = 0; c + 1 < r; ++c)
            if (!at(r, c).is_zero())
                throw DomainError("matrix is not upper Hessenberg");
    }
    std::vector<R> trailing(static_cast<std::size_t>(n) + 1, one_like(at(0, 0)));
    for (int j = n - 1; j >= 0; --j) {
        R acc = zero_like(at(0, 0));
        R subdiagonal = one_like(at(0, 0));
        for (int k = 0; j + k < n; ++k) {
            if (k > 0)
                subdiagonal = subdiagonal * at(j + k, j + k - 1);
            if (subdiagonal.is_zero())
                break;
            const R term = subdiagonal * at(j, j + k) * trailing[static_cast<std::size_t>(j + k + 1)];
            acc = (k % 2 == 0) ? acc + term : acc - term;
        }
        trailing[static_cast<std::size_t>(j)] = acc;
    }
    return trailing[0];
}

/// d_0 .. d_n from d_m = sum_{i=1..m} (-1)^(i-1) c_i d_(m-i), d_0 = 1.
inline std::vector<AmbientClass> determinant_recurrence(const std::vector<AmbientClass>& chern, int n)
{
    if (n < 0 || static_cast<int>(chern.size()) < n + 1)
        throw DomainError("need c_0 .. c_" + std::to_string(n) + " for the recurrence");
    std::vector<AmbientClass> dets{one_like(chern.front())};
    for (int m = 1; m <= n; ++m) {
        AmbientClass acc = zero_like(chern.front());
        for (int i = 1; i <= m; ++i) {
            const AmbientClass term = chern[static_cast<std::size_t>(i)] * dets[static_cast<std::size_t>(m - i)];
            if (i % 2 == 1)
                acc += term;
            else
                acc -= term;
        }
        dets.push_back(std::move(acc));
    }
    return dets;
}

/// Closed form of the leading n x n minor, valid for n >= 3:
///   C(d-4, n) h^n + (C(d-3, n) - C(d-5, n)) T h^(n-1)
/// + (C(d-2, n)/2 - C(d-4, n) + C(d-6, n)/2) T^2 h^(n-2)
inline AmbientClass dn_closed_form(int n, int d)
{
    require_curve_degree(d);
    if (n < 3)
        throw DomainError("closed form for d_n holds only for n >= 3 (got n = " + std::to_string(n) +
                          "); use the recurrence");
    if (n > d - 5)
        throw DomainError("n = " + std::to_string(n) + " exceeds the matrix size d - 5 = " + std::to_string(d - 5));
    const Rational half = Rational(1) / Rational(2);
    AmbientClass x = AmbientClass::monomial(d, 0, n, binomial_q(d - 4, n));
    x += AmbientClass::monomial(d, 1, n - 1, binomial_q(d - 3, n) - binomial_q(d - 5, n));
    x += AmbientClass::monomial(d, 2, n - 2,
                                binomial_q(d - 2, n) * half - binomial_q(d - 4, n) + binomial_q(d - 6, n) * half);
    return x;
}

enum class PorteousMethod { cofactor_determinant, recurrence, closed_form };

inline std::string_view to_string(PorteousMethod m)
{
    switch (m) {
    case PorteousMethod::cofactor_determinant: return "cofactor";
    case PorteousMethod::recurrence: return "recurrence";
    case PorteousMethod::closed_form: return "closed-form";
    }
    return "unknown";
}

inline constexpr PorteousMethod all_porteous_methods[] = {
    PorteousMethod::cofactor_determinant, PorteousMethod::recurrence, PorteousMethod::closed_form};

/// Class x1 of the rank <= 1 locus of E -> F.
struct PorteousResult {
    AmbientClass x1;
    PorteousMethod method;
};

namespace detail {
inline PorteousResult checked_result(AmbientClass x1, PorteousMethod method)
{
    const int n = x1.d() - 5;
    if (!x1.is_homogeneous(n))
        throw ConsistencyError("Porteous class " + x1.to_string() + " (" + std::string(to_string(method)) +
                               ") is not homogeneous of degree " + std::to_string(n));
    return {std::move(x1), method};
}
} // namespace detail

/// Cofactor determinant of the Porteous matrix built from the given
/// [1, c_1, ..., c_(d-5)].
inline PorteousResult porteous_det_cofactor(const std::vector<AmbientClass>& chern)
{
    const int d = chern.front().d();
    const PorteousMatrix m = PorteousMatrix::from_chern_classes(chern, d - 5);
    return detail::checked_result(upper_hessenberg_determinant(m.entries), PorteousMethod::cofactor_determinant);
}

/// Cofactor determinant with c_i from series division.
inline PorteousResult porteous_det_cofactor(int d)
{
    require_curve_degree(d);
    return porteous_det_cofactor(chern_classes_divided(d));
}

inline PorteousResult porteous_det_recurrence(const std::vector<AmbientClass>& chern)
{
    const int d = chern.front().d();
    return detail::checked_result(determinant_recurrence(chern, d - 5).back(), PorteousMethod::recurrence);
}

/// Recurrence with c_i from the closed form.
inline PorteousResult porteous_det_recurrence(int d)
{
    require_curve_degree(d);
    return porteous_det_recurrence(chern_classes_closed_form(d));
}

inline PorteousResult porteous_closed_form(int d)
{
    return detail::checked_result(dn_closed_form(d - 5, d), PorteousMethod::closed_form);
}

inline PorteousResult porteous_class(int d, PorteousMethod method)
{
    switch (method) {
    case PorteousMethod::cofactor_determinant: return porteous_det_cofactor(d);
    case PorteousMethod::recurrence: return porteous_det_recurrence(d);
    case PorteousMethod::closed_form: return porteous_closed_form(d);
    }
    throw DomainError("unknown Porteous method");
}

} // namespace secant
