#pragma once

#include <string>
#include <utility>
#include <vector>

#include "secant/chern_series.hpp"
#include "secant/error.hpp"
#include "secant/theta_poly.hpp"
#include "secant/upstream_class.hpp"

namespace secant {

/// Genus of the curve; every constant below (Theta^2 = 2, the gamma
/// relations, the tangent class of C) is specific to genus 2.
inline constexpr int curve_genus = 2;
/// Degree of the Poincare bundle on the curve factor (we work on Pic^3).
inline constexpr int poincare_degree = 3;

/// A vector bundle on Pic^3(C), known through its Chern character.
struct BundleData {
    int rank = 0;
    ThetaPoly chern_character;
    std::string label;

    friend bool operator==(const BundleData&, const BundleData&) = default;
};

/// Reads the rank off the degree-0 part of ch, which must be a non-negative integer.
inline BundleData make_bundle(std::string label, ThetaPoly ch)
{
    const Rational& r = ch.c0;
    if (!r.is_integer() || r.sign() < 0)
        throw IntegralityError("Chern character " + ch.to_string() + " of " + label +
                               " has no valid rank");
    return {static_cast<int>(r.to_int64()), std::move(ch), std::move(label)};
}

/// exp(x) for x in the augmentation ideal of a graded ring whose elements
/// vanish beyond degree top_degree; the series stops at x^top_degree.
template <class R>
R exp_nilpotent(const R& x, int top_degree)
{
    const R unit = one_like(x);
    R result = unit;
    R term = unit;
    for (int j = 1; j <= top_degree; ++j) {
        term = term * x * (Rational(1) / Rational(j));
        if (term.is_zero())
            break;
        result = result + term;
    }
    return result;
}

inline UpstreamClass exp_upstream(const UpstreamClass& x)
{
    if (!x.u1.c0.is_zero())
        throw DomainError("exponential needs a class without constant term, got " + x.to_string());
    // C x Pic^3(C) has complex dimension 3
    return exp_nilpotent(x, 3);
}

/// c1 of the Poincare bundle: deg * f + gamma.
inline UpstreamClass poincare_c1() { return UpstreamClass::f() * Rational(poincare_degree) + UpstreamClass::gamma(); }

/// ch of the Poincare bundle, exp(3f + gamma) = 1 + 3f + gamma - f*T.
inline UpstreamClass ch_poincare() { return exp_upstream(poincare_c1()); }

/// Todd class of a bundle on a variety of dimension <= 2:
/// 1 + c1/2 + (c1^2 + c2)/12.
template <CoefficientRing R>
R todd_from_chern(const R& c1, const R& c2)
{
    return one_like(c1) + c1 * (Rational(1) / Rational(2)) + (c1 * c1 + c2) * (Rational(1) / Rational(12));
}

/// td(Pic^3(C)): the tangent bundle of an abelian surface is trivial.
inline ThetaPoly todd_picard() { return todd_from_chern(ThetaPoly{}, ThetaPoly{}); }

/// td(C x Pic^3(C)) from its tangent Chern classes: c1 = (2 - 2g) f pulled
/// back from C, and c2 = c1(T_C) * c1(T_Pic) = 0.
inline UpstreamClass todd_product()
{
    const UpstreamClass c1 = UpstreamClass::f() * Rational(2 - 2 * curve_genus);
    return todd_from_chern(c1, UpstreamClass{});
}

/// Proper pushforward along q : C x Pic^3(C) -> Pic^3(C). Kills 1 and gamma,
/// sends f to 1, and is Q[T]-linear by the projection formula.
inline ThetaPoly pushforward_q(const UpstreamClass& a) { return a.uf; }

/// ch(q_* E) = q_*(ch(E) td(C x Pic)) / td(Pic).
inline ThetaPoly grr_pushforward(const UpstreamClass& ch)
{
    if (!ch.u1.c0.is_integer())
        throw IntegralityError("Chern character " + ch.to_string() + " has a fractional rank");
    return pushforward_q(ch * todd_product()) * inverse(todd_picard());
}

struct BundleCharacters {
    BundleData h_bundle; ///< q_* of the Poincare bundle, rank 2
    BundleData g_bundle; ///< q_*(p^* O_C(H) (x) L^-1), rank d - 4
};

/// Both pushed-forward bundles by GRR. p^* H is d times f since the
/// hyperplane section has degree d on C.
inline BundleCharacters compute_bundle_characters(int d)
{
    require_curve_degree(d);
    BundleData h = make_bundle("H", grr_pushforward(ch_poincare()));

    const UpstreamClass ch_hyperplane = exp_upstream(UpstreamClass::f() * Rational(d));
    const UpstreamClass ch_dual_poincare = exp_upstream(-poincare_c1());
    BundleData g = make_bundle("G", grr_pushforward(ch_hyperplane * ch_dual_poincare));

    if (h.rank != curve_genus || g.rank != d - 4)
        throw ConsistencyError("pushed-forward ranks " + std::to_string(h.rank) + ", " +
                               std::to_string(g.rank) + " do not match h^0 counts");
    return {std::move(h), std::move(g)};
}

/// Chern polynomial c_t from the Chern character via
/// log c_t = sum_k (-1)^(k-1) (k-1)! ch_k t^k.
inline ChernSeries<ThetaPoly> chern_polynomial(const BundleData& bundle, int order)
{
    std::vector<ThetaPoly> log_coeffs(static_cast<std::size_t>(order) + 1);
    Rational factorial = 1;
    for (int k = 1; k <= order && k <= ThetaPoly::top_degree; ++k) {
        if (k > 1)
            factorial *= Rational(k - 1);
        const Rational sign = (k % 2 == 1) ? 1 : -1;
        log_coeffs[static_cast<std::size_t>(k)] = bundle.chern_character.graded_part(k) * (sign * factorial);
    }
    return series_exp(ChernSeries<ThetaPoly>(std::move(log_coeffs)));
}

} // namespace secant
