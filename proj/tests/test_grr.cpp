#include <gtest/gtest.h>

#include "secant/grr.hpp"
#include "secant/random_elements.hpp"

using namespace secant;

namespace {

const UpstreamClass f = UpstreamClass::f();
const UpstreamClass gamma_ = UpstreamClass::gamma();
const UpstreamClass unit = UpstreamClass::one();
const UpstreamClass f_theta{{}, ThetaPoly::theta(), {}};

Rational q(long n, long d = 1) { return Rational(BigInt(n), BigInt(d)); }

} // namespace

TEST(UpstreamMul, Relations)
{
    EXPECT_EQ(upstream_mul(gamma_, gamma_), f_theta * Rational(-2));
    EXPECT_EQ(upstream_mul(f, gamma_), UpstreamClass{});
    EXPECT_EQ(upstream_mul(f, f), UpstreamClass{});
    EXPECT_EQ(gamma_ * gamma_ * gamma_, UpstreamClass{});
}

TEST(UpstreamMul, SquareOfPoincareC1)
{
    const UpstreamClass c1 = f * Rational(3) + gamma_;
    EXPECT_EQ(c1 * c1, f_theta * Rational(-2));
    EXPECT_EQ(c1 * c1 * c1, UpstreamClass{});
}

TEST(UpstreamMul, RingAxioms)
{
    RandomElements rnd(31);
    for (int i = 0; i < 1000; ++i) {
        const UpstreamClass a = rnd.upstream(), b = rnd.upstream(), c = rnd.upstream();
        ASSERT_EQ((a * b) * c, a * (b * c));
        ASSERT_EQ(a * b, b * a);
        ASSERT_EQ(a * (b + c), a * b + a * c);
        ASSERT_EQ(a * unit, a);
        ASSERT_EQ(a - a, UpstreamClass{});
    }
}

TEST(ChPoincare, ClosedForm)
{
    const UpstreamClass ch = ch_poincare();
    EXPECT_EQ(ch, unit + f * Rational(3) + gamma_ - f_theta);
    EXPECT_EQ(ch.u1.c0, Rational(1));
    EXPECT_EQ(ch.to_string(), "1 + 3*f - f*T + gamma");
}

TEST(ChPoincare, ExponentialRejectsConstantTerm)
{
    EXPECT_THROW(exp_upstream(unit + f), DomainError);
}

TEST(Todd, Picard) { EXPECT_EQ(todd_from_chern(ThetaPoly{}, ThetaPoly{}), ThetaPoly::one()); }

TEST(Todd, Curve)
{
    // H^*(C) = Q[P]/(P^2) embeds into the upstream ring by p^*, P -> f.
    const UpstreamClass point = f;
    EXPECT_EQ(todd_from_chern(point * Rational(-2), UpstreamClass{}), unit - point);
}

TEST(Todd, Product)
{
    EXPECT_EQ(todd_from_chern(f * Rational(-2), UpstreamClass{}), unit - f);
    EXPECT_EQ(todd_product(), unit - f);
}

TEST(Todd, GeneralExpansion)
{
    // 1 + c1/2 + (c1^2 + c2)/12 with c1 = T, c2 = T^2 gives 1 + T/2 + T^2/6
    EXPECT_EQ(todd_from_chern(ThetaPoly::theta(), ThetaPoly{0, 0, 1}), (ThetaPoly{1, q(1, 2), q(1, 6)}));
}

TEST(Pushforward, Lemma)
{
    EXPECT_EQ(pushforward_q(unit), ThetaPoly{});
    EXPECT_EQ(pushforward_q(f), ThetaPoly::one());
    EXPECT_EQ(pushforward_q(gamma_), ThetaPoly{});
    EXPECT_EQ(pushforward_q(f_theta), ThetaPoly::theta());
}

TEST(Pushforward, ProjectionFormula)
{
    RandomElements rnd(32);
    for (int i = 0; i < 200; ++i) {
        const UpstreamClass a = rnd.upstream();
        const ThetaPoly b = rnd.theta_poly();
        EXPECT_EQ(pushforward_q(a * UpstreamClass::pullback(b)), pushforward_q(a) * b);
    }
}

TEST(Grr, PoincareBundle) { EXPECT_EQ(grr_pushforward(ch_poincare()), (ThetaPoly{2, -1, 0})); }

TEST(Grr, TrivialBundle) { EXPECT_EQ(grr_pushforward(unit), (ThetaPoly{-1, 0, 0})); }

TEST(Grr, TwistedDualPoincare)
{
    for (int d : {8, 11, 30}) {
        const UpstreamClass ch = (unit + f * Rational(d)) * (unit - f * Rational(3) - gamma_ - f_theta);
        EXPECT_EQ(grr_pushforward(ch), (ThetaPoly{d - 4, -1, 0})) << "d = " << d;
    }
}

TEST(Grr, RejectsFractionalRank)
{
    EXPECT_THROW(grr_pushforward(UpstreamClass::constant(q(1, 2))), IntegralityError);
}

TEST(BundleCharacters, DegreeEight)
{
    const BundleCharacters b = compute_bundle_characters(8);
    EXPECT_EQ(b.g_bundle.rank, 4);
    EXPECT_EQ(b.g_bundle.chern_character, (ThetaPoly{4, -1, 0}));
    EXPECT_EQ(b.h_bundle.rank, 2);
    EXPECT_EQ(b.h_bundle.chern_character, (ThetaPoly{2, -1, 0}));
}

TEST(BundleCharacters, AllDegrees)
{
    for (int d = 8; d <= 60; ++d) {
        const BundleCharacters b = compute_bundle_characters(d);
        EXPECT_EQ(b.h_bundle.chern_character, (ThetaPoly{2, -1, 0}));
        EXPECT_EQ(b.g_bundle.chern_character, (ThetaPoly{d - 4, -1, 0}));
        EXPECT_EQ(b.g_bundle.rank, d - 4);
    }
    EXPECT_EQ(compute_bundle_characters(12).g_bundle.chern_character, (ThetaPoly{8, -1, 0}));
}

TEST(BundleCharacters, RejectsSmallDegree) { EXPECT_THROW(compute_bundle_characters(7), DomainError); }

TEST(ChernPolynomial, FromCharacter)
{
    // ch = r - T gives c_t = exp(-T t) = 1 - T t + T^2 t^2 / 2
    const BundleCharacters b = compute_bundle_characters(9);
    const ChernSeries<ThetaPoly> expected({ThetaPoly::one(), -ThetaPoly::theta(), ThetaPoly{0, 0, q(1, 2)}, {}});
    EXPECT_EQ(chern_polynomial(b.h_bundle, 3), expected);
    EXPECT_EQ(chern_polynomial(b.g_bundle, 3), expected);
}

TEST(ChernPolynomial, NewtonIdentitiesOnRoots)
{
    // Line bundles with roots T and 2T: ch = 2 + 3T + 5T^2/2, c_t = (1 + T t)(1 + 2T t)
    const BundleData bundle = make_bundle("sum", ThetaPoly{2, 3, q(5, 2)});
    const ChernSeries<ThetaPoly> expected({ThetaPoly::one(), ThetaPoly{0, 3, 0}, ThetaPoly{0, 0, 2}});
    EXPECT_EQ(chern_polynomial(bundle, 2), expected);
}

TEST(MakeBundle, RankFromDegreeZeroPart)
{
    EXPECT_EQ(make_bundle("x", ThetaPoly{5, 1, 0}).rank, 5);
    EXPECT_THROW(make_bundle("x", ThetaPoly{q(3, 2), 0, 0}), IntegralityError);
    EXPECT_THROW(make_bundle("x", ThetaPoly{-1, 0, 0}), IntegralityError);
}
