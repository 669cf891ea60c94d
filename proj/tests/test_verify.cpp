#include <gtest/gtest.h>

#include "secant/verify.hpp"

using namespace secant;

TEST(Verify, SmallRangePasses)
{
    VerifyOptions opt;
    opt.d_min = 8;
    opt.d_max = 14;
    opt.ring_samples = 50;
    const VerifyReport report = run_verification(opt);
    for (const auto& c : report.checks)
        EXPECT_TRUE(c.passed) << c.name << ": " << (c.counterexample ? c.counterexample->actual : "");
    EXPECT_TRUE(report.passed());
    EXPECT_EQ(report.checks.size(), 13u);
}

TEST(Verify, InjectedFaultBreaksDeterminantAgreement)
{
    VerifyOptions opt;
    opt.d_min = 8;
    opt.d_max = 10;
    opt.ring_samples = 10;
    opt.perturb_c2 = true;
    const VerifyReport report = run_verification(opt);
    EXPECT_FALSE(report.passed());
    bool seen = false;
    for (const auto& c : report.checks)
        if (c.name.rfind("determinant", 0) == 0) {
            seen = true;
            EXPECT_FALSE(c.passed);
            ASSERT_TRUE(c.counterexample);
            EXPECT_EQ(c.counterexample->d, 8);
            EXPECT_EQ(c.counterexample->expected, "4*h^3 + 9*T*h^2 + 6*T^2*h");
        }
    EXPECT_TRUE(seen);
}

TEST(Verify, RejectsBadRange)
{
    VerifyOptions opt;
    opt.d_min = 7;
    EXPECT_THROW(run_verification(opt), DomainError);
    opt.d_min = 12;
    opt.d_max = 11;
    EXPECT_THROW(run_verification(opt), DomainError);
}
