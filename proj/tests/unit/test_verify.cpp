#include <gtest/gtest.h>

#include "cyclonorm/verify.hpp"

using namespace cyclonorm;

TEST(VerifySuites, AllPassAtSmallScale)
{
    for (const std::string& name : suite_names()) {
        const SuiteResult r = run_suite(name, 13);
        EXPECT_TRUE(r.passed()) << name;
        EXPECT_GT(r.checks, 0U) << name;
        EXPECT_GT(r.moduli, 0U) << name;
    }
}

TEST(VerifySuites, LucasCountsFourteenPrimes)
{
    const SuiteResult r = run_suite("lucas", 53);
    EXPECT_TRUE(r.passed());
    EXPECT_EQ(r.moduli, 14U);
}

TEST(VerifySuites, BinomialVisitsAdmissibleValues)
{
    const SuiteResult r = run_suite("binomial", 101);
    EXPECT_TRUE(r.passed());
    EXPECT_EQ(r.moduli, 33U); // p in [5, 101] with p = 1, 5 mod 6
}

TEST(VerifySuites, InputErrors)
{
    EXPECT_THROW(run_suite("nope", 13), InvalidInput);
    EXPECT_THROW(run_suite("oracle", 1000), InvalidInput);
    EXPECT_THROW(run_suite("oracle", 13, 1000), BudgetExceeded);
}
