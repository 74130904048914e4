#include <gtest/gtest.h>

#include <algorithm>

#include "cyclonorm/core_arith.hpp"
#include "support/oracles.hpp"

using namespace cyclonorm;

TEST(IsPrime, SmallValues)
{
    EXPECT_TRUE(is_prime(2));
    EXPECT_FALSE(is_prime(1));
    EXPECT_TRUE(is_prime(11));
    EXPECT_FALSE(is_prime(0));
    EXPECT_FALSE(is_prime(9));
}

TEST(IsPrime, AgreesWithTrialDivisionBelow100000)
{
    for (std::uint64_t n = 0; n < 100'000; ++n) {
        ASSERT_EQ(is_prime(n), oracle::trial_division_prime(n)) << n;
    }
}

TEST(IsPrime, LargeKnownValues)
{
    EXPECT_TRUE(is_prime(18446744073709551557ULL)); // largest 64-bit prime
    EXPECT_FALSE(is_prime(3215031751ULL));          // strong pseudoprime to 2, 3, 5, 7
    EXPECT_TRUE(is_prime((1ULL << 61) - 1));
    EXPECT_FALSE(is_prime(4759123141ULL * 3));
}

TEST(PrimeModulus, RejectsCompositesAndTwo)
{
    try {
        PrimeModulus p(9);
        FAIL() << "9 accepted";
    } catch (const InvalidInput& e) {
        EXPECT_STREQ(e.what(), "9 is not prime");
    }
    EXPECT_THROW(PrimeModulus(2), InvalidInput);
    EXPECT_THROW(PrimeModulus(1), InvalidInput);
    EXPECT_EQ(PrimeModulus(11).value(), 11U);
    EXPECT_EQ(PrimeModulus(11).reduce(-1), 10U);
}

TEST(ResiduePair, Validation)
{
    const PrimeModulus p(7);
    EXPECT_NO_THROW(ResiduePair(1, 2, p));
    EXPECT_THROW(ResiduePair(2, 2, p), InvalidInput);
    EXPECT_THROW(ResiduePair(0, 2, p), InvalidInput);
    EXPECT_THROW(ResiduePair(1, 7, p), InvalidInput);
    EXPECT_EQ(all_pairs(p).size(), 30U);
}

TEST(NextPrime, Examples)
{
    EXPECT_EQ(next_prime(10), 11U);
    EXPECT_EQ(next_prime(8), 11U);
    EXPECT_EQ(next_prime(2), 3U);
    EXPECT_EQ(next_prime(0), 2U);
    EXPECT_THROW(next_prime(18446744073709551557ULL), std::overflow_error);
}

TEST(GapStep, Examples)
{
    EXPECT_EQ(gap_step(10), 0U);
    EXPECT_EQ(gap_step(8), 2U);
    EXPECT_EQ(gap_step(1), 0U);
    EXPECT_EQ(gap_step(0), 1U);
}

TEST(GapStep, BelowArgumentUpToOneMillion)
{
    // walk downwards so the next prime above n is always known
    std::uint64_t upper = next_prime(1'000'000);
    for (std::uint64_t n = 1'000'000; n > 1; --n) {
        if (oracle::trial_division_prime(n + 1)) {
            upper = n + 1;
        }
        const std::uint64_t f = upper - n - 1;
        ASSERT_LT(f, n) << n;
        if (n % 9973 == 0 || n < 1000) {
            ASSERT_EQ(gap_step(n), f) << n;
        }
    }
}

TEST(IterationCount, Examples)
{
    EXPECT_EQ(iteration_count(0), 0U);
    EXPECT_EQ(iteration_count(1), 0U);
    EXPECT_EQ(iteration_count(10), 1U);
    EXPECT_EQ(iteration_count(8), 2U);
}

TEST(IterationCount, TableMatchesIterationAndStaysSmall)
{
    const std::uint64_t n_max = 1'000'000;
    const std::vector<std::uint8_t> r = iteration_count_table(n_max);
    ASSERT_EQ(r.size(), n_max + 1);
    for (std::uint64_t n = 0; n <= n_max; n += 97) {
        ASSERT_EQ(r[n], iteration_count(n)) << n;
    }
    EXPECT_LE(*std::max_element(r.begin(), r.end()), 8);
}

TEST(IsGenerator, Examples)
{
    EXPECT_TRUE(is_generator(2, PrimeModulus(3)));
    EXPECT_TRUE(is_generator(2, PrimeModulus(11)));
    EXPECT_FALSE(is_generator(1, PrimeModulus(5)));
    EXPECT_FALSE(is_generator(3, PrimeModulus(11)));
    EXPECT_THROW(is_generator(22, PrimeModulus(11)), InvalidInput);
}

TEST(IsGenerator, MatchesBruteForceOrder)
{
    for (std::uint64_t q = 3; q < 200; ++q) {
        if (!oracle::trial_division_prime(q)) {
            continue;
        }
        const PrimeModulus p(q);
        for (std::int64_t b = 1; b < static_cast<std::int64_t>(q); ++b) {
            ASSERT_EQ(is_generator(b, p), oracle::multiplicative_order(static_cast<std::uint64_t>(b), q) == q - 1)
                << b << " mod " << q;
            ASSERT_EQ(is_generator(b - static_cast<std::int64_t>(q), p), is_generator(b, p));
        }
    }
}

TEST(Binomial, Examples)
{
    EXPECT_EQ(binomial(4, 2), 6);
    EXPECT_EQ(binomial(5, -1), 0);
    EXPECT_EQ(binomial(10, 5), 252);
    EXPECT_EQ(binomial(3, 4), 0);
    EXPECT_EQ(binomial(-1, 0), 0);
}

TEST(Binomial, PascalRecurrenceTo200)
{
    const auto rows = oracle::pascal_rows(200);
    for (std::int64_t n = 1; n <= 200; ++n) {
        for (std::int64_t k = 0; k <= n; ++k) {
            ASSERT_EQ(binomial(n, k), rows[n][k]) << n << ' ' << k;
            if (k > 0 && k < n) {
                ASSERT_EQ(binomial(n, k), binomial(n - 1, k) + binomial(n - 1, k - 1));
            }
        }
    }
}

TEST(Lucas, Examples)
{
    EXPECT_EQ(lucas_number(0), 2);
    EXPECT_EQ(lucas_number(1), 1);
    EXPECT_EQ(lucas_number(11), 199);
    EXPECT_EQ(lucas_number(53), mpz_class("119218851371"));
}

TEST(Lucas, AgreesWithGmpAndIsOneModPrime)
{
    for (unsigned long n = 0; n <= 300; ++n) {
        ASSERT_EQ(lucas_number(n), oracle::lucas(n)) << n;
    }
    for (std::uint64_t q = 3; q <= 200; ++q) {
        if (oracle::trial_division_prime(q)) {
            ASSERT_EQ(mod_floor(lucas_number(q), q), 1) << q;
        }
    }
}

TEST(Helpers, ModFloorAndSign)
{
    EXPECT_EQ(mod_floor(-1, 7), 6);
    EXPECT_EQ(mod_floor(14, 7), 0);
    EXPECT_EQ(sign_pow(3), -1);
    EXPECT_EQ(sign_pow(0), 1);
    EXPECT_EQ(factorial(5), 120);
    EXPECT_EQ(to_decimal(mpz_class(-42)), "-42");
}
