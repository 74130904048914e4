#include <gtest/gtest.h>

#include <complex>

#include "cyclonorm/norm_poly.hpp"
#include "support/oracles.hpp"

using namespace cyclonorm;

namespace {

std::vector<std::uint64_t> primes_between(std::uint64_t lo, std::uint64_t hi)
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t n = lo; n <= hi; ++n) {
        if (oracle::trial_division_prime(n)) {
            out.push_back(n);
        }
    }
    return out;
}

NormPolynomial poly_for(std::uint64_t q, std::uint64_t i1, std::uint64_t i2)
{
    const PrimeModulus p(q);
    return assemble(build_triangle(p, ResiduePair(i1, i2, p)));
}

// prod_{j=1}^{p-1} sum_c t_c z^(c j), straight from the definition of the norm.
double norm_by_conjugates(const std::vector<int>& digits, std::uint64_t p)
{
    std::complex<double> product = 1.0;
    for (std::uint64_t j = 1; j < p; ++j) {
        std::complex<double> s = 0.0;
        for (std::size_t c = 0; c < digits.size(); ++c) {
            const double angle = 2.0 * std::numbers::pi * static_cast<double>(c * j % p) / static_cast<double>(p);
            s += static_cast<double>(digits[c]) * std::polar(1.0, angle);
        }
        product *= s;
    }
    return product.real();
}

} // namespace

TEST(Assemble, Examples)
{
    const NormPolynomial p5 = poly_for(5, 1, 2);
    EXPECT_EQ(p5.terms().size(), 15U);
    const PrimeModulus m5(5);
    EXPECT_EQ(p5.coefficient(0, 2, 2), build_triangle(m5, ResiduePair(1, 2, m5)).at(2, 2));
    EXPECT_EQ(poly_for(11, 1, 2).coefficient(6, 2, 2), 6);
    EXPECT_EQ(poly_for(11, 1, 3).coefficient(2, 3, 5), -10);
    EXPECT_EQ(poly_for(11, 1, 3).coefficient(2, 3, 4), 0); // wrong degree
    for (const Term& t : p5.terms()) {
        EXPECT_EQ(t.e0 + t.e1 + t.e2, 4U);
    }
}

TEST(NormPolynomial, RejectsWrongDegree)
{
    const PrimeModulus p(5);
    std::vector<Term> terms{{4, 0, 0, 1}, {3, 0, 0, 1}};
    EXPECT_THROW(NormPolynomial(p, ResiduePair(1, 2, p), terms), InvalidInput);
}

TEST(Evaluate, Examples)
{
    const NormPolynomial poly = poly_for(11, 1, 2);
    EXPECT_EQ(evaluate(poly, 1, 1, -1), 199);
    EXPECT_EQ(evaluate(poly, 1, -1, 0), 11);
    EXPECT_EQ(evaluate(poly, 1, 0, 0), 1);
}

TEST(Evaluate, LucasIdentity)
{
    const auto primes = primes_between(5, 53);
    EXPECT_EQ(primes.size(), 14U);
    for (std::uint64_t q : primes) {
        EXPECT_EQ(evaluate(poly_for(q, 1, 2), 1, 1, -1), oracle::lucas(q)) << q;
    }
    EXPECT_EQ(evaluate(poly_for(53, 1, 2), 1, 1, -1), mpz_class("119218851371"));
}

TEST(Evaluate, UniformizerForEveryPair)
{
    for (std::uint64_t q : primes_between(3, 53)) {
        const PrimeModulus p(q);
        for (const ResiduePair& pair : all_pairs(p)) {
            ASSERT_EQ(evaluate(assemble(build_triangle(p, pair)), 1, -1, 0), q);
        }
    }
}

TEST(Evaluate, UnitIdentity)
{
    for (std::uint64_t q : primes_between(5, 31)) {
        EXPECT_EQ(evaluate(poly_for(q, 1, 2), 1, -1, 1), 1) << q;
    }
    EXPECT_EQ(evaluate(poly_for(3, 1, 2), 1, -1, 1), 4); // 1 - z + z^2 = -2z when p = 3
}

TEST(Evaluate, Homogeneous)
{
    const NormPolynomial poly = poly_for(13, 2, 5);
    const BigInt base = evaluate(poly, 2, -3, 7);
    BigInt scale;
    mpz_pow_ui(scale.get_mpz_t(), BigInt(-2).get_mpz_t(), 12);
    EXPECT_EQ(evaluate(poly, -4, 6, -14), scale * base);
}

TEST(Evaluate, GaloisInvariance)
{
    for (std::uint64_t q : primes_between(3, 23)) {
        const PrimeModulus p(q);
        for (const ResiduePair& pair : all_pairs(p)) {
            const BigInt ref = evaluate(assemble(build_triangle(p, pair)), 1, 1, 1);
            for (std::uint64_t c = 2; c < q; ++c) {
                const ResiduePair conj(pair.first() * c % q, pair.second() * c % q, p);
                ASSERT_EQ(evaluate(assemble(build_triangle(p, conj)), 1, 1, 1), ref);
            }
        }
    }
}

TEST(NumericNorm, Examples)
{
    const PrimeModulus p11(11);
    const PrimeModulus p7(7);
    const PrimeModulus p5(5);
    EXPECT_NEAR(numeric_norm(p11, ResiduePair(1, 2, p11), 1, 1, -1), 199.0, 199e-6);
    EXPECT_NEAR(numeric_norm(p7, ResiduePair(1, 2, p7), 1, -1, 0), 7.0, 7e-6);
    const double exact = evaluate(poly_for(5, 2, 3), 1, 1, 1).get_d();
    EXPECT_NEAR(numeric_norm(p5, ResiduePair(2, 3, p5), 1, 1, 1), exact, 1e-6 * std::max(1.0, std::abs(exact)));
    EXPECT_THROW(numeric_norm(PrimeModulus(211), ResiduePair(1, 2, PrimeModulus(211)), 1, 1, 1), InvalidInput);
}

TEST(NumericNorm, AgreesWithExactOnUnitCube)
{
    for (std::uint64_t q : primes_between(3, 31)) {
        const PrimeModulus p(q);
        for (const ResiduePair& pair : all_pairs(p)) {
            const NormPolynomial poly = assemble(build_triangle(p, pair));
            for (int y0 = -1; y0 <= 1; ++y0) {
                for (int y1 = -1; y1 <= 1; ++y1) {
                    for (int y2 = -1; y2 <= 1; ++y2) {
                        const double exact = evaluate(poly, y0, y1, y2).get_d();
                        const double approx = numeric_norm(p, pair, y0, y1, y2);
                        ASSERT_LE(std::abs(approx - exact) / std::max(1.0, std::abs(exact)), 1e-6)
                            << q << " (" << pair.first() << "," << pair.second() << ") at " << y0 << "," << y1 << ","
                            << y2;
                    }
                }
            }
        }
    }
}

TEST(XiNorm, Examples)
{
    EXPECT_EQ(xi_norm(SequenceSpec::thue_morse(), PrimeModulus(5)), 5);
    EXPECT_EQ(xi_norm(SequenceSpec(3, {1, 1, -1}), PrimeModulus(11)), 199);
    EXPECT_EQ(xi_norm(SequenceSpec(3, {1, 0, 0}), PrimeModulus(7)), 1);
    EXPECT_EQ(xi_norm(SequenceSpec(3, {0, 0, 0}), PrimeModulus(7)), 0);
}

TEST(XiNorm, UnsupportedShapes)
{
    EXPECT_THROW(xi_norm(SequenceSpec(4, {1, 1, 1, -1}), PrimeModulus(7)), UnsupportedSequence);
    // position 5 is 0 mod 5
    EXPECT_THROW(xi_norm(SequenceSpec(6, {1, 0, 0, 0, 0, 1}), PrimeModulus(5)), UnsupportedSequence);
}

TEST(XiNorm, CollidingPositionsMerge)
{
    // 1 + z + z^4 with p = 3 is 1 + 2z: norm (1 + 2z)(1 + 2z^2) = 3
    EXPECT_EQ(xi_norm(SequenceSpec(5, {1, 1, 0, 0, 1}), PrimeModulus(3)), 3);
    // 1 + z - z^4 with p = 3 is 1: norm 1
    EXPECT_EQ(xi_norm(SequenceSpec(5, {1, 1, 0, 0, -1}), PrimeModulus(3)), 1);
}

TEST(XiNorm, MatchesProductOfConjugates)
{
    for (std::uint64_t b = 2; b <= 6; ++b) {
        for (std::uint64_t q : primes_between(3, 23)) {
            // every two-position tail with values +-1
            for (std::uint64_t c1 = 1; c1 < b; ++c1) {
                for (std::uint64_t c2 = c1; c2 < b; ++c2) {
                    for (int v1 : {-1, 1}) {
                        for (int v2 : {-1, 1}) {
                            std::vector<int> digits(b, 0);
                            digits[0] = 1;
                            digits[c1] = v1;
                            digits[c2] = (c2 == c1) ? v1 : v2;
                            if (c1 % q == 0 || c2 % q == 0) {
                                continue;
                            }
                            const SequenceSpec seq(b, digits);
                            const double exact = xi_norm(seq, PrimeModulus(q)).get_d();
                            const double approx = norm_by_conjugates(digits, q);
                            ASSERT_NEAR(exact, approx, 1e-6 * std::max(1.0, std::abs(exact)))
                                << "b=" << b << " p=" << q << " c=" << c1 << "," << c2;
                        }
                    }
                }
            }
        }
    }
}
