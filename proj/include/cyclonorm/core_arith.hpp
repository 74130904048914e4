#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace cyclonorm {

using BigInt = mpz_class;

/// Raised for arguments outside an operation's domain (non-prime modulus,
/// colliding residues, malformed digit specs...). The CLI maps it to exit 2.
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when an exhaustive enumeration would exceed its declared budget.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

/// An odd prime p >= 3. Construction validates.
class PrimeModulus {
public:
    explicit PrimeModulus(std::uint64_t p);

    [[nodiscard]] std::uint64_t value() const noexcept { return p_; }
    [[nodiscard]] std::uint64_t reduce(std::int64_t x) const noexcept;

    friend bool operator==(PrimeModulus, PrimeModulus) = default;

private:
    std::uint64_t p_;
};

/// Two distinct residues in [1, p-1].
class ResiduePair {
public:
    ResiduePair(std::uint64_t i1, std::uint64_t i2, PrimeModulus p);

    [[nodiscard]] std::uint64_t first() const noexcept { return i1_; }
    [[nodiscard]] std::uint64_t second() const noexcept { return i2_; }

    friend bool operator==(ResiduePair, ResiduePair) = default;

private:
    std::uint64_t i1_;
    std::uint64_t i2_;
};

/// Every ordered pair (i1, i2) with i1 != i2 in [1, p-1].
std::vector<ResiduePair> all_pairs(PrimeModulus p);

/// Deterministic Miller-Rabin; exact on the whole uint64 range.
bool is_prime(std::uint64_t n);

/// Smallest prime > n. Throws std::overflow_error past the last 64-bit prime.
std::uint64_t next_prime(std::uint64_t n);

/// next_prime(n) - n - 1. Below n whenever n > 1 (Bertrand); gap_step(0) = 1.
std::uint64_t gap_step(std::uint64_t n);

/// Number of gap_step applications needed to land in {0, 1}.
unsigned iteration_count(std::uint64_t n);

/// R(n) for every n <= n_max, via a prime sieve and R(n) = 1 + R(gap_step(n)).
std::vector<std::uint8_t> iteration_count_table(std::uint64_t n_max);

/// Multiplicative order of b mod p equals p - 1.
bool is_generator(std::int64_t b, PrimeModulus p);

BigInt binomial(std::int64_t n, std::int64_t k);
BigInt factorial(std::uint64_t n);
BigInt lucas_number(std::uint64_t n);

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// Canonical residue of x modulo m, in [0, m).
BigInt mod_floor(const BigInt& x, std::uint64_t m);

inline int sign_pow(std::int64_t exponent) { return (exponent % 2 == 0) ? 1 : -1; }

std::string to_decimal(const BigInt& x);

} // namespace cyclonorm
