#include "cyclonorm/core_arith.hpp"

#include <array>
#include <limits>

namespace cyclonorm {

namespace {

constexpr std::uint64_t kLargestPrime64 = 18446744073709551557ULL;

// Witness set {2, ..., 37} is exact below 3.3e24.
constexpr std::array<std::uint64_t, 12> kWitnesses = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

bool passes_witness(std::uint64_t n, std::uint64_t d, unsigned s, std::uint64_t a)
{
    std::uint64_t x = pow_mod(a % n, d, n);
    if (x == 1 || x == n - 1) {
        return true;
    }
    for (unsigned r = 1; r < s; ++r) {
        x = mul_mod(x, x, n);
        if (x == n - 1) {
            return true;
        }
    }
    return false;
}

std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n)
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t q = 2; q * q <= n; ++q) {
        if (n % q == 0) {
            out.push_back(q);
            while (n % q == 0) {
                n /= q;
            }
        }
    }
    if (n > 1) {
        out.push_back(n);
    }
    return out;
}

} // namespace

PrimeModulus::PrimeModulus(std::uint64_t p)
    : p_(p)
{
    if (!is_prime(p)) {
        throw InvalidInput(std::to_string(p) + " is not prime");
    }
    if (p == 2) {
        throw InvalidInput("modulus must be an odd prime, got 2");
    }
}

std::uint64_t PrimeModulus::reduce(std::int64_t x) const noexcept
{
    const auto m = static_cast<std::int64_t>(p_);
    std::int64_t r = x % m;
    return static_cast<std::uint64_t>(r < 0 ? r + m : r);
}

ResiduePair::ResiduePair(std::uint64_t i1, std::uint64_t i2, PrimeModulus p)
    : i1_(i1)
    , i2_(i2)
{
    const auto check = [&](std::uint64_t i, const char* name) {
        if (i < 1 || i >= p.value()) {
            throw InvalidInput(std::string(name) + "=" + std::to_string(i) + " is outside [1, "
                               + std::to_string(p.value() - 1) + "]");
        }
    };
    check(i1, "i1");
    check(i2, "i2");
    if (i1 == i2) {
        throw InvalidInput("i1 and i2 must differ (both are " + std::to_string(i1) + ")");
    }
}

std::vector<ResiduePair> all_pairs(PrimeModulus p)
{
    std::vector<ResiduePair> out;
    for (std::uint64_t a = 1; a < p.value(); ++a) {
        for (std::uint64_t b = 1; b < p.value(); ++b) {
            if (a != b) {
                out.emplace_back(a, b, p);
            }
        }
    }
    return out;
}

__extension__ using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m)
{
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m)
{
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1U) {
            result = mul_mod(result, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1U;
    }
    return result;
}

bool is_prime(std::uint64_t n)
{
    if (n < 2) {
        return false;
    }
    for (std::uint64_t q : kWitnesses) {
        if (n % q == 0) {
            return n == q;
        }
    }
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1U) == 0) {
        d >>= 1U;
        ++s;
    }
    for (std::uint64_t a : kWitnesses) {
        if (!passes_witness(n, d, s, a)) {
            return false;
        }
    }
    return true;
}

std::uint64_t next_prime(std::uint64_t n)
{
    if (n >= kLargestPrime64) {
        throw std::overflow_error("no 64-bit prime exceeds " + std::to_string(n));
    }
    if (n < 2) {
        return 2;
    }
    std::uint64_t c = (n % 2 == 0) ? n + 1 : n + 2;
    while (!is_prime(c)) {
        c += 2;
    }
    return c;
}

std::uint64_t gap_step(std::uint64_t n)
{
    return next_prime(n) - n - 1;
}

unsigned iteration_count(std::uint64_t n)
{
    unsigned k = 0;
    while (n > 1) {
        n = gap_step(n);
        ++k;
    }
    return k;
}

std::vector<std::uint8_t> iteration_count_table(std::uint64_t n_max)
{
    // Sieve far enough to contain next_prime(n_max); Bertrand bounds it by 2 n_max.
    const std::uint64_t limit = 2 * n_max + 3;
    std::vector<bool> composite(limit + 1, false);
    composite[0] = composite[1] = true;
    for (std::uint64_t i = 2; i * i <= limit; ++i) {
        if (!composite[i]) {
            for (std::uint64_t j = i * i; j <= limit; j += i) {
                composite[j] = true;
            }
        }
    }
    std::vector<std::uint8_t> table(n_max + 1, 0);
    std::uint64_t upcoming = 0; // next prime strictly above n, maintained while n decreases
    for (std::uint64_t c = n_max + 1; c <= limit; ++c) {
        if (!composite[c]) {
            upcoming = c;
            break;
        }
    }
    std::vector<std::uint64_t> step(n_max + 1);
    for (std::uint64_t n = n_max + 1; n-- > 0;) {
        step[n] = upcoming - n - 1;
        if (!composite[n]) {
            upcoming = n;
        }
    }
    for (std::uint64_t n = 2; n <= n_max; ++n) {
        table[n] = static_cast<std::uint8_t>(1 + table[step[n]]);
    }
    return table;
}

bool is_generator(std::int64_t b, PrimeModulus p)
{
    const std::uint64_t r = p.reduce(b);
    if (r == 0) {
        throw InvalidInput(std::to_string(b) + " is divisible by " + std::to_string(p.value()));
    }
    const std::uint64_t order = p.value() - 1;
    for (std::uint64_t q : distinct_prime_factors(order)) {
        if (pow_mod(r, order / q, p.value()) == 1) {
            return false;
        }
    }
    return true;
}

BigInt binomial(std::int64_t n, std::int64_t k)
{
    if (n < 0 || k < 0 || k > n) {
        return 0;
    }
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

BigInt factorial(std::uint64_t n)
{
    BigInt out;
    mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
    return out;
}

BigInt lucas_number(std::uint64_t n)
{
    BigInt prev = 2; // L_0
    BigInt cur = 1;  // L_1
    if (n == 0) {
        return prev;
    }
    for (std::uint64_t i = 1; i < n; ++i) {
        prev += cur;
        swap(prev, cur);
    }
    return cur;
}

BigInt mod_floor(const BigInt& x, std::uint64_t m)
{
    BigInt r;
    mpz_fdiv_r_ui(r.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(m));
    return r;
}

std::string to_decimal(const BigInt& x)
{
    return x.get_str(10);
}

} // namespace cyclonorm
