#include "cyclonorm/trivariate.hpp"

#include <algorithm>
#include <vector>

namespace cyclonorm {

namespace {

std::vector<BigInt> powers(const BigInt& base, std::uint64_t max_exponent)
{
    std::vector<BigInt> out(max_exponent + 1);
    out[0] = 1;
    for (std::uint64_t k = 1; k <= max_exponent; ++k) {
        out[k] = out[k - 1] * base;
    }
    return out;
}

} // namespace

BigInt evaluate_terms(std::span<const Term> terms, const BigInt& y0, const BigInt& y1, const BigInt& y2)
{
    std::uint64_t m0 = 0;
    std::uint64_t m1 = 0;
    std::uint64_t m2 = 0;
    for (const Term& t : terms) {
        m0 = std::max(m0, t.e0);
        m1 = std::max(m1, t.e1);
        m2 = std::max(m2, t.e2);
    }
    const auto p0 = powers(y0, m0);
    const auto p1 = powers(y1, m1);
    const auto p2 = powers(y2, m2);
    BigInt total = 0;
    BigInt monomial;
    for (const Term& t : terms) {
        if (t.coefficient == 0) {
            continue;
        }
        monomial = t.coefficient * p0[t.e0];
        monomial *= p1[t.e1];
        monomial *= p2[t.e2];
        total += monomial;
    }
    return total;
}

} // namespace cyclonorm
