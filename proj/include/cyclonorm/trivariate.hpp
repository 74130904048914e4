#pragma once

#include <cstdint>
#include <span>

#include "cyclonorm/core_arith.hpp"

namespace cyclonorm {

/// coefficient * Y0^e0 * Y1^e1 * Y2^e2
struct Term {
    std::uint64_t e0 = 0;
    std::uint64_t e1 = 0;
    std::uint64_t e2 = 0;
    BigInt coefficient;
};

/// Exact value of a sum of terms at an integer point.
BigInt evaluate_terms(std::span<const Term> terms, const BigInt& y0, const BigInt& y1, const BigInt& y2);

} // namespace cyclonorm
