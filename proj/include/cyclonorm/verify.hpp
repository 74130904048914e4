#pragma once

// Named invariant suites behind `cyclonorm verify`.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cyclonorm/core_arith.hpp"

namespace cyclonorm {

struct SuiteResult {
    std::string suite;
    std::uint64_t p_max = 0;
    std::uint64_t moduli = 0; // primes (or admissible p) visited
    std::uint64_t checks = 0;
    std::uint64_t failures = 0;
    std::vector<std::string> failure_notes; // first few only

    [[nodiscard]] bool passed() const noexcept { return failures == 0; }
};

/// lucas, pascal, oracle, dominoes, binomial, symmetric.
const std::vector<std::string>& suite_names();

/// Largest p_max each suite accepts.
std::uint64_t suite_limit(std::string_view suite);

/// Throws InvalidInput for an unknown suite or p_max above its limit, and
/// BudgetExceeded when an enumeration outgrows the budget.
SuiteResult run_suite(std::string_view suite, std::uint64_t p_max, std::uint64_t budget = kDefaultBudget);

} // namespace cyclonorm
