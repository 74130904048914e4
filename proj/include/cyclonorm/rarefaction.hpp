#pragma once

// Partial sums and p-rarefied sums of strongly b-multiplicative sequences,
// and the growth exponents they are compared against.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cyclonorm/core_arith.hpp"
#include "cyclonorm/sequence.hpp"

namespace cyclonorm {

/// Raised when an empirical fit has too few nonzero checkpoints.
class InsufficientData : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// t_n. term(seq, 0) = t_0.
int term(const SequenceSpec& seq, std::uint64_t n);

/// sum_{n < N} t_n by iterating term().
std::int64_t partial_sum_direct(const SequenceSpec& seq, std::uint64_t n, std::uint64_t budget = kDefaultBudget);

/// Running sums psi(0), psi(1), ..., psi(n_max) by iterating term().
std::vector<std::int64_t> prefix_sums_direct(const SequenceSpec& seq, std::uint64_t n_max,
                                             std::uint64_t budget = kDefaultBudget);

/// sum_{n < N} t_n from the base-b digits of N in O(b + log N):
/// psi(N) = sum_i (prod_{k>i} t_{c_k}) psi(c_i) psi(b)^i. Requires N < 2^62.
std::int64_t partial_sum_digits(const SequenceSpec& seq, std::uint64_t n);

/// sum of t_n over multiples of p below N, by a single incremental digit scan.
std::int64_t rarefied_sum(const SequenceSpec& seq, PrimeModulus p, std::uint64_t n,
                          std::uint64_t budget = kDefaultBudget);

struct Checkpoint {
    std::uint64_t n = 0;
    std::int64_t sum = 0;
};

/// Rarefied sums at N = b, b^2, ... <= n_max, from one scan.
std::vector<Checkpoint> rarefied_checkpoints(const SequenceSpec& seq, PrimeModulus p, std::uint64_t n_max,
                                             std::uint64_t budget = kDefaultBudget);

struct ExponentVerdict {
    bool generator = false;       // b mod p generates F_p^x
    bool condition_holds = false; // |xi| > max((sum t_c)^(p-1), 1), exact
    BigInt xi;
    BigInt dominance_bound;
    /// log(xi) / ((p-1) log b) whenever xi > 1, hypotheses aside.
    std::optional<double> candidate_exponent;
    /// candidate_exponent when both hypotheses hold.
    std::optional<double> exponent;
};

ExponentVerdict exponent_verdict(const SequenceSpec& seq, PrimeModulus p);

std::optional<double> theoretical_exponent(const SequenceSpec& seq, PrimeModulus p);

struct EmpiricalFit {
    double slope = 0.0;
    std::size_t usable = 0;
    std::size_t discarded = 0;
    std::vector<Checkpoint> checkpoints;
};

/// Least-squares slope of log|S(N)| against log N over N = b^k <= n_max,
/// skipping checkpoints with S(N) = 0. Throws InsufficientData below 3 points.
EmpiricalFit empirical_exponent(const SequenceSpec& seq, PrimeModulus p, std::uint64_t n_max,
                                std::uint64_t budget = kDefaultBudget);

struct RarefactionReport {
    SequenceSpec seq;
    PrimeModulus p;
    std::uint64_t n_max;
    ExponentVerdict verdict;
    std::optional<EmpiricalFit> fit;
    std::string fit_error; // why fit is absent
    std::vector<Checkpoint> checkpoints;
};

RarefactionReport rarefaction_report(const SequenceSpec& seq, PrimeModulus p, std::uint64_t n_max,
                                     std::uint64_t budget = kDefaultBudget);

} // namespace cyclonorm
