#pragma once

// Exhaustive reference counts. Everything here is exponential in its size
// parameters and exists to pin down the fast triangle algorithm.

#include <cstdint>
#include <span>
#include <vector>

#include "cyclonorm/core_arith.hpp"

namespace cyclonorm {

/// Parameters of a disjoint-subset-pair count: sizes (n1, n2) and the target
/// residue of i1*sum(X1) + i2*sum(X2).
struct CountQuery {
    CountQuery(PrimeModulus p, ResiduePair pair, std::uint64_t n1, std::uint64_t n2, std::uint64_t target);

    PrimeModulus p;
    ResiduePair pair;
    std::uint64_t n1;
    std::uint64_t n2;
    std::uint64_t target;
};

/// Closed-form number of sequences in (F_p^x)^n whose weighted sum is 0
/// (target_is_zero) or a fixed nonzero residue. Independent of the weights.
BigInt count_sequences_closed(std::uint64_t n, PrimeModulus p, bool target_is_zero);

BigInt count_sequences_bruteforce(std::span<const std::uint64_t> coeffs, std::uint64_t target, PrimeModulus p,
                                  std::uint64_t budget = kDefaultBudget);

/// Entry r counts disjoint pairs (X1, X2) of F_p^x with |X1| = n1, |X2| = n2 and
/// i1*sum(X1) + i2*sum(X2) = r. One enumeration serves all p targets.
std::vector<BigInt> subset_pair_histogram(PrimeModulus p, ResiduePair pair, std::uint64_t n1, std::uint64_t n2,
                                          std::uint64_t budget = kDefaultBudget);

BigInt count_subset_pairs(const CountQuery& q, std::uint64_t budget = kDefaultBudget);

/// Ordered version of count_subset_pairs: injective sequences of length n1 + n2.
BigInt count_injective_sequences(const CountQuery& q, std::uint64_t budget = kDefaultBudget);

/// A_0 - A_1 by enumeration; the brute-force value of the coefficient at (n1, n2).
BigInt delta_oracle(PrimeModulus p, ResiduePair pair, std::uint64_t n1, std::uint64_t n2,
                    std::uint64_t budget = kDefaultBudget);

/// Whether some nonempty sub-multiset of {i1 x n1, i2 x n2} sums to 0 mod p.
bool has_hindrance(PrimeModulus p, ResiduePair pair, std::uint64_t n1, std::uint64_t n2);

inline constexpr std::uint64_t kMaxHindranceIndices = 12;

/// Force at (n1, n2) from the hindrance expansion: the sum over partitions of
/// the index set {1..n1+n2} into hindrance blocks X_1..X_l of
/// (|X_1|-1)!...(|X_l|-1)! (-1)^(n-l) p^l, divided by n1! n2!.
BigInt force_oracle(PrimeModulus p, ResiduePair pair, std::uint64_t n1, std::uint64_t n2,
                    std::uint64_t max_indices = kMaxHindranceIndices);

/// The coefficient at (n1, n2) from the same expansion, summed over all
/// collections of pairwise-disjoint hindrances (not necessarily covering),
/// each weighted by the factorial of the uncovered count.
BigInt delta_via_hindrance_collections(PrimeModulus p, ResiduePair pair, std::uint64_t n1, std::uint64_t n2,
                                       std::uint64_t max_indices = kMaxHindranceIndices);

inline constexpr std::uint64_t kMaxDominoCircle = 30;

/// Placements of k pairwise-disjoint dominoes on a cycle of the given length.
BigInt domino_placements_bruteforce(std::uint64_t circle_length, std::uint64_t k);

/// C(L-k, k) + C(L-k-1, k-1), with 1 for k = 0.
BigInt domino_placements_formula(std::uint64_t circle_length, std::uint64_t k);

} // namespace cyclonorm
