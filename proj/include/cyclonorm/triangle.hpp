#pragma once

// The finite Pascal triangle of a residue pair: the coefficients of
// Y0^(p-1-n1-n2) Y1^n1 Y2^n2 in prod_j (Y0 + z^(i1 j) Y1 + z^(i2 j) Y2),
// computed in O(p^2) big-integer additions.

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "cyclonorm/core_arith.hpp"
#include "cyclonorm/trivariate.hpp"

namespace cyclonorm {

struct GridPoint {
    std::uint64_t n1 = 0;
    std::uint64_t n2 = 0;

    friend auto operator<=>(const GridPoint&, const GridPoint&) = default;
};

/// Force value at a grid point; nonzero only at sources.
struct SourceForce {
    std::uint64_t n1 = 0;
    std::uint64_t n2 = 0;
    BigInt value;
};

/// i1*n1 + i2*n2 = 0 mod p.
bool is_source(PrimeModulus p, ResiduePair pair, std::uint64_t n1, std::uint64_t n2);

/// Dense, immutable triangle. Rows are n = n1 + n2 in [0, p-1]; row n stores
/// its n+1 entries ordered by n2 ascending (n1 descending), the left-to-right
/// order of the printed figures.
class Triangle {
public:
    Triangle(PrimeModulus p, ResiduePair pair, std::vector<BigInt> coeffs);

    [[nodiscard]] PrimeModulus modulus() const noexcept { return p_; }
    [[nodiscard]] ResiduePair pair() const noexcept { return pair_; }
    [[nodiscard]] std::uint64_t rows() const noexcept { return p_.value(); }

    /// Coefficient at (n1, n2); zero when either index is negative or n1 + n2 >= p.
    [[nodiscard]] const BigInt& at(std::int64_t n1, std::int64_t n2) const;
    [[nodiscard]] bool source(std::uint64_t n1, std::uint64_t n2) const;
    [[nodiscard]] std::span<const BigInt> row(std::uint64_t n) const;

    [[nodiscard]] static std::size_t index(std::uint64_t n1, std::uint64_t n2) noexcept
    {
        const std::uint64_t n = n1 + n2;
        return static_cast<std::size_t>(n * (n + 1) / 2 + n2);
    }

private:
    PrimeModulus p_;
    ResiduePair pair_;
    std::vector<BigInt> coeffs_;
    std::vector<bool> sources_;
};

/// Receives each finished row (entries by n2 ascending). Rows arrive from
/// n = p-1 down to n = 0; the span is only valid during the call.
using RowVisitor = std::function<void(std::uint64_t row, std::span<const BigInt> entries)>;

/// Runs the bottom-up sweep keeping only two rows alive, so memory stays O(p)
/// big integers. This is the path for primes where the dense grid does not fit.
void sweep_triangle(PrimeModulus p, ResiduePair pair, const RowVisitor& visit);

Triangle build_triangle(PrimeModulus p, ResiduePair pair);

/// Three-term sum at (n1, n2): coefficient plus its two upper neighbours.
BigInt force(const Triangle& t, std::uint64_t n1, std::uint64_t n2);

/// Forces at every source of t, in source_positions order.
std::vector<SourceForce> source_forces(const Triangle& t);

/// Rebuilds the coefficient at (n1, n2) from the forces of the sources it
/// dominates. Throws InvalidInput if a dominated source is missing from the
/// list or a listed point is not a source.
BigInt delta_from_sources(PrimeModulus p, ResiduePair pair, std::uint64_t n1, std::uint64_t n2,
                          std::span<const SourceForce> forces);

/// Closed form for the pair (1, 2), valid on the whole triangle.
BigInt closed_delta_12(PrimeModulus p, std::uint64_t n1, std::uint64_t n2);

/// Closed form for the pair (1, 3) where one exists: n1+3n2 <= p-1,
/// n1+3n2 >= 2p-2, n1+3n2 = 2p-4, and the upper source line n1+3n2 = p.
/// Empty in the remaining middle band.
std::optional<BigInt> closed_delta_13(PrimeModulus p, std::uint64_t n1, std::uint64_t n2);

/// All sources with n1 + n2 <= p-1, origin included, ordered by row then n2.
std::vector<GridPoint> source_positions(PrimeModulus p, ResiduePair pair);

/// Sources on the line i1*n1 + i2*n2 = multiple * p (representatives in
/// [1, p-1], exact integer equality), restricted to the triangle.
std::vector<GridPoint> sources_on_line(PrimeModulus p, ResiduePair pair, std::uint64_t multiple);

/// Force on the upper (1,3) source line n1 + 3n2 = p: (n1+n2-1)! p / (n1! n2!).
BigInt upper_line_force_13(PrimeModulus p, std::uint64_t n1, std::uint64_t n2);

/// Force on the lower (1,3) source line n1 + 3n2 = 2p:
/// (-1)^n2 (p-n2-1)! p / (n1! (p-n1-n2)!).
BigInt lower_line_force_13(PrimeModulus p, std::uint64_t n1, std::uint64_t n2);

/// Force at the (1,2) source (p - 2 n2, n2): signed circular domino count.
BigInt source_force_12(PrimeModulus p, std::uint64_t n2);

/// Elementary symmetric polynomial of degree p-1-delta of the linear forms
/// Y0 + z^(i1 j) Y1 + z^(i2 j) Y2. Terms carry exponents (n0 - delta, n1, n2).
std::vector<Term> symmetric_poly_coefficient(const Triangle& t, std::uint64_t delta);

/// sigma_{p-1-delta}(1 + z^j - z^(2j)) as binomial(p-1, delta) plus circular
/// domino placements weighted by binomial(k-1, delta).
BigInt sigma_ppm_via_dominoes(PrimeModulus p, std::uint64_t delta);

/// sum_{k=1}^{(p-1)/2} (-1)^k (C(p-k, k) + C(p-k-1, k-1)) == 0, for any
/// p >= 5 with p = 1 or 5 mod 6 (prime or not).
bool binomial_identity_check(std::uint64_t p);

} // namespace cyclonorm
