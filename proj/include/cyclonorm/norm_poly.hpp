#pragma once

#include <cstdint>
#include <vector>

#include "cyclonorm/core_arith.hpp"
#include "cyclonorm/sequence.hpp"
#include "cyclonorm/triangle.hpp"
#include "cyclonorm/trivariate.hpp"

namespace cyclonorm {

/// Raised when the floating-point root product leaves a residual imaginary
/// part above tolerance.
class PrecisionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// prod_{j=1}^{p-1} (Y0 + z^(i1 j) Y1 + z^(i2 j) Y2) with integer coefficients,
/// homogeneous of degree p-1. Terms are ordered like the triangle rows.
class NormPolynomial {
public:
    NormPolynomial(PrimeModulus p, ResiduePair pair, std::vector<Term> terms);

    [[nodiscard]] PrimeModulus modulus() const noexcept { return p_; }
    [[nodiscard]] ResiduePair pair() const noexcept { return pair_; }
    [[nodiscard]] const std::vector<Term>& terms() const noexcept { return terms_; }

    /// Coefficient of Y0^n0 Y1^n1 Y2^n2; zero unless n0 + n1 + n2 = p - 1.
    [[nodiscard]] BigInt coefficient(std::uint64_t n0, std::uint64_t n1, std::uint64_t n2) const;

private:
    PrimeModulus p_;
    ResiduePair pair_;
    std::vector<Term> terms_;
};

NormPolynomial assemble(const Triangle& t);

BigInt evaluate(const NormPolynomial& poly, const BigInt& y0, const BigInt& y1, const BigInt& y2);

inline constexpr std::uint64_t kMaxNumericPrime = 200;
inline constexpr double kNumericImagTolerance = 1e-6;

/// The same product evaluated with z = exp(2 pi i / p) in double precision,
/// multiplied as a balanced product tree. Returns the real part.
double numeric_norm(PrimeModulus p, ResiduePair pair, double y0, double y1, double y2);

/// Norm of sum_c t_c z^c over Q(z)/Q for a sequence with at most two nonzero
/// digits among t_1..t_{b-1}, via the triangle of the digit positions mod p.
BigInt xi_norm(const SequenceSpec& seq, PrimeModulus p);

} // namespace cyclonorm
