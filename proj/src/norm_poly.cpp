#include "cyclonorm/norm_poly.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <string>

namespace cyclonorm {

namespace {

using Complex = std::complex<double>;

Complex product_tree(const std::vector<Complex>& factors, std::size_t lo, std::size_t hi)
{
    if (hi - lo == 1) {
        return factors[lo];
    }
    const std::size_t mid = lo + (hi - lo) / 2;
    return product_tree(factors, lo, mid) * product_tree(factors, mid, hi);
}

Complex root_power(std::uint64_t exponent, std::uint64_t p)
{
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(exponent % p) / static_cast<double>(p);
    return std::polar(1.0, angle);
}

// Any residue in [1, p-1] other than `taken`.
std::uint64_t filler_residue(std::uint64_t taken)
{
    return taken == 1 ? 2 : 1;
}

} // namespace

NormPolynomial::NormPolynomial(PrimeModulus p, ResiduePair pair, std::vector<Term> terms)
    : p_(p)
    , pair_(pair)
    , terms_(std::move(terms))
{
    for (const Term& t : terms_) {
        if (t.e0 + t.e1 + t.e2 != p.value() - 1) {
            throw InvalidInput("term of degree " + std::to_string(t.e0 + t.e1 + t.e2) + " in a norm polynomial of p = "
                               + std::to_string(p.value()));
        }
    }
}

BigInt NormPolynomial::coefficient(std::uint64_t n0, std::uint64_t n1, std::uint64_t n2) const
{
    if (n0 + n1 + n2 != p_.value() - 1) {
        return 0;
    }
    // assemble() lays terms out like the triangle; anything else falls back to a scan
    const std::size_t idx = Triangle::index(n1, n2);
    if (idx < terms_.size() && terms_[idx].e1 == n1 && terms_[idx].e2 == n2) {
        return terms_[idx].coefficient;
    }
    BigInt total = 0;
    for (const Term& t : terms_) {
        if (t.e1 == n1 && t.e2 == n2) {
            total += t.coefficient;
        }
    }
    return total;
}

NormPolynomial assemble(const Triangle& t)
{
    const std::uint64_t top = t.rows() - 1;
    std::vector<Term> terms;
    terms.reserve(static_cast<std::size_t>(t.rows() * (t.rows() + 1) / 2));
    for (std::uint64_t n = 0; n <= top; ++n) {
        const auto row = t.row(n);
        for (std::uint64_t n2 = 0; n2 <= n; ++n2) {
            terms.push_back({top - n, n - n2, n2, row[n2]});
        }
    }
    return NormPolynomial(t.modulus(), t.pair(), std::move(terms));
}

BigInt evaluate(const NormPolynomial& poly, const BigInt& y0, const BigInt& y1, const BigInt& y2)
{
    return evaluate_terms(poly.terms(), y0, y1, y2);
}

double numeric_norm(PrimeModulus p, ResiduePair pair, double y0, double y1, double y2)
{
    const std::uint64_t m = p.value();
    if (m > kMaxNumericPrime) {
        throw InvalidInput("numeric_norm supports p <= " + std::to_string(kMaxNumericPrime));
    }
    std::vector<Complex> factors;
    factors.reserve(m - 1);
    for (std::uint64_t j = 1; j < m; ++j) {
        factors.push_back(y0 + y1 * root_power(pair.first() * j, m) + y2 * root_power(pair.second() * j, m));
    }
    const Complex value = product_tree(factors, 0, factors.size());
    if (std::abs(value.imag()) > kNumericImagTolerance * std::max(1.0, std::abs(value.real()))) {
        throw PrecisionError("residual imaginary part " + std::to_string(value.imag()) + " for real part "
                             + std::to_string(value.real()));
    }
    return value.real();
}

BigInt xi_norm(const SequenceSpec& seq, PrimeModulus p)
{
    if (seq.identically_zero()) {
        return 0;
    }
    const auto positions = seq.nonzero_positions();
    if (positions.size() >= 3) {
        throw UnsupportedSequence("the norm is only available with at most two nonzero digits among t_1..t_{b-1}, got "
                                  + std::to_string(positions.size()));
    }
    if (positions.empty()) {
        return 1;
    }
    std::vector<std::uint64_t> residues;
    for (std::uint64_t c : positions) {
        const std::uint64_t r = c % p.value();
        if (r == 0) {
            throw UnsupportedSequence("digit position " + std::to_string(c) + " is divisible by p = "
                                      + std::to_string(p.value()));
        }
        residues.push_back(r);
    }

    // Single residue: evaluate with Y2 = 0 against an arbitrary partner.
    const auto single = [&](std::uint64_t residue, long value) {
        const ResiduePair pair(residue, filler_residue(residue), p);
        return evaluate(assemble(build_triangle(p, pair)), 1, value, 0);
    };

    if (residues.size() == 1) {
        return single(residues[0], seq.digit(positions[0]));
    }
    if (residues[0] == residues[1]) {
        const long merged = seq.digit(positions[0]) + seq.digit(positions[1]);
        return single(residues[0], merged);
    }
    const ResiduePair pair(residues[0], residues[1], p);
    return evaluate(assemble(build_triangle(p, pair)), 1, seq.digit(positions[0]), seq.digit(positions[1]));
}

} // namespace cyclonorm
