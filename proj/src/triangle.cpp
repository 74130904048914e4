#include "cyclonorm/triangle.hpp"

#include <set>
#include <string>
#include <utility>

namespace cyclonorm {

namespace {

const BigInt& zero()
{
    static const BigInt value = 0;
    return value;
}

void require_in_triangle(PrimeModulus p, std::uint64_t n1, std::uint64_t n2)
{
    if (n1 + n2 > p.value() - 1) {
        throw InvalidInput("(" + std::to_string(n1) + ", " + std::to_string(n2) + ") lies outside the triangle of p = "
                           + std::to_string(p.value()));
    }
}

BigInt signed_binomial(std::int64_t sign_exponent, std::int64_t n, std::int64_t k)
{
    BigInt b = binomial(n, k);
    return sign_pow(sign_exponent) < 0 ? BigInt(-b) : b;
}

void set_sign(mpz_class& target, std::uint64_t exponent)
{
    target = (exponent % 2 == 0) ? 1 : -1;
}

// target = -(a + b)
void negated_sum(mpz_class& target, const mpz_class& a, const mpz_class& b)
{
    mpz_add(target.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    mpz_neg(target.get_mpz_t(), target.get_mpz_t());
}

} // namespace

bool is_source(PrimeModulus p, ResiduePair pair, std::uint64_t n1, std::uint64_t n2)
{
    const std::uint64_t m = p.value();
    return (mul_mod(pair.first(), n1 % m, m) + mul_mod(pair.second(), n2 % m, m)) % m == 0;
}

Triangle::Triangle(PrimeModulus p, ResiduePair pair, std::vector<BigInt> coeffs)
    : p_(p)
    , pair_(pair)
    , coeffs_(std::move(coeffs))
{
    const std::uint64_t m = p.value();
    if (coeffs_.size() != m * (m + 1) / 2) {
        throw InvalidInput("triangle of p = " + std::to_string(m) + " needs " + std::to_string(m * (m + 1) / 2)
                           + " coefficients, got " + std::to_string(coeffs_.size()));
    }
    sources_.resize(coeffs_.size());
    for (std::uint64_t n = 0; n < m; ++n) {
        for (std::uint64_t n2 = 0; n2 <= n; ++n2) {
            sources_[index(n - n2, n2)] = is_source(p, pair, n - n2, n2);
        }
    }
}

const BigInt& Triangle::at(std::int64_t n1, std::int64_t n2) const
{
    if (n1 < 0 || n2 < 0 || static_cast<std::uint64_t>(n1 + n2) >= p_.value()) {
        return zero();
    }
    return coeffs_[index(static_cast<std::uint64_t>(n1), static_cast<std::uint64_t>(n2))];
}

bool Triangle::source(std::uint64_t n1, std::uint64_t n2) const
{
    if (n1 + n2 >= p_.value()) {
        return false;
    }
    return sources_[index(n1, n2)];
}

std::span<const BigInt> Triangle::row(std::uint64_t n) const
{
    if (n >= p_.value()) {
        throw InvalidInput("row " + std::to_string(n) + " is outside the triangle");
    }
    return {coeffs_.data() + index(n, 0), n + 1};
}

void sweep_triangle(PrimeModulus p, ResiduePair pair, const RowVisitor& visit)
{
    const std::uint64_t m = p.value();
    const std::uint64_t top = m - 1;
    // below = row n+1, current = row n; both indexed by n2.
    std::vector<mpz_class> below(m);
    std::vector<mpz_class> current(m);

    // Hypotenuse n1 + n2 = p-1 alternates starting from +1 at n1 = 0.
    for (std::uint64_t n2 = 0; n2 <= top; ++n2) {
        set_sign(current[n2], top - n2);
    }
    visit(top, {current.data(), top + 1});

    for (std::uint64_t n = top; n-- > 1;) {
        std::swap(below, current);
        set_sign(current[0], n);
        set_sign(current[n], n);

        // Left-to-right along n1 = 1..n-1 (n2 descending), each step solving the
        // Pascal equation at (n1, n2+1) one row below; stops at a source there.
        for (std::uint64_t n1 = 1; n1 < n; ++n1) {
            const std::uint64_t n2 = n - n1;
            if (is_source(p, pair, n1, n2 + 1)) {
                break;
            }
            negated_sum(current[n2], current[n2 + 1], below[n2 + 1]);
        }
        // Right-to-left along n2 = 1..n-1, using the equation at (n1+1, n2).
        for (std::uint64_t n2 = 1; n2 < n; ++n2) {
            const std::uint64_t n1 = n - n2;
            if (is_source(p, pair, n1 + 1, n2)) {
                break;
            }
            negated_sum(current[n2], current[n2 - 1], below[n2]);
        }
        visit(n, {current.data(), n + 1});
    }

    current[0] = 1;
    visit(0, {current.data(), 1});
}

Triangle build_triangle(PrimeModulus p, ResiduePair pair)
{
    const std::uint64_t m = p.value();
    std::vector<BigInt> coeffs(m * (m + 1) / 2);
    sweep_triangle(p, pair, [&](std::uint64_t n, std::span<const BigInt> entries) {
        const std::size_t base = Triangle::index(n, 0);
        for (std::size_t k = 0; k < entries.size(); ++k) {
            coeffs[base + k] = entries[k];
        }
    });
    return Triangle(p, pair, std::move(coeffs));
}

BigInt force(const Triangle& t, std::uint64_t n1, std::uint64_t n2)
{
    require_in_triangle(t.modulus(), n1, n2);
    const auto a = static_cast<std::int64_t>(n1);
    const auto b = static_cast<std::int64_t>(n2);
    return t.at(a, b) + t.at(a - 1, b) + t.at(a, b - 1);
}

std::vector<SourceForce> source_forces(const Triangle& t)
{
    std::vector<SourceForce> out;
    for (const GridPoint& s : source_positions(t.modulus(), t.pair())) {
        out.push_back({s.n1, s.n2, force(t, s.n1, s.n2)});
    }
    return out;
}

BigInt delta_from_sources(PrimeModulus p, ResiduePair pair, std::uint64_t n1, std::uint64_t n2,
                          std::span<const SourceForce> forces)
{
    require_in_triangle(p, n1, n2);
    std::set<GridPoint> provided;
    BigInt total = 0;
    for (const SourceForce& f : forces) {
        require_in_triangle(p, f.n1, f.n2);
        if (!is_source(p, pair, f.n1, f.n2)) {
            throw InvalidInput("(" + std::to_string(f.n1) + ", " + std::to_string(f.n2) + ") is not a source");
        }
        if (!provided.insert({f.n1, f.n2}).second) {
            throw InvalidInput("source (" + std::to_string(f.n1) + ", " + std::to_string(f.n2) + ") listed twice");
        }
        if (f.n1 > n1 || f.n2 > n2) {
            continue;
        }
        const auto distance = static_cast<std::int64_t>(n1 + n2 - f.n1 - f.n2);
        total += f.value * signed_binomial(distance, distance, static_cast<std::int64_t>(n1 - f.n1));
    }
    for (const GridPoint& s : source_positions(p, pair)) {
        if (s.n1 <= n1 && s.n2 <= n2 && !provided.contains(s)) {
            throw InvalidInput("missing force for source (" + std::to_string(s.n1) + ", " + std::to_string(s.n2)
                               + ")");
        }
    }
    return total;
}

BigInt closed_delta_12(PrimeModulus p, std::uint64_t n1, std::uint64_t n2)
{
    require_in_triangle(p, n1, n2);
    const auto a = static_cast<std::int64_t>(n1);
    const auto b = static_cast<std::int64_t>(n2);
    const auto top = static_cast<std::int64_t>(p.value()) - 1;
    if (a + 2 * b <= top) {
        return signed_binomial(a + b, a + b, a);
    }
    return signed_binomial(b, top - b, a);
}

std::optional<BigInt> closed_delta_13(PrimeModulus p, std::uint64_t n1, std::uint64_t n2)
{
    require_in_triangle(p, n1, n2);
    if (p.value() < 5) {
        throw InvalidInput("the pair (1, 3) needs p >= 5");
    }
    const auto a = static_cast<std::int64_t>(n1);
    const auto b = static_cast<std::int64_t>(n2);
    const auto m = static_cast<std::int64_t>(p.value());
    const std::int64_t level = a + 3 * b;
    if (level <= m - 1) {
        return signed_binomial(a + b, a + b, a);
    }
    if (level >= 2 * m - 2 || level == 2 * m - 4) {
        return signed_binomial(b, m - 1 - b, a);
    }
    if (level == m) {
        return 2 * binomial(a + b - 1, a);
    }
    return std::nullopt;
}

std::vector<GridPoint> source_positions(PrimeModulus p, ResiduePair pair)
{
    std::vector<GridPoint> out;
    const std::uint64_t m = p.value();
    for (std::uint64_t n = 0; n < m; ++n) {
        for (std::uint64_t n2 = 0; n2 <= n; ++n2) {
            if (is_source(p, pair, n - n2, n2)) {
                out.push_back({n - n2, n2});
            }
        }
    }
    return out;
}

std::vector<GridPoint> sources_on_line(PrimeModulus p, ResiduePair pair, std::uint64_t multiple)
{
    std::vector<GridPoint> out;
    const std::uint64_t m = p.value();
    const std::uint64_t level = multiple * m;
    for (std::uint64_t n = 0; n < m; ++n) {
        for (std::uint64_t n2 = 0; n2 <= n; ++n2) {
            if (pair.first() * (n - n2) + pair.second() * n2 == level) {
                out.push_back({n - n2, n2});
            }
        }
    }
    return out;
}

BigInt upper_line_force_13(PrimeModulus p, std::uint64_t n1, std::uint64_t n2)
{
    if (n1 == 0 || n2 == 0 || n1 + 3 * n2 != p.value()) {
        throw InvalidInput("(" + std::to_string(n1) + ", " + std::to_string(n2)
                           + ") is not on the upper source line n1 + 3 n2 = p");
    }
    BigInt numerator = factorial(n1 + n2 - 1) * static_cast<unsigned long>(p.value());
    return numerator / (factorial(n1) * factorial(n2));
}

BigInt lower_line_force_13(PrimeModulus p, std::uint64_t n1, std::uint64_t n2)
{
    const std::uint64_t m = p.value();
    if (n1 == 0 || n2 == 0 || n1 + 3 * n2 != 2 * m || n1 + n2 > m - 1) {
        throw InvalidInput("(" + std::to_string(n1) + ", " + std::to_string(n2)
                           + ") is not on the lower source line n1 + 3 n2 = 2p inside the triangle");
    }
    BigInt numerator = factorial(m - n2 - 1) * static_cast<unsigned long>(m);
    BigInt value = numerator / (factorial(n1) * factorial(m - n1 - n2));
    return (n2 % 2 == 0) ? value : BigInt(-value);
}

BigInt source_force_12(PrimeModulus p, std::uint64_t n2)
{
    const std::uint64_t m = p.value();
    if (n2 < 1 || n2 > (m - 1) / 2) {
        throw InvalidInput("n2 = " + std::to_string(n2) + " is outside [1, (p-1)/2]");
    }
    const auto len = static_cast<std::int64_t>(m);
    const auto k = static_cast<std::int64_t>(n2);
    BigInt count = binomial(len - k, k) + binomial(len - k - 1, k - 1);
    return (n2 % 2 == 0) ? count : BigInt(-count);
}

std::vector<Term> symmetric_poly_coefficient(const Triangle& t, std::uint64_t delta)
{
    const std::uint64_t top = t.rows() - 1;
    if (delta > top) {
        throw InvalidInput("delta = " + std::to_string(delta) + " exceeds p - 1");
    }
    std::vector<Term> out;
    for (std::uint64_t n = 0; n + delta <= top; ++n) {
        const std::uint64_t n0 = top - n;
        const BigInt weight = binomial(static_cast<std::int64_t>(n0), static_cast<std::int64_t>(delta));
        for (std::uint64_t n2 = 0; n2 <= n; ++n2) {
            const std::uint64_t n1 = n - n2;
            out.push_back({n0 - delta, n1, n2,
                           weight * t.at(static_cast<std::int64_t>(n1), static_cast<std::int64_t>(n2))});
        }
    }
    return out;
}

BigInt sigma_ppm_via_dominoes(PrimeModulus p, std::uint64_t delta)
{
    const std::uint64_t m = p.value();
    if (m < 5 || delta > m - 2) {
        throw InvalidInput("need p >= 5 and 0 <= delta <= p - 2");
    }
    const auto len = static_cast<std::int64_t>(m);
    const auto d = static_cast<std::int64_t>(delta);
    BigInt total = binomial(len - 1, d);
    for (std::int64_t k = 1; k <= (len - 1) / 2; ++k) {
        total += binomial(k - 1, d) * (binomial(len - k, k) + binomial(len - k - 1, k - 1));
    }
    return total;
}

bool binomial_identity_check(std::uint64_t p)
{
    if (p < 5 || (p % 6 != 1 && p % 6 != 5)) {
        throw InvalidInput("need p >= 5 with p = 1 or 5 mod 6, got " + std::to_string(p));
    }
    const auto len = static_cast<std::int64_t>(p);
    BigInt total = 0;
    for (std::int64_t k = 1; k <= (len - 1) / 2; ++k) {
        BigInt term = binomial(len - k, k) + binomial(len - k - 1, k - 1);
        if (k % 2 == 0) {
            total += term;
        } else {
            total -= term;
        }
    }
    return total == 0;
}

} // namespace cyclonorm
