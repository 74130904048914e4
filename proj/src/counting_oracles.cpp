#include "cyclonorm/counting_oracles.hpp"

#include <bit>
#include <string>
#include <unordered_map>

namespace cyclonorm {

namespace {

void require_budget(const BigInt& work, std::uint64_t budget, const char* what)
{
    if (work > BigInt(std::to_string(budget))) {
        throw BudgetExceeded(std::string(what) + ": enumeration of " + to_decimal(work)
                             + " items exceeds the budget of " + std::to_string(budget));
    }
}

void require_simplex(PrimeModulus p, std::uint64_t n1, std::uint64_t n2)
{
    if (n1 + n2 > p.value() - 1) {
        throw InvalidInput("n1 + n2 = " + std::to_string(n1 + n2) + " exceeds p - 1 = "
                           + std::to_string(p.value() - 1));
    }
}

// Assigns each element of F_p^x to X0, X1 or X2 with prescribed sizes.
class SubsetPairWalker {
public:
    SubsetPairWalker(std::uint64_t p, std::uint64_t i1, std::uint64_t i2)
        : p_(p)
        , i1_(i1)
        , i2_(i2)
        , counts_(p, 0)
    {
    }

    void run(std::uint64_t element, std::uint64_t left1, std::uint64_t left2, std::uint64_t residue)
    {
        if (left1 == 0 && left2 == 0) {
            ++counts_[residue];
            return;
        }
        if (element >= p_ || p_ - element < left1 + left2) {
            return;
        }
        if (left1 > 0) {
            run(element + 1, left1 - 1, left2, (residue + i1_ * element) % p_);
        }
        if (left2 > 0) {
            run(element + 1, left1, left2 - 1, (residue + i2_ * element) % p_);
        }
        run(element + 1, left1, left2, residue);
    }

    [[nodiscard]] const std::vector<std::uint64_t>& counts() const { return counts_; }

private:
    std::uint64_t p_;
    std::uint64_t i1_;
    std::uint64_t i2_;
    std::vector<std::uint64_t> counts_;
};

// Expansion of the hindrance sum over subsets of the index set. For a mask M,
// terms[M][u] accumulates prod_X (-p)(|X|-1)! over collections of disjoint
// hindrances inside M that leave exactly u indices of M uncovered.
class HindranceExpansion {
public:
    HindranceExpansion(PrimeModulus p, ResiduePair pair, std::uint64_t n1, std::uint64_t n2,
                       std::uint64_t max_indices)
        : p_(p.value())
        , n_(n1 + n2)
    {
        require_simplex(p, n1, n2);
        if (n_ > max_indices) {
            throw BudgetExceeded("hindrance expansion over " + std::to_string(n_) + " indices exceeds the limit of "
                                 + std::to_string(max_indices));
        }
        weights_.resize(n_);
        for (std::uint64_t k = 0; k < n_; ++k) {
            weights_[k] = (k < n1) ? pair.first() : pair.second();
        }
    }

    const std::vector<BigInt>& terms(std::uint32_t mask)
    {
        if (auto it = memo_.find(mask); it != memo_.end()) {
            return it->second;
        }
        std::vector<BigInt> out(static_cast<std::size_t>(std::popcount(mask)) + 1);
        if (mask == 0) {
            out[0] = 1;
        } else {
            const std::uint32_t lowest = mask & (~mask + 1);
            const std::uint32_t rest = mask ^ lowest;
            {
                // lowest index left uncovered
                const auto& sub = terms(rest);
                for (std::size_t u = 0; u < sub.size(); ++u) {
                    out[u + 1] += sub[u];
                }
            }
            // lowest index inside a hindrance block {lowest} u S
            for (std::uint32_t s = rest;; s = (s - 1) & rest) {
                const std::uint32_t block = s | lowest;
                if (block_sum(block) % p_ == 0) {
                    BigInt factor = factorial(static_cast<std::uint64_t>(std::popcount(block)) - 1);
                    factor *= -static_cast<long>(p_);
                    const auto& sub = terms(mask ^ block);
                    for (std::size_t u = 0; u < sub.size(); ++u) {
                        out[u] += factor * sub[u];
                    }
                }
                if (s == 0) {
                    break;
                }
            }
        }
        return memo_.emplace(mask, std::move(out)).first->second;
    }

    [[nodiscard]] std::uint32_t full_mask() const { return (std::uint32_t{1} << n_) - 1; }
    [[nodiscard]] std::uint64_t size() const { return n_; }

private:
    [[nodiscard]] std::uint64_t block_sum(std::uint32_t block) const
    {
        std::uint64_t s = 0;
        for (std::uint64_t k = 0; k < n_; ++k) {
            if (block & (std::uint32_t{1} << k)) {
                s += weights_[k];
            }
        }
        return s;
    }

    std::uint64_t p_;
    std::uint64_t n_;
    std::vector<std::uint64_t> weights_;
    std::unordered_map<std::uint32_t, std::vector<BigInt>> memo_;
};

BigInt divide_exact(const BigInt& numerator, const BigInt& denominator, const char* what)
{
    if (numerator % denominator != 0) {
        throw std::logic_error(std::string(what) + ": " + to_decimal(numerator) + " is not divisible by "
                               + to_decimal(denominator));
    }
    return numerator / denominator;
}

} // namespace

CountQuery::CountQuery(PrimeModulus p_, ResiduePair pair_, std::uint64_t n1_, std::uint64_t n2_,
                       std::uint64_t target_)
    : p(p_)
    , pair(pair_)
    , n1(n1_)
    , n2(n2_)
    , target(target_)
{
    require_simplex(p, n1, n2);
    if (target >= p.value()) {
        throw InvalidInput("target residue " + std::to_string(target) + " is outside [0, p-1]");
    }
}

BigInt count_sequences_closed(std::uint64_t n, PrimeModulus p, bool target_is_zero)
{
    BigInt power;
    mpz_ui_pow_ui(power.get_mpz_t(), p.value() - 1, n);
    const long pm1 = static_cast<long>(p.value() - 1);
    const bool even = n % 2 == 0;
    BigInt numerator;
    if (target_is_zero) {
        numerator = even ? BigInt(power + pm1) : BigInt(power - pm1);
    } else {
        numerator = even ? BigInt(power - 1) : BigInt(power + 1);
    }
    return divide_exact(numerator, BigInt(static_cast<unsigned long>(p.value())), "count_sequences_closed");
}

BigInt count_sequences_bruteforce(std::span<const std::uint64_t> coeffs, std::uint64_t target, PrimeModulus p,
                                  std::uint64_t budget)
{
    const std::uint64_t m = p.value();
    if (target >= m) {
        throw InvalidInput("target residue " + std::to_string(target) + " is outside [0, p-1]");
    }
    for (std::uint64_t k : coeffs) {
        if (k == 0 || k >= m) {
            throw InvalidInput("coefficient " + std::to_string(k) + " is not a nonzero residue");
        }
    }
    BigInt work;
    mpz_ui_pow_ui(work.get_mpz_t(), m - 1, coeffs.size());
    require_budget(work, budget, "count_sequences_bruteforce");

    // Odometer over (x_1..x_n) in [1, p-1]^n, partial sums kept per position.
    const std::size_t n = coeffs.size();
    std::vector<std::uint64_t> x(n, 1);
    std::vector<std::uint64_t> partial(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i) {
        partial[i + 1] = (partial[i] + coeffs[i]) % m;
    }
    std::uint64_t hits = 0;
    while (true) {
        if (partial[n] == target) {
            ++hits;
        }
        std::size_t i = n;
        while (i > 0 && x[i - 1] == m - 1) {
            --i;
        }
        if (i == 0) {
            break;
        }
        ++x[i - 1];
        for (std::size_t j = i; j < n; ++j) {
            x[j] = 1;
        }
        for (std::size_t j = i - 1; j < n; ++j) {
            partial[j + 1] = (partial[j] + coeffs[j] * x[j]) % m;
        }
    }
    return BigInt(static_cast<unsigned long>(hits));
}

std::vector<BigInt> subset_pair_histogram(PrimeModulus p, ResiduePair pair, std::uint64_t n1, std::uint64_t n2,
                                          std::uint64_t budget)
{
    require_simplex(p, n1, n2);
    const auto m = static_cast<std::int64_t>(p.value());
    require_budget(binomial(m - 1, static_cast<std::int64_t>(n1))
                       * binomial(m - 1 - static_cast<std::int64_t>(n1), static_cast<std::int64_t>(n2)),
                   budget, "subset_pair_histogram");
    SubsetPairWalker walker(p.value(), pair.first(), pair.second());
    walker.run(1, n1, n2, 0);
    std::vector<BigInt> out;
    out.reserve(walker.counts().size());
    for (std::uint64_t c : walker.counts()) {
        out.emplace_back(static_cast<unsigned long>(c));
    }
    return out;
}

BigInt count_subset_pairs(const CountQuery& q, std::uint64_t budget)
{
    return subset_pair_histogram(q.p, q.pair, q.n1, q.n2, budget)[q.target];
}

BigInt count_injective_sequences(const CountQuery& q, std::uint64_t budget)
{
    const std::uint64_t m = q.p.value();
    const std::uint64_t n = q.n1 + q.n2;
    BigInt work = 1;
    for (std::uint64_t k = 0; k < n; ++k) {
        work *= static_cast<unsigned long>(m - 1 - k);
    }
    require_budget(work, budget, "count_injective_sequences");
    if (m > 64) {
        throw BudgetExceeded("count_injective_sequences supports p <= 61");
    }

    std::uint64_t hits = 0;
    std::uint64_t used = 0;
    const auto walk = [&](auto&& self, std::uint64_t position, std::uint64_t residue) -> void {
        if (position == n) {
            hits += (residue == q.target) ? 1 : 0;
            return;
        }
        const std::uint64_t weight = (position < q.n1) ? q.pair.first() : q.pair.second();
        for (std::uint64_t x = 1; x < m; ++x) {
            const std::uint64_t bit = std::uint64_t{1} << x;
            if ((used & bit) == 0) {
                used |= bit;
                self(self, position + 1, (residue + weight * x) % m);
                used &= ~bit;
            }
        }
    };
    walk(walk, 0, 0);
    return BigInt(static_cast<unsigned long>(hits));
}

BigInt delta_oracle(PrimeModulus p, ResiduePair pair, std::uint64_t n1, std::uint64_t n2, std::uint64_t budget)
{
    const auto histogram = subset_pair_histogram(p, pair, n1, n2, budget);
    return histogram[0] - histogram[1];
}

bool has_hindrance(PrimeModulus p, ResiduePair pair, std::uint64_t n1, std::uint64_t n2)
{
    require_simplex(p, n1, n2);
    const std::uint64_t m = p.value();
    for (std::uint64_t a = 0; a <= n1; ++a) {
        for (std::uint64_t b = 0; b <= n2; ++b) {
            if ((a != 0 || b != 0) && (a * pair.first() + b * pair.second()) % m == 0) {
                return true;
            }
        }
    }
    return false;
}

BigInt force_oracle(PrimeModulus p, ResiduePair pair, std::uint64_t n1, std::uint64_t n2, std::uint64_t max_indices)
{
    HindranceExpansion expansion(p, pair, n1, n2, max_indices);
    BigInt total = expansion.terms(expansion.full_mask())[0];
    if (expansion.size() % 2 == 1) {
        total = -total;
    }
    return divide_exact(total, factorial(n1) * factorial(n2), "force_oracle");
}

BigInt delta_via_hindrance_collections(PrimeModulus p, ResiduePair pair, std::uint64_t n1, std::uint64_t n2,
                                       std::uint64_t max_indices)
{
    HindranceExpansion expansion(p, pair, n1, n2, max_indices);
    const auto& terms = expansion.terms(expansion.full_mask());
    BigInt total = 0;
    for (std::size_t u = 0; u < terms.size(); ++u) {
        total += terms[u] * factorial(u);
    }
    if (expansion.size() % 2 == 1) {
        total = -total;
    }
    return divide_exact(total, factorial(n1) * factorial(n2), "delta_via_hindrance_collections");
}

BigInt domino_placements_bruteforce(std::uint64_t circle_length, std::uint64_t k)
{
    if (circle_length < 3) {
        throw InvalidInput("circle length must be at least 3");
    }
    if (circle_length > kMaxDominoCircle) {
        throw BudgetExceeded("domino enumeration supports circles of length <= "
                             + std::to_string(kMaxDominoCircle));
    }
    const std::uint64_t len = circle_length;
    std::uint64_t hits = 0;
    // Domino e covers cells e and (e + 1) mod len.
    const auto place = [&](auto&& self, std::uint64_t edge, std::uint64_t left, std::uint64_t occupied) -> void {
        if (left == 0) {
            ++hits;
            return;
        }
        if (edge >= len) {
            return;
        }
        const std::uint64_t cells = (std::uint64_t{1} << edge) | (std::uint64_t{1} << ((edge + 1) % len));
        if ((occupied & cells) == 0) {
            self(self, edge + 1, left - 1, occupied | cells);
        }
        self(self, edge + 1, left, occupied);
    };
    place(place, 0, k, 0);
    return BigInt(static_cast<unsigned long>(hits));
}

BigInt domino_placements_formula(std::uint64_t circle_length, std::uint64_t k)
{
    if (2 * k > circle_length) {
        throw InvalidInput(std::to_string(k) + " dominoes do not fit on a circle of length "
                           + std::to_string(circle_length));
    }
    if (k == 0) {
        return 1;
    }
    const auto len = static_cast<std::int64_t>(circle_length);
    const auto kk = static_cast<std::int64_t>(k);
    return binomial(len - kk, kk) + binomial(len - kk - 1, kk - 1);
}

} // namespace cyclonorm
