#include "cyclonorm/verify.hpp"

#include <functional>
#include <map>

#include "cyclonorm/counting_oracles.hpp"
#include "cyclonorm/norm_poly.hpp"
#include "cyclonorm/triangle.hpp"

namespace cyclonorm {

namespace {

constexpr std::size_t kMaxNotes = 10;

class Tally {
public:
    explicit Tally(SuiteResult& r)
        : r_(r)
    {
    }

    void check(bool ok, const std::function<std::string()>& note)
    {
        ++r_.checks;
        if (!ok) {
            ++r_.failures;
            if (r_.failure_notes.size() < kMaxNotes) {
                r_.failure_notes.push_back(note());
            }
        }
    }

private:
    SuiteResult& r_;
};

std::string where(std::uint64_t p, ResiduePair pair, std::uint64_t n1, std::uint64_t n2)
{
    return "p=" + std::to_string(p) + " (" + std::to_string(pair.first()) + "," + std::to_string(pair.second())
           + ") at (" + std::to_string(n1) + "," + std::to_string(n2) + ")";
}

std::vector<std::uint64_t> primes_between(std::uint64_t lo, std::uint64_t hi)
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t n = lo; n <= hi; ++n) {
        if (is_prime(n)) {
            out.push_back(n);
        }
    }
    return out;
}

void lucas_suite(SuiteResult& r, std::uint64_t /*budget*/)
{
    Tally tally(r);
    for (std::uint64_t q : primes_between(5, r.p_max)) {
        ++r.moduli;
        const PrimeModulus p(q);
        const NormPolynomial poly = assemble(build_triangle(p, ResiduePair(1, 2, p)));
        const BigInt got = evaluate(poly, 1, 1, -1);
        const BigInt want = lucas_number(q);
        tally.check(got == want, [&] {
            return "p=" + std::to_string(q) + ": norm " + to_decimal(got) + " != L_p " + to_decimal(want);
        });
    }
}

void pascal_suite(SuiteResult& r, std::uint64_t /*budget*/)
{
    Tally tally(r);
    for (std::uint64_t q : primes_between(3, r.p_max)) {
        ++r.moduli;
        const PrimeModulus p(q);
        for (const ResiduePair& pair : all_pairs(p)) {
            const Triangle t = build_triangle(p, pair);
            for (std::uint64_t n = 0; n < q; ++n) {
                for (std::uint64_t n2 = 0; n2 <= n; ++n2) {
                    const std::uint64_t n1 = n - n2;
                    if (n == 0) {
                        continue; // the seed: its three-term sum is 1
                    }
                    const BigInt f = force(t, n1, n2);
                    const bool ok = t.source(n1, n2) ? mpz_divisible_ui_p(f.get_mpz_t(), q) != 0 : f == 0;
                    tally.check(ok, [&] { return where(q, pair, n1, n2) + ": three-term sum " + to_decimal(f); });
                }
            }
        }
    }
}

void oracle_suite(SuiteResult& r, std::uint64_t budget)
{
    Tally tally(r);
    for (std::uint64_t q : primes_between(3, r.p_max)) {
        ++r.moduli;
        const PrimeModulus p(q);
        for (const ResiduePair& pair : all_pairs(p)) {
            const Triangle t = build_triangle(p, pair);
            for (std::uint64_t n = 0; n < q; ++n) {
                for (std::uint64_t n2 = 0; n2 <= n; ++n2) {
                    const std::uint64_t n1 = n - n2;
                    const BigInt want = delta_oracle(p, pair, n1, n2, budget);
                    const BigInt& got = t.at(static_cast<std::int64_t>(n1), static_cast<std::int64_t>(n2));
                    tally.check(got == want, [&] {
                        return where(q, pair, n1, n2) + ": triangle " + to_decimal(got) + ", enumeration "
                               + to_decimal(want);
                    });
                }
            }
        }
    }
}

void dominoes_suite(SuiteResult& r, std::uint64_t /*budget*/)
{
    Tally tally(r);
    for (std::uint64_t length = 3; length <= std::min(r.p_max, kMaxDominoCircle); ++length) {
        for (std::uint64_t k = 0; 2 * k <= length; ++k) {
            const BigInt brute = domino_placements_bruteforce(length, k);
            const BigInt closed = domino_placements_formula(length, k);
            tally.check(brute == closed, [&] {
                return "circle " + std::to_string(length) + ", k=" + std::to_string(k) + ": enumeration "
                       + to_decimal(brute) + ", formula " + to_decimal(closed);
            });
        }
    }
    for (std::uint64_t q : primes_between(5, r.p_max)) {
        ++r.moduli;
        const PrimeModulus p(q);
        const ResiduePair pair(1, 2, p);
        const Triangle t = build_triangle(p, pair);
        for (std::uint64_t n2 = 1; 2 * n2 < q; ++n2) {
            const std::uint64_t n1 = q - 2 * n2;
            const BigInt want = force(t, n1, n2);
            const BigInt got = source_force_12(p, n2);
            tally.check(got == want, [&] {
                return where(q, pair, n1, n2) + ": domino force " + to_decimal(got) + ", triangle " + to_decimal(want);
            });
        }
    }
}

void binomial_suite(SuiteResult& r, std::uint64_t /*budget*/)
{
    Tally tally(r);
    for (std::uint64_t q = 5; q <= r.p_max; ++q) {
        if (q % 6 != 1 && q % 6 != 5) {
            continue;
        }
        ++r.moduli;
        tally.check(binomial_identity_check(q), [&] { return "p=" + std::to_string(q) + ": alternating sum != 0"; });
    }
}

void symmetric_suite(SuiteResult& r, std::uint64_t /*budget*/)
{
    Tally tally(r);
    for (std::uint64_t q : primes_between(5, r.p_max)) {
        ++r.moduli;
        const PrimeModulus p(q);
        const Triangle t = build_triangle(p, ResiduePair(1, 2, p));
        for (std::uint64_t delta = 0; delta + 1 < q; ++delta) {
            const BigInt sigma = sigma_ppm_via_dominoes(p, delta);
            const BigInt direct = evaluate_terms(symmetric_poly_coefficient(t, delta), 1, 1, -1);
            const std::string at = "p=" + std::to_string(q) + " delta=" + std::to_string(delta);
            tally.check(sigma > 0, [&] { return at + ": sigma " + to_decimal(sigma) + " not positive"; });
            tally.check(mod_floor(sigma - binomial(static_cast<std::int64_t>(q - 1), static_cast<std::int64_t>(delta)), q)
                            == 0,
                        [&] { return at + ": sigma not congruent to C(p-1, delta)"; });
            tally.check(sigma == direct, [&] {
                return at + ": domino sum " + to_decimal(sigma) + ", polynomial " + to_decimal(direct);
            });
        }
    }
}

struct SuiteEntry {
    std::uint64_t limit;
    void (*run)(SuiteResult&, std::uint64_t);
};

const std::map<std::string, SuiteEntry, std::less<>>& registry()
{
    static const std::map<std::string, SuiteEntry, std::less<>> suites{
        {"lucas", {1000, lucas_suite}},
        {"pascal", {61, pascal_suite}},
        {"oracle", {17, oracle_suite}},
        {"dominoes", {1000, dominoes_suite}},
        {"binomial", {100000, binomial_suite}},
        {"symmetric", {200, symmetric_suite}},
    };
    return suites;
}

} // namespace

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names{"lucas", "pascal", "oracle", "dominoes", "binomial", "symmetric"};
    return names;
}

std::uint64_t suite_limit(std::string_view suite)
{
    const auto it = registry().find(suite);
    if (it == registry().end()) {
        throw InvalidInput("unknown suite '" + std::string(suite) + "'");
    }
    return it->second.limit;
}

SuiteResult run_suite(std::string_view suite, std::uint64_t p_max, std::uint64_t budget)
{
    const std::uint64_t limit = suite_limit(suite);
    if (p_max > limit) {
        throw InvalidInput("suite " + std::string(suite) + " accepts p_max <= " + std::to_string(limit));
    }
    SuiteResult r;
    r.suite = std::string(suite);
    r.p_max = p_max;
    registry().find(suite)->second.run(r, budget);
    return r;
}

} // namespace cyclonorm
