#include "cyclonorm/rarefaction.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "cyclonorm/norm_poly.hpp"

namespace cyclonorm {

namespace {

void require_budget(std::uint64_t n, std::uint64_t budget, const char* what)
{
    if (n > budget) {
        throw BudgetExceeded(std::string(what) + ": scanning " + std::to_string(n) + " terms exceeds the budget of "
                             + std::to_string(budget));
    }
}

// Base-b odometer over n = 0, 1, 2, ... tracking t_n in amortised O(1).
class DigitScanner {
public:
    explicit DigitScanner(const SequenceSpec& seq)
        : seq_(seq)
    {
    }

    [[nodiscard]] int value() const
    {
        if (seq_.identically_zero() || zeros_ > 0) {
            return 0;
        }
        return (negatives_ % 2 == 0) ? 1 : -1;
    }

    void advance()
    {
        const std::uint64_t top = seq_.base() - 1;
        std::size_t i = 0;
        while (i < digits_.size() && digits_[i] == top) {
            retire(top);
            digits_[i] = 0; // leading/inner zero digits carry t_0 = 1
            ++i;
        }
        if (i == digits_.size()) {
            digits_.push_back(0);
        }
        if (digits_[i] != 0) {
            retire(digits_[i]);
        }
        ++digits_[i];
        admit(digits_[i]);
    }

private:
    void admit(std::uint64_t c)
    {
        const int t = seq_.digit(c);
        zeros_ += (t == 0) ? 1 : 0;
        negatives_ += (t < 0) ? 1 : 0;
    }

    void retire(std::uint64_t c)
    {
        const int t = seq_.digit(c);
        zeros_ -= (t == 0) ? 1 : 0;
        negatives_ -= (t < 0) ? 1 : 0;
    }

    const SequenceSpec& seq_;
    // Least significant first; a digit 0 is tracked implicitly because t_0 = 1.
    std::vector<std::uint64_t> digits_;
    std::int64_t zeros_ = 0;
    std::int64_t negatives_ = 0;
};

double log_of(const BigInt& x)
{
    long exponent = 0;
    const double mantissa = mpz_get_d_2exp(&exponent, x.get_mpz_t());
    return std::log(mantissa) + static_cast<double>(exponent) * std::numbers::ln2;
}

} // namespace

int term(const SequenceSpec& seq, std::uint64_t n)
{
    const std::uint64_t b = seq.base();
    int value = seq.digit(n % b);
    n /= b;
    while (n > 0 && value != 0) {
        value *= seq.digit(n % b);
        n /= b;
    }
    return value;
}

std::int64_t partial_sum_direct(const SequenceSpec& seq, std::uint64_t n, std::uint64_t budget)
{
    require_budget(n, budget, "partial_sum_direct");
    std::int64_t total = 0;
    for (std::uint64_t k = 0; k < n; ++k) {
        total += term(seq, k);
    }
    return total;
}

std::vector<std::int64_t> prefix_sums_direct(const SequenceSpec& seq, std::uint64_t n_max, std::uint64_t budget)
{
    require_budget(n_max, budget, "prefix_sums_direct");
    std::vector<std::int64_t> out(n_max + 1, 0);
    for (std::uint64_t k = 0; k < n_max; ++k) {
        out[k + 1] = out[k] + term(seq, k);
    }
    return out;
}

std::int64_t partial_sum_digits(const SequenceSpec& seq, std::uint64_t n)
{
    if (n >= (std::uint64_t{1} << 62)) {
        throw InvalidInput("partial_sum_digits supports N < 2^62");
    }
    const std::uint64_t b = seq.base();
    // psi(c) for c = 0..b
    std::vector<std::int64_t> psi(b + 1, 0);
    for (std::uint64_t c = 0; c < b; ++c) {
        psi[c + 1] = psi[c] + seq.digit(c);
    }
    const std::int64_t psi_base = psi[b];

    std::vector<std::uint64_t> digits; // least significant first
    for (std::uint64_t m = n; m > 0; m /= b) {
        digits.push_back(m % b);
    }
    std::vector<std::int64_t> psi_base_power(digits.size() + 1, 1);
    for (std::size_t i = 1; i < psi_base_power.size(); ++i) {
        psi_base_power[i] = psi_base_power[i - 1] * psi_base;
    }

    std::int64_t total = 0;
    std::int64_t prefix = 1; // product of t over the digits above position i
    for (std::size_t i = digits.size(); i-- > 0;) {
        total += prefix * psi[digits[i]] * psi_base_power[i];
        prefix *= seq.digit(digits[i]);
        if (prefix == 0) {
            break;
        }
    }
    return total;
}

std::int64_t rarefied_sum(const SequenceSpec& seq, PrimeModulus p, std::uint64_t n, std::uint64_t budget)
{
    require_budget(n, budget, "rarefied_sum");
    DigitScanner scanner(seq);
    const std::uint64_t m = p.value();
    std::uint64_t residue = 0;
    std::int64_t total = 0;
    for (std::uint64_t k = 0; k < n; ++k) {
        if (residue == 0) {
            total += scanner.value();
        }
        scanner.advance();
        residue = (residue + 1 == m) ? 0 : residue + 1;
    }
    return total;
}

std::vector<Checkpoint> rarefied_checkpoints(const SequenceSpec& seq, PrimeModulus p, std::uint64_t n_max,
                                             std::uint64_t budget)
{
    require_budget(n_max, budget, "rarefied_checkpoints");
    const std::uint64_t b = seq.base();
    std::vector<Checkpoint> out;
    DigitScanner scanner(seq);
    const std::uint64_t m = p.value();
    std::uint64_t residue = 0;
    std::int64_t total = 0;
    std::uint64_t next = b;
    for (std::uint64_t k = 0; k < n_max && next <= n_max; ++k) {
        if (residue == 0) {
            total += scanner.value();
        }
        if (k + 1 == next) {
            out.push_back({next, total});
            if (next > std::numeric_limits<std::uint64_t>::max() / b) {
                break;
            }
            next *= b;
        }
        scanner.advance();
        residue = (residue + 1 == m) ? 0 : residue + 1;
    }
    return out;
}

ExponentVerdict exponent_verdict(const SequenceSpec& seq, PrimeModulus p)
{
    ExponentVerdict verdict;
    const auto b = static_cast<std::int64_t>(seq.base());
    verdict.generator = p.reduce(b) != 0 && is_generator(b, p);
    verdict.xi = xi_norm(seq, p);

    long digit_sum = 0;
    for (int t : seq.digits()) {
        digit_sum += t;
    }
    BigInt power;
    mpz_pow_ui(power.get_mpz_t(), BigInt(digit_sum).get_mpz_t(), p.value() - 1);
    verdict.dominance_bound = (power > 1) ? power : BigInt(1);
    verdict.condition_holds = abs(verdict.xi) > verdict.dominance_bound;

    if (verdict.xi > 1) {
        verdict.candidate_exponent = log_of(verdict.xi)
                                     / (static_cast<double>(p.value() - 1) * std::log(static_cast<double>(b)));
    }
    if (verdict.generator && verdict.condition_holds) {
        verdict.exponent = verdict.candidate_exponent;
    }
    return verdict;
}

std::optional<double> theoretical_exponent(const SequenceSpec& seq, PrimeModulus p)
{
    return exponent_verdict(seq, p).exponent;
}

namespace {

EmpiricalFit fit_checkpoints(std::vector<Checkpoint> checkpoints)
{
    EmpiricalFit fit;
    std::vector<double> xs;
    std::vector<double> ys;
    for (const Checkpoint& c : checkpoints) {
        if (c.sum == 0) {
            ++fit.discarded;
            continue;
        }
        xs.push_back(std::log(static_cast<double>(c.n)));
        ys.push_back(std::log(std::abs(static_cast<double>(c.sum))));
    }
    fit.usable = xs.size();
    fit.checkpoints = std::move(checkpoints);
    if (fit.usable < 3) {
        throw InsufficientData("only " + std::to_string(fit.usable) + " checkpoints with a nonzero sum (need 3)");
    }
    double mean_x = 0.0;
    double mean_y = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mean_x += xs[i];
        mean_y += ys[i];
    }
    mean_x /= static_cast<double>(xs.size());
    mean_y /= static_cast<double>(ys.size());
    double sxy = 0.0;
    double sxx = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxy += (xs[i] - mean_x) * (ys[i] - mean_y);
        sxx += (xs[i] - mean_x) * (xs[i] - mean_x);
    }
    fit.slope = sxy / sxx;
    return fit;
}

} // namespace

EmpiricalFit empirical_exponent(const SequenceSpec& seq, PrimeModulus p, std::uint64_t n_max, std::uint64_t budget)
{
    return fit_checkpoints(rarefied_checkpoints(seq, p, n_max, budget));
}

RarefactionReport rarefaction_report(const SequenceSpec& seq, PrimeModulus p, std::uint64_t n_max,
                                     std::uint64_t budget)
{
    RarefactionReport report{seq, p, n_max, exponent_verdict(seq, p), std::nullopt, {}, {}};
    report.checkpoints = rarefied_checkpoints(seq, p, n_max, budget);
    try {
        report.fit = fit_checkpoints(report.checkpoints);
    } catch (const InsufficientData& e) {
        report.fit_error = e.what();
    }
    return report;
}

} // namespace cyclonorm
