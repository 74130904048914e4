// cyclonorm: command-line front end.
//
// Exit status: 0 success, 1 a verification failed, 2 invalid input.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cyclonorm/core_arith.hpp"
#include "cyclonorm/norm_poly.hpp"
#include "cyclonorm/rarefaction.hpp"
#include "cyclonorm/render.hpp"
#include "cyclonorm/triangle.hpp"
#include "cyclonorm/verify.hpp"

namespace {

using namespace cyclonorm;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitInvalid = 2;

constexpr std::uint64_t kMaxRfunc = 10'000'000;

std::uint64_t budget_from_env()
{
    const char* raw = std::getenv("CYCLONORM_BUDGET");
    if (raw == nullptr || *raw == '\0') {
        return kDefaultBudget;
    }
    std::size_t used = 0;
    unsigned long long value = 0;
    try {
        value = std::stoull(raw, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != std::string(raw).size() || raw[0] == '-') {
        throw InvalidInput(std::string("CYCLONORM_BUDGET is not a non-negative integer: ") + raw);
    }
    return value;
}

std::string fixed(double x, int digits)
{
    std::ostringstream out;
    out << std::fixed << std::setprecision(digits) << x;
    return out.str();
}

std::vector<BigInt> parse_point(const std::string& text)
{
    std::vector<BigInt> out;
    std::stringstream in(text);
    std::string field;
    while (std::getline(in, field, ',')) {
        BigInt x;
        if (field.empty() || x.set_str(field, 10) != 0) {
            throw InvalidInput("--at expects three comma-separated integers, got '" + text + "'");
        }
        out.push_back(x);
    }
    if (out.size() != 3) {
        throw InvalidInput("--at expects three comma-separated integers, got '" + text + "'");
    }
    return out;
}

struct PairArgs {
    std::uint64_t p = 0;
    std::uint64_t i1 = 1;
    std::uint64_t i2 = 2;
};

void add_pair_options(CLI::App* cmd, PairArgs& args)
{
    cmd->add_option("--p", args.p, "odd prime modulus")->required();
    cmd->add_option("--i1", args.i1, "first residue in [1, p-1]")->capture_default_str();
    cmd->add_option("--i2", args.i2, "second residue in [1, p-1]")->capture_default_str();
}

int cmd_triangle(const PairArgs& args, const std::string& format)
{
    const PrimeModulus p(args.p);
    const Triangle t = build_triangle(p, ResiduePair(args.i1, args.i2, p));
    if (format == "json") {
        std::cout << triangle_json(t).dump(2) << '\n';
    } else if (format == "csv") {
        std::cout << triangle_csv(t);
    } else {
        std::cout << triangle_pretty(t);
    }
    return kExitOk;
}

int cmd_norm(const PairArgs& args, const std::string& at, bool check_numeric)
{
    const PrimeModulus p(args.p);
    const ResiduePair pair(args.i1, args.i2, p);
    const std::vector<BigInt> y = parse_point(at);
    const BigInt exact = evaluate(assemble(build_triangle(p, pair)), y[0], y[1], y[2]);
    std::cout << to_decimal(exact) << '\n';
    if (!check_numeric) {
        return kExitOk;
    }
    const double approx = numeric_norm(p, pair, y[0].get_d(), y[1].get_d(), y[2].get_d());
    const double scale = std::max(1.0, std::abs(exact.get_d()));
    const double deviation = std::abs(approx - exact.get_d()) / scale;
    std::ostringstream dev;
    dev << std::scientific << std::setprecision(3) << deviation;
    std::cout << "numeric " << std::setprecision(17) << approx << '\n'
              << "relative_deviation " << dev.str() << '\n';
    return deviation <= kNumericImagTolerance ? kExitOk : kExitFailed;
}

int cmd_poly(const PairArgs& args, const std::string& format)
{
    const PrimeModulus p(args.p);
    const NormPolynomial poly = assemble(build_triangle(p, ResiduePair(args.i1, args.i2, p)));
    if (format == "csv") {
        std::cout << "n0,n1,n2,c\n";
        for (const Term& term : poly.terms()) {
            std::cout << term.e0 << ',' << term.e1 << ',' << term.e2 << ',' << to_decimal(term.coefficient) << '\n';
        }
    } else {
        std::cout << polynomial_json(poly).dump(2) << '\n';
    }
    return kExitOk;
}

int cmd_verify(const std::string& suite, std::uint64_t p_max, std::uint64_t budget)
{
    const SuiteResult r = run_suite(suite, p_max, budget);
    const char* unit = (suite == "binomial") ? "values of p" : "primes";
    std::cout << suite << ": " << (r.passed() ? "pass" : "FAIL") << " (" << r.moduli << ' ' << unit << " checked, "
              << r.checks << " checks, " << r.failures << " failures, p_max " << r.p_max << ")\n";
    for (const std::string& note : r.failure_notes) {
        std::cout << "  " << note << '\n';
    }
    return r.passed() ? kExitOk : kExitFailed;
}

int cmd_raref(std::uint64_t b, const std::vector<int>& digits, std::uint64_t p_value, std::uint64_t n_max,
              const std::string& format, std::uint64_t budget)
{
    const SequenceSpec seq(b, digits);
    const PrimeModulus p(p_value);
    const RarefactionReport report = rarefaction_report(seq, p, n_max, budget);
    if (!report.verdict.generator) {
        std::cerr << "warning: " << b << " does not generate the units mod " << p_value
                  << "; theoretical exponent withheld\n";
    }
    if (format == "json") {
        std::cout << report_json(report).dump(2) << '\n';
        return kExitOk;
    }
    if (format == "csv") {
        std::cout << checkpoints_csv(report.checkpoints);
        return kExitOk;
    }
    const ExponentVerdict& v = report.verdict;
    std::cout << "b " << b << ", p " << p_value << ", n_max " << n_max << '\n'
              << "generator " << (v.generator ? "yes" : "no") << '\n'
              << "xi " << to_decimal(v.xi) << '\n'
              << "dominance bound " << to_decimal(v.dominance_bound) << '\n'
              << "condition " << (v.condition_holds ? "holds" : "fails") << '\n'
              << "theoretical exponent " << (v.exponent ? fixed(*v.exponent, 4) : std::string("absent")) << '\n';
    if (v.candidate_exponent && !v.exponent) {
        std::cout << "candidate exponent " << fixed(*v.candidate_exponent, 4) << '\n';
    }
    if (report.fit) {
        std::cout << "empirical exponent " << fixed(report.fit->slope, 4) << " (" << report.fit->usable
                  << " checkpoints, " << report.fit->discarded << " discarded with S=0)\n";
    } else {
        std::cout << "empirical exponent absent: " << report.fit_error << '\n';
    }
    return kExitOk;
}

int cmd_rfunc(std::uint64_t n_max, bool all)
{
    if (n_max > kMaxRfunc) {
        throw InvalidInput("rfunc accepts n_max <= " + std::to_string(kMaxRfunc));
    }
    const std::vector<std::uint8_t> r = iteration_count_table(n_max);
    std::uint64_t arg_max = 0;
    for (std::uint64_t n = 0; n <= n_max; ++n) {
        if (r[n] > r[arg_max]) {
            arg_max = n;
        }
    }
    std::cout << "# max R(n) for n <= " << n_max << ": " << static_cast<unsigned>(r[arg_max]) << " (first at n = "
              << arg_max << ")\n";
    std::cout << "n,f(n),R(n)\n";
    int record = -1;
    for (std::uint64_t n = 0; n <= n_max; ++n) {
        // records, and always the last n
        if (all || static_cast<int>(r[n]) > record || n == n_max) {
            std::cout << n << ',' << gap_step(n) << ',' << static_cast<unsigned>(r[n]) << '\n';
        }
        record = std::max(record, static_cast<int>(r[n]));
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Cyclotomic norm polynomials via finite Pascal triangles"};
    app.require_subcommand(1);

    PairArgs pair_args;
    std::string format = "pretty";

    auto* triangle = app.add_subcommand("triangle", "print the coefficient triangle of a residue pair");
    add_pair_options(triangle, pair_args);
    triangle->add_option("--format", format, "pretty, json or csv")
        ->check(CLI::IsMember({"pretty", "json", "csv"}))
        ->capture_default_str();

    std::string at = "1,1,-1";
    bool check_numeric = false;
    auto* norm = app.add_subcommand("norm", "evaluate the norm polynomial at an integer point");
    add_pair_options(norm, pair_args);
    norm->add_option("--at", at, "y0,y1,y2 (use --at=-1,... when y0 is negative)")->capture_default_str();
    norm->add_flag("--check-numeric", check_numeric, "compare with the floating-point product over roots of unity");

    std::string poly_format = "json";
    auto* poly = app.add_subcommand("poly", "list the terms of the norm polynomial");
    add_pair_options(poly, pair_args);
    poly->add_option("--format", poly_format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();

    std::string suite;
    std::uint64_t p_max = 31;
    auto* verify = app.add_subcommand("verify", "run an invariant suite");
    verify->add_option("suite", suite, "lucas, pascal, oracle, dominoes, binomial or symmetric")->required();
    verify->add_option("--p-max", p_max, "largest modulus")->capture_default_str();

    std::uint64_t base = 2;
    std::vector<int> digits{1, -1};
    std::uint64_t raref_p = 3;
    std::uint64_t n_max = 1 << 20;
    auto* raref = app.add_subcommand("raref", "rarefied sums of a b-multiplicative sequence");
    raref->add_option("--b", base, "base")->capture_default_str();
    raref->add_option("--digits", digits, "t_0,...,t_{b-1} in {-1,0,1}")->delimiter(',')->expected(1, -1);
    raref->add_option("--p", raref_p, "odd prime")->capture_default_str();
    raref->add_option("--n-max", n_max, "largest N scanned")->capture_default_str();
    raref->add_option("--format", format, "pretty, json or csv")
        ->check(CLI::IsMember({"pretty", "json", "csv"}))
        ->capture_default_str();

    std::uint64_t rfunc_max = 100;
    bool rfunc_all = false;
    auto* rfunc = app.add_subcommand("rfunc", "iterate f(n) = nextprime(n) - n - 1 down to {0, 1}");
    rfunc->add_option("--n-max", rfunc_max, "largest n")->capture_default_str();
    rfunc->add_flag("--all", rfunc_all, "list every n, not only record-setting ones");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInvalid;
    }

    try {
        const std::uint64_t budget = budget_from_env();
        if (triangle->parsed()) {
            return cmd_triangle(pair_args, format);
        }
        if (norm->parsed()) {
            return cmd_norm(pair_args, at, check_numeric);
        }
        if (poly->parsed()) {
            return cmd_poly(pair_args, poly_format);
        }
        if (verify->parsed()) {
            return cmd_verify(suite, p_max, budget);
        }
        if (raref->parsed()) {
            return cmd_raref(base, digits, raref_p, n_max, format, budget);
        }
        if (rfunc->parsed()) {
            return cmd_rfunc(rfunc_max, rfunc_all);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << " (raise CYCLONORM_BUDGET to allow it)\n";
        return kExitInvalid;
    } catch (const PrecisionError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFailed;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFailed;
    }
    return kExitInvalid;
}
