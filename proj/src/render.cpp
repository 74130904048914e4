#include "cyclonorm/render.hpp"

#include <algorithm>
#include <sstream>

namespace cyclonorm {

namespace {

std::string signed_decimal(const BigInt& x)
{
    const std::string digits = to_decimal(x);
    return (sgn(x) < 0) ? digits : "+" + digits;
}

Json optional_number(const std::optional<double>& x)
{
    return x ? Json(*x) : Json(nullptr);
}

} // namespace

Json triangle_json(const Triangle& t)
{
    Json j;
    j["p"] = t.modulus().value();
    j["i1"] = t.pair().first();
    j["i2"] = t.pair().second();
    Json rows = Json::array();
    for (std::uint64_t n = 0; n < t.rows(); ++n) {
        Json row = Json::array();
        for (const BigInt& x : t.row(n)) {
            row.push_back(to_decimal(x));
        }
        rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    Json sources = Json::array();
    for (const GridPoint& s : source_positions(t.modulus(), t.pair())) {
        sources.push_back({s.n1, s.n2});
    }
    j["sources"] = std::move(sources);
    return j;
}

std::string triangle_csv(const Triangle& t)
{
    std::ostringstream out;
    out << "n1,n2,value,is_source\n";
    for (std::uint64_t n = 0; n < t.rows(); ++n) {
        for (std::uint64_t n2 = 0; n2 <= n; ++n2) {
            const std::uint64_t n1 = n - n2;
            out << n1 << ',' << n2 << ',' << to_decimal(t.at(static_cast<std::int64_t>(n1), static_cast<std::int64_t>(n2)))
                << ',' << (t.source(n1, n2) ? 1 : 0) << '\n';
        }
    }
    return out.str();
}

std::string triangle_pretty(const Triangle& t)
{
    std::size_t width = 0;
    for (std::uint64_t n = 0; n < t.rows(); ++n) {
        for (const BigInt& x : t.row(n)) {
            width = std::max(width, signed_decimal(x).size());
        }
    }
    // value, marker column, one separating space
    const std::size_t cell = width + 2;

    std::string out;
    for (std::uint64_t n = 0; n < t.rows(); ++n) {
        const std::size_t indent = (t.rows() - 1 - n) * cell / 2;
        std::string line(indent, ' ');
        const auto entries = t.row(n);
        for (std::uint64_t n2 = 0; n2 <= n; ++n2) {
            const std::string value = signed_decimal(entries[n2]);
            line.append(width - value.size(), ' ');
            line += value;
            if (t.source(n - n2, n2)) {
                line += kSourceMarker;
            } else {
                line += ' ';
            }
            if (n2 < n) {
                line += ' ';
            }
        }
        while (!line.empty() && line.back() == ' ') {
            line.pop_back();
        }
        out += line;
        out += '\n';
    }
    return out;
}

Triangle triangle_from_json(const Json& j)
{
    const PrimeModulus p(j.at("p").get<std::uint64_t>());
    const ResiduePair pair(j.at("i1").get<std::uint64_t>(), j.at("i2").get<std::uint64_t>(), p);
    const Json& rows = j.at("rows");
    if (rows.size() != p.value()) {
        throw InvalidInput("triangle JSON has " + std::to_string(rows.size()) + " rows, expected "
                           + std::to_string(p.value()));
    }
    std::vector<BigInt> coeffs;
    coeffs.reserve(p.value() * (p.value() + 1) / 2);
    for (std::size_t n = 0; n < rows.size(); ++n) {
        if (rows[n].size() != n + 1) {
            throw InvalidInput("triangle JSON row " + std::to_string(n) + " has the wrong length");
        }
        for (const Json& cell : rows[n]) {
            BigInt x;
            if (x.set_str(cell.get<std::string>(), 10) != 0) {
                throw InvalidInput("triangle JSON entry is not a decimal integer: " + cell.get<std::string>());
            }
            coeffs.push_back(std::move(x));
        }
    }
    Triangle t(p, pair, std::move(coeffs));
    std::vector<GridPoint> listed;
    for (const Json& s : j.at("sources")) {
        listed.push_back({s.at(0).get<std::uint64_t>(), s.at(1).get<std::uint64_t>()});
    }
    if (listed != source_positions(p, pair)) {
        throw InvalidInput("triangle JSON source list does not match the pair");
    }
    return t;
}

Json polynomial_json(const NormPolynomial& poly)
{
    Json j;
    j["p"] = poly.modulus().value();
    j["i1"] = poly.pair().first();
    j["i2"] = poly.pair().second();
    Json terms = Json::array();
    for (const Term& term : poly.terms()) {
        Json entry;
        entry["n0"] = term.e0;
        entry["n1"] = term.e1;
        entry["n2"] = term.e2;
        entry["c"] = to_decimal(term.coefficient);
        terms.push_back(std::move(entry));
    }
    j["terms"] = std::move(terms);
    return j;
}

Json report_json(const RarefactionReport& report)
{
    Json j;
    j["b"] = report.seq.base();
    j["digits"] = report.seq.digits();
    j["p"] = report.p.value();
    j["n_max"] = report.n_max;
    j["generator"] = report.verdict.generator;
    j["xi"] = to_decimal(report.verdict.xi);
    j["dominance_bound"] = to_decimal(report.verdict.dominance_bound);
    j["condition_holds"] = report.verdict.condition_holds;
    j["theoretical_exponent"] = optional_number(report.verdict.exponent);
    j["candidate_exponent"] = optional_number(report.verdict.candidate_exponent);
    if (report.fit) {
        j["empirical_exponent"] = report.fit->slope;
        j["usable_checkpoints"] = report.fit->usable;
        j["discarded_checkpoints"] = report.fit->discarded;
    } else {
        j["empirical_exponent"] = nullptr;
        j["empirical_error"] = report.fit_error;
    }
    Json checkpoints = Json::array();
    for (const Checkpoint& c : report.checkpoints) {
        checkpoints.push_back({{"N", c.n}, {"S", c.sum}});
    }
    j["checkpoints"] = std::move(checkpoints);
    return j;
}

std::string checkpoints_csv(const std::vector<Checkpoint>& checkpoints)
{
    std::ostringstream out;
    out << "N,S\n";
    for (const Checkpoint& c : checkpoints) {
        out << c.n << ',' << c.sum << '\n';
    }
    return out.str();
}

} // namespace cyclonorm
