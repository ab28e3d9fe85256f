#include "ginibre/probabilities.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "ginibre/partitions.hpp"

namespace ginibre {

const ProbabilityTable::Row& ProbabilityTable::row_for_k(long k) const {
    for (const auto& r : rows)
        if (r.k == k) return r;
    throw std::invalid_argument("ProbabilityTable: no row for this k");
}

QSqrt2 GeneratingFunction::eval(const QSqrt2& z) const {
    QSqrt2 acc;
    for (size_t i = coefficients.size(); i-- > 0;)
        acc = acc * z + coefficients[i];
    return acc;
}

QSqrt2 p_all_real(long n) {
    if (n < 1) throw std::invalid_argument("p_all_real: n must be positive");
    const long e = n * (n - 1) / 2;  // exponent in units of 1/2
    const long q = e / 2;
    mpz_class pow2 = 1;
    pow2 <<= static_cast<unsigned long>(q);
    if (e % 2 == 0) return QSqrt2(make_rational(1, pow2));
    // 2^{-q} * 2^{-1/2} = sqrt2 / 2^{q+1}
    return QSqrt2(Rational(0), make_rational(1, 2 * pow2));
}

ProbabilityTable probability_table(long n, int digits) {
    if (n < 1) throw std::invalid_argument("probability_table: n must be positive");
    const long m = n / 2;
    RhoMatrix rho = rho_matrix(n);
    std::vector<QSqrt2> ps = power_sums(rho, m);
    const QSqrt2 pnn = p_all_real(n);

    ProbabilityTable table{n, {}};
    for (long l = 0; l <= m; ++l) {
        QSqrt2 value = pnn * zonal_F(l, ps);
        if (l == 0) assert(value == pnn);
        table.rows.push_back({n - 2 * l, value, value.decimal(digits)});
    }
    return table;
}

GeneratingFunction generating_function(long n) {
    if (n < 1) throw std::invalid_argument("generating_function: n must be positive");
    const long m = n / 2;
    RhoMatrix rho = rho_matrix(n);
    std::vector<QSqrt2> ps = power_sums(rho, m);
    const QSqrt2 pnn = p_all_real(n);

    GeneratingFunction gf{n, {}};
    for (long l = 0; l <= m; ++l)
        gf.coefficients.push_back(pnn * elementary_from_powersums(l, ps));
    return gf;
}

namespace {

// 2F1(1,-1/2;n;1/2) by its convergent series; the upper parameter -1/2 is
// not a negative integer, so the series does not terminate.
double hyp2f1_series(long n) {
    double term = 1.0;
    double sum = 1.0;
    for (long k = 0; k < 10000; ++k) {
        term *= (static_cast<double>(k) - 0.5) /
                (static_cast<double>(n) + static_cast<double>(k)) * 0.5;
        sum += term;
        if (std::abs(term) < 1e-16 * std::abs(sum)) break;
    }
    return sum;
}

}  // namespace

ExpectedRealCount expected_real_count(long n) {
    ProbabilityTable table = probability_table(n);
    QSqrt2 exact;
    for (const auto& r : table.rows) exact += QSqrt2(r.k) * r.exact;

    // B(n, 1/2) via the log-Gamma product formula.
    double logB = std::lgamma(static_cast<double>(n)) + std::lgamma(0.5) -
                  std::lgamma(static_cast<double>(n) + 0.5);
    double en = 0.5 + std::sqrt(2.0) * hyp2f1_series(n) / std::exp(logB);
    return {exact, en};
}

std::string table_to_json(const ProbabilityTable& t) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : t.rows) {
        rows.push_back({{"k", r.k},
                        {"exact", r.exact.str()},
                        {"a", rational_str(r.exact.a())},
                        {"b", rational_str(r.exact.b())},
                        {"decimal", r.decimal}});
    }
    nlohmann::json j{{"n", t.n}, {"rows", rows}};
    return j.dump(2);
}

std::string table_to_csv(const ProbabilityTable& t) {
    std::string out = "n,k,exact,decimal\n";
    for (const auto& r : t.rows) {
        out += std::to_string(t.n) + "," + std::to_string(r.k) + "," +
               r.exact.str() + "," + r.decimal + "\n";
    }
    return out;
}

std::string rho_to_json(const RhoMatrix& rho) {
    nlohmann::json entries = nlohmann::json::array();
    for (long i = 0; i < rho.entries.size(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (long j = 0; j < rho.entries.size(); ++j)
            row.push_back(rho.entries.at(i, j).str());
        entries.push_back(row);
    }
    nlohmann::json j{{"n", rho.n},
                     {"flavor", rho.flavor == RhoFlavor::even ? "even" : "odd"},
                     {"size", rho.entries.size()},
                     {"entries", entries}};
    return j.dump(2);
}

}  // namespace ginibre
