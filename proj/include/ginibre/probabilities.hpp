#pragma once

#include <string>
#include <vector>

#include "ginibre/qsqrt2.hpp"
#include "ginibre/rho.hpp"

namespace ginibre {

// The full set {p_{n,k}} for one ensemble dimension n; k runs downward from
// n in steps of two (complex eigenvalues come in conjugate pairs).
struct ProbabilityTable {
    struct Row {
        long k;
        QSqrt2 exact;
        std::string decimal;
    };
    long n;
    std::vector<Row> rows;

    const Row& row_for_k(long k) const;
};

// Coefficients of G_n(z) = p_{n,n} det(1 + z rho); c_l = p_{n,n-2l}.
struct GeneratingFunction {
    long n;
    std::vector<QSqrt2> coefficients;

    QSqrt2 eval(const QSqrt2& z) const;
};

// p_{n,n} = 2^{-n(n-1)/4} exactly in Q[sqrt2]: with n(n-1)/4 = q + s/2,
// s in {0,1}, this is 2^{-q} (s=0) or 2^{-q} sqrt2/2 (s=1).
QSqrt2 p_all_real(long n);

// Exact table of p_{n,k} via the partition-sum route: power sums from traces
// of rho powers, F_ell over partitions, p_{n,n-2l} = p_{n,n} F_l.
ProbabilityTable probability_table(long n, int digits = 6);

// Same quantities by the independent determinant route: characteristic
// coefficients from the Newton-identity recurrence on the exact traces.
GeneratingFunction generating_function(long n);

struct ExpectedRealCount {
    QSqrt2 exact;          // sum_k k p_{n,k}
    double hypergeometric; // E_n = 1/2 + sqrt2 2F1(1,-1/2;n;1/2)/B(n,1/2)
};

ExpectedRealCount expected_real_count(long n);

// Serialization (External Interfaces).
std::string table_to_json(const ProbabilityTable& t);
std::string table_to_csv(const ProbabilityTable& t);
std::string rho_to_json(const RhoMatrix& rho);

}  // namespace ginibre
