#include "ginibre/rho.hpp"

#include <cassert>
#include <map>
#include <stdexcept>

#include "ginibre/laguerre.hpp"
#include "ginibre/moments.hpp"

namespace ginibre {

QMatrix QMatrix::identity(long size) {
    QMatrix m(size);
    for (long i = 0; i < size; ++i) m.at(i, i) = QSqrt2(1);
    return m;
}

QMatrix QMatrix::operator*(const QMatrix& o) const {
    assert(size_ == o.size_);
    QMatrix out(size_);
    for (long i = 0; i < size_; ++i)
        for (long k = 0; k < size_; ++k) {
            const QSqrt2& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (long j = 0; j < size_; ++j) out.at(i, j) += aik * o.at(k, j);
        }
    return out;
}

QSqrt2 QMatrix::trace() const {
    QSqrt2 t;
    for (long i = 0; i < size_; ++i) t += at(i, i);
    return t;
}

std::vector<std::pair<long, Rational>> rho_even_entry_terms(long alpha, long beta) {
    if (alpha < 0 || beta < 0)
        throw std::invalid_argument("rho_even_entry_terms: negative index");
    const long d = beta - alpha;

    // Integrand of the entry, with t = y^2:
    //   y^{2d-1} [ (2a+1) L_{2a+1}^{2d-1}(-2t) + 2t L_{2a-1}^{2d+1}(-2t) ].
    // Collect the bracket as a polynomial in t, then shift by t^d.
    std::map<long, Rational> poly;  // exponent of t -> coefficient
    auto accumulate = [&poly](const LaguerrePoly& L, long shift, long scale) {
        Rational pw(1);  // (-2)^i, substitution x = -2t
        for (size_t i = 0; i < L.coeffs.size(); ++i) {
            if (L.coeffs[i] != 0)
                poly[static_cast<long>(i) + shift] += scale * pw * L.coeffs[i];
            pw *= -2;
        }
    };
    accumulate(laguerre(2 * alpha + 1, 2 * d - 1), d, 2 * alpha + 1);
    accumulate(laguerre(2 * alpha - 1, 2 * d + 1), d + 1, 2);

    std::vector<std::pair<long, Rational>> terms;
    for (auto& [k, c] : poly) {
        if (c == 0) continue;
        // t^k y^{-1} = y^{2(k-1)+1}: the reduction must leave k >= 1.
        assert(k >= 1);
        terms.emplace_back(k - 1, std::move(c));
    }
    return terms;
}

QSqrt2 rho_even_entry(long alpha, long beta) {
    QSqrt2 out;
    MomentTable moments(alpha + beta + 2);
    for (const auto& [m, c] : rho_even_entry_terms(alpha, beta))
        out += QSqrt2(Rational(c)) * moments[m];
    return out;
}

RhoMatrix rho_even(long n) {
    if (n <= 0 || n % 2 != 0)
        throw std::invalid_argument("rho_even: n must be even and positive");
    const long m = n / 2;
    QMatrix mat(m);
    for (long a = 0; a < m; ++a)
        for (long b = 0; b < m; ++b) mat.at(a, b) = rho_even_entry(a, b);
    return {n, RhoFlavor::even, std::move(mat)};
}

RhoMatrix rho_odd(long n) {
    if (n <= 0 || n % 2 == 0)
        throw std::invalid_argument("rho_odd: n must be odd and positive");
    const long m = n / 2;
    QMatrix mat(m);
    if (m > 0) {
        // Even-flavor block with the column range extended to index m.
        QMatrix ext(m + 1);
        for (long a = 0; a < m; ++a)
            for (long b = 0; b <= m; ++b) ext.at(a, b) = rho_even_entry(a, b);

        mpz_class fact_m = 1, fact_2m = 1;
        for (long i = 2; i <= m; ++i) fact_m *= i;
        for (long i = 2; i <= 2 * m; ++i) fact_2m *= i;
        mpz_class fact_b = 1, fact_2b = 1;
        for (long b = 0; b < m; ++b) {
            if (b > 0) {
                fact_b *= b;
                fact_2b *= (2 * b - 1) * 2 * b;
            }
            mpz_class pow4 = 1;
            for (long i = 0; i < m - b; ++i) pow4 *= -4;
            QSqrt2 coeff(make_rational(pow4 * fact_m * fact_2b, fact_2m * fact_b));
            for (long a = 0; a < m; ++a)
                mat.at(a, b) = ext.at(a, b) - coeff * ext.at(a, m);
        }
    }
    return {n, RhoFlavor::odd, std::move(mat)};
}

RhoMatrix rho_matrix(long n) {
    if (n <= 0) throw std::invalid_argument("rho_matrix: n must be positive");
    return n % 2 == 0 ? rho_even(n) : rho_odd(n);
}

std::vector<QSqrt2> power_sums(const RhoMatrix& rho, long count) {
    std::vector<QSqrt2> ps;
    ps.reserve(static_cast<size_t>(count));
    QMatrix power = rho.entries;
    for (long j = 1; j <= count; ++j) {
        if (j > 1) power = power * rho.entries;
        ps.push_back(power.trace());
    }
    return ps;
}

}  // namespace ginibre
