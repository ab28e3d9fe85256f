#include "ginibre/kernel.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

#include "ginibre/quadrature.hpp"
#include "ginibre/rho.hpp"

namespace ginibre {

std::vector<double> hermite_coeffs(long j) {
    // H_0 = 1, H_1 = 2x, H_{k+1} = 2x H_k - 2k H_{k-1}
    std::vector<double> prev{1.0};
    if (j == 0) return prev;
    std::vector<double> cur{0.0, 2.0};
    for (long k = 1; k < j; ++k) {
        std::vector<double> next(static_cast<size_t>(k) + 2, 0.0);
        for (size_t i = 0; i < cur.size(); ++i) next[i + 1] += 2.0 * cur[i];
        for (size_t i = 0; i < prev.size(); ++i) next[i] -= 2.0 * k * prev[i];
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

namespace {

std::vector<double> q_poly(long j) {
    std::vector<double> out(static_cast<size_t>(j) + 1, 0.0);
    const double scale = std::pow(2.0, -static_cast<double>(j));
    auto h = hermite_coeffs(j);
    for (size_t i = 0; i < h.size(); ++i) out[i] = scale * h[i];
    if (j % 2 == 1 && j >= 3) {
        const long jj = (j - 1) / 2;
        const double s2 = std::pow(2.0, -static_cast<double>(2 * jj - 1)) * jj;
        auto h2 = hermite_coeffs(2 * jj - 1);
        for (size_t i = 0; i < h2.size(); ++i) out[i] -= s2 * h2[i];
    }
    return out;
}

double factorial(long k) {
    double f = 1.0;
    for (long i = 2; i <= k; ++i) f *= i;
    return f;
}

std::vector<std::vector<double>> mu_even(long n) {
    std::vector<std::vector<double>> mu(static_cast<size_t>(n),
                                        std::vector<double>(static_cast<size_t>(n), 0.0));
    const double spi = std::sqrt(M_PI);
    for (long k = 0; k + 1 < n; k += 2) {
        const double a = std::pow(2.0, static_cast<double>(k)) / (factorial(k) * spi);
        mu[static_cast<size_t>(k + 1)][static_cast<size_t>(k)] = a;
        mu[static_cast<size_t>(k)][static_cast<size_t>(k + 1)] = -a;
    }
    return mu;
}

std::vector<std::vector<double>> mu_odd(long n) {
    // Bordered skew-product matrix; the band entries are the exact GOE skew
    // products <q_{2j}, q_{2j+1}> = (2j)! sqrt(pi) / 4^j and the border holds
    // the Gaussian moments s_{2j} = 2^{-2j} sqrt(2 pi) (2j)!/j!.
    Eigen::MatrixXd B = Eigen::MatrixXd::Zero(n + 1, n + 1);
    const double spi = std::sqrt(M_PI);
    for (long j = 0; j + 1 < n; j += 2) {
        const double z = factorial(j) * spi / std::pow(2.0, static_cast<double>(j));
        B(j, j + 1) = z;
        B(j + 1, j) = -z;
    }
    for (long j = 0; j < n; j += 2) {
        const double s = std::pow(2.0, -static_cast<double>(j)) *
                         std::sqrt(2.0 * M_PI) * factorial(j) / factorial(j / 2);
        B(j, n) = s;
        B(n, j) = -s;
    }
    Eigen::MatrixXd inv = B.inverse();
    std::vector<std::vector<double>> mu(static_cast<size_t>(n),
                                        std::vector<double>(static_cast<size_t>(n), 0.0));
    for (long j = 0; j < n; ++j)
        for (long k = 0; k < n; ++k)
            mu[static_cast<size_t>(j)][static_cast<size_t>(k)] = inv(j, k);
    return mu;
}

// Measure density of dalpha at z = x + iy, y > 0:
//   erfc(sqrt2 y) exp(-x^2 + y^2), computed overflow-free.
double measure_weight(double x, double y) {
    return erfcx(std::sqrt(2.0) * y) * std::exp(-x * x - y * y);
}

}  // namespace

KernelContext skew_orthogonal_basis(long n) {
    if (n < 2) throw std::invalid_argument("skew_orthogonal_basis: n < 2");
    KernelContext ctx;
    ctx.n = n;
    for (long j = 0; j < n; ++j) ctx.q_coeffs.push_back(q_poly(j));
    ctx.mu = (n % 2 == 0) ? mu_even(n) : mu_odd(n);
    return ctx;
}

std::complex<double> eval_poly(const std::vector<double>& coeffs,
                               std::complex<double> x) {
    std::complex<double> acc = 0.0;
    for (size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i];
    return acc;
}

std::complex<double> kernel_eval(const KernelContext& ctx,
                                 std::complex<double> u,
                                 std::complex<double> v) {
    const size_t n = static_cast<size_t>(ctx.n);
    std::vector<std::complex<double>> qu(n), qv(n);
    for (size_t j = 0; j < n; ++j) {
        qu[j] = eval_poly(ctx.q_coeffs[j], u);
        qv[j] = eval_poly(ctx.q_coeffs[j], v);
    }
    std::complex<double> acc = 0.0;
    for (size_t j = 0; j < n; ++j)
        for (size_t k = 0; k < n; ++k)
            if (ctx.mu[j][k] != 0.0) acc += qu[j] * ctx.mu[j][k] * qv[k];
    return 0.5 * acc;
}

TheoremCheck theorem_check_ell1(long n) {
    if (n < 2 || n > 8)
        throw std::invalid_argument("theorem_check_ell1: need 2 <= n <= 8");
    KernelContext ctx = skew_orthogonal_basis(n);

    // The integrand is a polynomial in x of degree <= 2(n-1) against
    // exp(-x^2); Gauss-Hermite with a safe margin is exact in x. The y
    // integral is handled adaptively.
    const QuadratureRule gh = gauss_hermite(2 * static_cast<int>(n) + 4);
    // Measure erfc(sqrt2 y) e^{-x^2+y^2}: the e^{-x^2} factor is absorbed by
    // the Gauss-Hermite rule, the rest is erfcx(sqrt2 y) e^{-y^2}.
    auto outer = [&](double y) {
        double acc = 0.0;
        for (size_t i = 0; i < gh.nodes.size(); ++i) {
            const double x = gh.nodes[i];
            std::complex<double> z(x, y);
            std::complex<double> val =
                (2.0 / std::complex<double>(0.0, 1.0)) *
                kernel_eval(ctx, z, std::conj(z));
            acc += gh.weights[i] * val.real();
        }
        return acc * erfcx(std::sqrt(2.0) * y) * std::exp(-y * y);
    };

    QuadResult q = integrate(outer, 0.0, 10.0, 1e-12, 1e-14);

    QSqrt2 rhs_exact = power_sums(rho_matrix(n), 1)[0];
    TheoremCheck out;
    out.lhs = q.value;
    out.rhs = rhs_exact.to_double();
    out.rel_err = std::abs(out.lhs - out.rhs) / std::abs(out.rhs);
    out.quad_error = q.error;
    out.converged = q.converged;
    return out;
}

ProjectionCheck projection_failure_demo(long n, std::complex<double> z,
                                        std::complex<double> zprime) {
    if (n < 2 || n > 6)
        throw std::invalid_argument("projection_failure_demo: need 2 <= n <= 6");
    KernelContext ctx = skew_orthogonal_basis(n);
    const QuadratureRule gh = gauss_hermite(4 * static_cast<int>(n) + 4);

    auto slice = [&](double y, bool imag_part) {
        double acc = 0.0;
        for (size_t i = 0; i < gh.nodes.size(); ++i) {
            const double x = gh.nodes[i];
            std::complex<double> w(x, y);
            std::complex<double> val = kernel_eval(ctx, z, std::conj(w)) *
                                       kernel_eval(ctx, w, zprime);
            acc += gh.weights[i] * (imag_part ? val.imag() : val.real());
        }
        return acc * erfcx(std::sqrt(2.0) * y) * std::exp(-y * y);
    };

    QuadResult re = integrate([&](double y) { return slice(y, false); }, 0.0,
                              10.0, 1e-12, 1e-14);
    QuadResult im = integrate([&](double y) { return slice(y, true); }, 0.0,
                              10.0, 1e-12, 1e-14);

    ProjectionCheck out;
    out.lhs = {re.value, im.value};
    out.rhs = 0.5 * kernel_eval(ctx, z, zprime);
    out.gap = std::abs(out.lhs - out.rhs);
    out.quad_error = re.error + im.error;
    return out;
}

}  // namespace ginibre
