#pragma once

#include <complex>
#include <vector>

namespace ginibre {

// Skew-orthogonal polynomial data for the GOE D-part kernel
//   K_n(x, y) = (1/2) sum_{j,k} q_j(x) mu_{jk} q_k(y).
//
// q_j are the monic GOE skew-orthogonal polynomials
//   q_{2j}(x)   = 2^{-2j} H_{2j}(x),
//   q_{2j+1}(x) = 2^{-(2j+1)} H_{2j+1}(x) - 2^{-(2j-1)} j H_{2j-1}(x)
// (physicists' Hermite convention). For even n, mu is the two-band matrix
//   mu_{k+1,k} = -mu_{k,k+1} = 2^k / (k! sqrt(pi)),  k even.
// For odd n the skew-product matrix is singular, so mu is taken as the
// top-left n x n block of the inverse of the bordered matrix
//   [[ <q_j, q_k> , s_j ], [ -s_k, 0 ]],   s_j = int q_j(x) e^{-x^2/2} dx,
// which is the standard odd-size completion of the skew product.
struct KernelContext {
    long n;
    std::vector<std::vector<double>> q_coeffs;  // ascending monomial coefficients
    std::vector<std::vector<double>> mu;        // n x n, antisymmetric
};

KernelContext skew_orthogonal_basis(long n);

// Physicists' Hermite H_j, ascending coefficients (helper, used in tests).
std::vector<double> hermite_coeffs(long j);

std::complex<double> eval_poly(const std::vector<double>& coeffs,
                               std::complex<double> x);

// (1/2) sum q_j(u) mu_{jk} q_k(v); antisymmetric in (u, v).
std::complex<double> kernel_eval(const KernelContext& ctx,
                                 std::complex<double> u,
                                 std::complex<double> v);

struct TheoremCheck {
    double lhs;        // (2/i) int dalpha(z) K_n(z, conj z), quadrature
    double rhs;        // tr rho for this n, exact value rendered as double
    double rel_err;
    double quad_error; // quadrature error estimate
    bool converged;
};

// Pfaffian integration theorem at ell = 1: valid for 2 <= n <= 8.
TheoremCheck theorem_check_ell1(long n);

struct ProjectionCheck {
    std::complex<double> lhs;  // int dalpha(w) K_n(z, conj w) K_n(w, zp)
    std::complex<double> rhs;  // (1/2) K_n(z, zp)
    double gap;
    double quad_error;
};

// Demonstrates that K_n does not satisfy the projection property under the
// GinOE measure; 2 <= n <= 6.
ProjectionCheck projection_failure_demo(long n, std::complex<double> z,
                                        std::complex<double> zprime);

}  // namespace ginibre
