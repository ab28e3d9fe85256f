#pragma once

#include <functional>
#include <vector>

namespace ginibre {

struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

// Gauss-Legendre rule on (-1, 1), nodes by Newton iteration on the
// three-term recurrence.
QuadratureRule gauss_legendre(int order);

// Gauss-Hermite rule for integrals against exp(-x^2) over the whole line.
QuadratureRule gauss_hermite(int order);

struct QuadResult {
    double value = 0.0;
    double error = 0.0;  // estimate
    bool converged = false;
};

// Adaptive bisection on [a, b]; per-interval error from comparing embedded
// Gauss-Legendre rules of two orders.
QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     double rel_tol = 1e-12, double abs_tol = 1e-14);

// Scaled complementary error function exp(x^2) erfc(x), overflow-free for
// large positive x.
double erfcx(double x);

}  // namespace ginibre
