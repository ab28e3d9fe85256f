#include "ginibre/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace ginibre {

QuadratureRule gauss_legendre(int order) {
    if (order < 1) throw std::invalid_argument("gauss_legendre: order < 1");
    const int n = order;
    QuadratureRule rule;
    rule.nodes.resize(static_cast<size_t>(n));
    rule.weights.resize(static_cast<size_t>(n));
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (x * p0 - p1) / (x * x - 1.0);
            double dx = p0 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        rule.nodes[static_cast<size_t>(i)] = -x;
        rule.nodes[static_cast<size_t>(n - 1 - i)] = x;
        double w = 2.0 / ((1.0 - x * x) * pp * pp);
        rule.weights[static_cast<size_t>(i)] = w;
        rule.weights[static_cast<size_t>(n - 1 - i)] = w;
    }
    return rule;
}

QuadratureRule gauss_hermite(int order) {
    if (order < 1) throw std::invalid_argument("gauss_hermite: order < 1");
    const int n = order;
    QuadratureRule rule;
    rule.nodes.resize(static_cast<size_t>(n));
    rule.weights.resize(static_cast<size_t>(n));
    const double pim4 = 0.7511255444649425;  // pi^{-1/4}
    double z = 0.0;
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        // Standard initial guesses, largest root first.
        if (i == 0) {
            z = std::sqrt(2.0 * n + 1.0) -
                1.85575 * std::pow(2.0 * n + 1.0, -0.16667);
        } else if (i == 1) {
            z -= 1.14 * std::pow(static_cast<double>(n), 0.426) / z;
        } else if (i == 2) {
            z = 1.86 * z - 0.86 * rule.nodes[0];
        } else if (i == 3) {
            z = 1.91 * z - 0.91 * rule.nodes[1];
        } else {
            z = 2.0 * z - rule.nodes[static_cast<size_t>(i - 2)];
        }
        double pp = 0.0;
        for (int it = 0; it < 200; ++it) {
            // Orthonormal Hermite recurrence.
            double p1 = pim4, p2 = 0.0;
            for (int j = 0; j < n; ++j) {
                double p3 = p2;
                p2 = p1;
                p1 = z * std::sqrt(2.0 / (j + 1.0)) * p2 -
                     std::sqrt(static_cast<double>(j) / (j + 1.0)) * p3;
            }
            pp = std::sqrt(2.0 * n) * p2;
            double dz = p1 / pp;
            z -= dz;
            if (std::abs(dz) < 1e-15) break;
        }
        rule.nodes[static_cast<size_t>(i)] = z;
        rule.nodes[static_cast<size_t>(n - 1 - i)] = -z;
        double w = 2.0 / (pp * pp);
        rule.weights[static_cast<size_t>(i)] = w;
        rule.weights[static_cast<size_t>(n - 1 - i)] = w;
    }
    return rule;
}

namespace {

double apply(const QuadratureRule& r, const std::function<double(double)>& f,
             double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double acc = 0.0;
    for (size_t i = 0; i < r.nodes.size(); ++i)
        acc += r.weights[i] * f(c + h * r.nodes[i]);
    return acc * h;
}

struct Workspace {
    const QuadratureRule lo = gauss_legendre(15);
    const QuadratureRule hi = gauss_legendre(31);
};

void refine(const Workspace& ws, const std::function<double(double)>& f,
            double a, double b, double tol, int depth, QuadResult& out) {
    const double coarse = apply(ws.lo, f, a, b);
    const double fine = apply(ws.hi, f, a, b);
    const double err = std::abs(fine - coarse);
    if (err <= tol || depth >= 40) {
        out.value += fine;
        out.error += err;
        if (depth >= 40 && err > tol) out.converged = false;
        return;
    }
    const double mid = 0.5 * (a + b);
    refine(ws, f, a, mid, 0.5 * tol, depth + 1, out);
    refine(ws, f, mid, b, 0.5 * tol, depth + 1, out);
}

}  // namespace

QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     double rel_tol, double abs_tol) {
    static thread_local Workspace ws;
    QuadResult out;
    out.converged = true;
    double scale = std::abs(apply(ws.lo, f, a, b));
    double tol = std::max(abs_tol, rel_tol * scale);
    refine(ws, f, a, b, tol, 0, out);
    return out;
}

double erfcx(double x) {
    if (x < 25.0) return std::exp(x * x) * std::erfc(x);
    // Asymptotic series: (1/(x sqrt(pi))) sum (-1)^k (2k-1)!! / (2x^2)^k.
    const double inv2x2 = 1.0 / (2.0 * x * x);
    double term = 1.0, sum = 1.0;
    for (int k = 1; k <= 12; ++k) {
        term *= -(2.0 * k - 1.0) * inv2x2;
        sum += term;
        if (std::abs(term) < 1e-18) break;
    }
    return sum / (x * std::sqrt(M_PI));
}

}  // namespace ginibre
