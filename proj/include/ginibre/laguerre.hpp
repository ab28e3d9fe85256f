#pragma once

#include <vector>

#include "ginibre/qsqrt2.hpp"

namespace ginibre {

// Generalised Laguerre polynomial L_j^alpha with exact rational coefficients,
// expanded in the monomial basis of its argument.
//
// The superscript may be a negative integer; the closed form
//   L_j^alpha(x) = sum_{i=0}^{j} (-1)^i C(j+alpha, j-i) x^i / i!
// covers that case as long as j + alpha >= 0, and then the coefficients for
// i < -alpha vanish identically, which is exactly the reduction identity
//   L_j^{-m}(x) = (-x)^m ((j-m)!/j!) L_{j-m}^{m}(x),  j >= m.
struct LaguerrePoly {
    long degree;       // j; -1 denotes the zero polynomial
    long superscript;  // alpha
    std::vector<Rational> coeffs;  // ascending powers of the argument

    bool is_zero() const { return coeffs.empty(); }
    Rational eval(const Rational& x) const;
};

// j >= -1 required (j = -1 is the conventional zero polynomial); for j >= 0
// requires j + alpha >= 0.
LaguerrePoly laguerre(long j, long alpha);

}  // namespace ginibre
