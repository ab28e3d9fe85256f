#include "ginibre/laguerre.hpp"

#include <stdexcept>

namespace ginibre {

Rational LaguerrePoly::eval(const Rational& x) const {
    Rational acc(0);
    for (size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i];
    return acc;
}

LaguerrePoly laguerre(long j, long alpha) {
    if (j < -1) throw std::invalid_argument("laguerre: degree below -1");
    if (j == -1) return {-1, alpha, {}};
    if (j + alpha < 0)
        throw std::invalid_argument("laguerre: j + alpha < 0 unsupported");

    std::vector<Rational> coeffs(static_cast<size_t>(j) + 1);
    mpz_class fact = 1;  // i!
    for (long i = 0; i <= j; ++i) {
        if (i > 0) fact *= i;
        mpz_class binom;
        mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(j + alpha),
                     static_cast<unsigned long>(j - i));
        if (i % 2 != 0) binom = -binom;
        coeffs[static_cast<size_t>(i)] = make_rational(binom, fact);
    }
    return {j, alpha, std::move(coeffs)};
}

}  // namespace ginibre
