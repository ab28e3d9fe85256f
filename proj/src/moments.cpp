#include "ginibre/moments.hpp"

#include <stdexcept>

namespace ginibre {

MomentTable::MomentTable(long max_m) {
    if (max_m < 0) throw std::invalid_argument("MomentTable: max_m < 0");
    values_.reserve(static_cast<size_t>(max_m) + 1);
    values_.emplace_back(make_rational(-1, 2), make_rational(1, 2));
    mpz_class fact2m = 1;  // (2m)!
    mpz_class factm = 1;   // m!
    mpz_class pow4 = 1;    // 4^m
    for (long m = 1; m <= max_m; ++m) {
        fact2m *= (2 * m - 1) * 2 * m;
        factm *= m;
        pow4 *= 4;
        QSqrt2 add(Rational(0), make_rational(fact2m, 2 * pow4 * factm));
        values_.push_back(values_.back() * QSqrt2(-m) + add);
    }
}

QSqrt2 moment_I(long m) { return MomentTable(m)[m]; }

}  // namespace ginibre
