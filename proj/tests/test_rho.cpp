#include <doctest.h>

#include <cmath>

#include "ginibre/laguerre.hpp"
#include "ginibre/moments.hpp"
#include "ginibre/quadrature.hpp"
#include "ginibre/rho.hpp"
#include "test_support.hpp"

using ginibre::LaguerrePoly;
using ginibre::MomentTable;
using ginibre::QSqrt2;
using ginibre::Rational;
using ginibre::RhoMatrix;
using ginibre::laguerre;
using ginibre::make_rational;

TEST_CASE("laguerre small cases") {
    LaguerrePoly l = laguerre(1, -1);
    REQUIRE(l.coeffs.size() == 2);
    CHECK(l.coeffs[0] == 0);  // L_1^{-1}(x) = -x
    CHECK(l.coeffs[1] == -1);

    CHECK(laguerre(-1, 5).is_zero());
    CHECK(laguerre(-1, 0).is_zero());

    LaguerrePoly l11 = laguerre(1, 1);  // 2 - x
    CHECK(l11.coeffs[0] == 2);
    CHECK(l11.coeffs[1] == -1);

    CHECK_THROWS_AS(laguerre(-2, 0), std::invalid_argument);
}

TEST_CASE("negative superscripts satisfy the reduction identity") {
    // L_j^{-m}(x) = (-x)^m ((j-m)!/j!) L_{j-m}^{m}(x) for j >= m,
    // checked at random rational points.
    std::mt19937_64 rng(99);
    for (long j = 1; j <= 9; ++j) {
        for (long m = 1; m <= j; ++m) {
            LaguerrePoly lhs = laguerre(j, -m);
            LaguerrePoly rhs = laguerre(j - m, m);
            mpz_class ratio_num = 1, ratio_den = 1;
            for (long i = j - m + 1; i <= j; ++i) ratio_den *= i;
            for (int t = 0; t < 10; ++t) {
                Rational x = ginibre::testing::random_rational(rng, 20);
                Rational powx(1);
                for (long i = 0; i < m; ++i) powx *= -x;
                Rational expect =
                    powx * make_rational(ratio_num, ratio_den) * rhs.eval(x);
                CHECK(lhs.eval(x) == expect);
            }
        }
    }
}

namespace {

// Direct adaptive quadrature of the moment integral, the weight evaluated
// through erfcx to dodge overflow.
double moment_by_quadrature(long m) {
    auto f = [m](double y) {
        return std::pow(y, 2 * m + 1) * ginibre::erfcx(std::sqrt(2.0) * y) *
               std::exp(-y * y);
    };
    return ginibre::integrate(f, 0.0, 26.0, 1e-12, 1e-300).value;
}

// Direct quadrature of the defining integral of a rho^even entry. The
// Laguerre bracket is evaluated in exact rational arithmetic at the (dyadic)
// quadrature node, so the small-y cancellation between the two terms is
// exact; only the final product is floating point.
double rho_entry_by_quadrature(long alpha, long beta) {
    const long d = beta - alpha;
    ginibre::LaguerrePoly l1 = laguerre(2 * alpha + 1, 2 * d - 1);
    ginibre::LaguerrePoly l2 = laguerre(2 * alpha - 1, 2 * d + 1);
    auto f = [&](double y) {
        if (y == 0.0) return 0.0;
        Rational t(y);        // dyadic, exact
        Rational x = -2 * t * t;
        Rational bracket = (2 * alpha + 1) * l1.eval(x) + 2 * t * t * l2.eval(x);
        return std::pow(y, 2 * static_cast<double>(d) - 1) * bracket.get_d() *
               ginibre::erfcx(std::sqrt(2.0) * y) * std::exp(-y * y);
    };
    return ginibre::integrate(f, 0.0, 26.0, 1e-12, 1e-300).value;
}

}  // namespace

TEST_CASE("moment recursion matches quadrature") {
    MomentTable table(20);
    CHECK(table[0] == QSqrt2(make_rational(-1, 2), make_rational(1, 2)));
    CHECK(table[1] == QSqrt2(make_rational(1, 2), make_rational(-1, 4)));
    for (long m = 0; m <= 20; ++m) {
        double exact = table[m].to_double();
        double quad = moment_by_quadrature(m);
        CHECK(std::abs(exact - quad) / std::abs(exact) < 1e-10);
    }
}

TEST_CASE("rho_even entries at n=2") {
    CHECK(ginibre::rho_even_entry(0, 0) ==
          QSqrt2(Rational(-1), Rational(1)));  // 2 I_0 = sqrt2 - 1
    CHECK(ginibre::rho_even_entry(0, 1) ==
          QSqrt2(Rational(0), make_rational(1, 2)));  // 2 I_0 + 2 I_1
}

TEST_CASE("residual exponents are nonnegative odd") {
    // rho_even_entry_terms returns moment indices m (from y^{2m+1}); its
    // internal assertion fires on any negative residual power. Exercise the
    // worst cases beta < alpha explicitly.
    for (long a = 0; a < 7; ++a)
        for (long b = 0; b < 7; ++b) {
            auto terms = ginibre::rho_even_entry_terms(a, b);
            for (const auto& [m, c] : terms) {
                CHECK(m >= 0);
                CHECK(c != 0);
            }
            if (a == b) CHECK(!terms.empty());
        }
}

TEST_CASE("rho_even entries match direct quadrature") {
    for (long a = 0; a < 3; ++a)
        for (long b = 0; b < 3; ++b) {
            double exact = ginibre::rho_even_entry(a, b).to_double();
            double quad = rho_entry_by_quadrature(a, b);
            CHECK(std::abs(exact - quad) <=
                  1e-8 * std::max(1.0, std::abs(exact)));
        }
}

TEST_CASE("rho_odd small cases") {
    RhoMatrix r1 = ginibre::rho_odd(1);
    CHECK(r1.entries.size() == 0);

    RhoMatrix r3 = ginibre::rho_odd(3);
    REQUIRE(r3.entries.size() == 1);
    // Forced by the sum rule p_{3,1} + p_{3,3} = 1 with p_{3,3} = 2^{-3/2}.
    CHECK(r3.entries.at(0, 0) == QSqrt2(Rational(-1), Rational(2)));

    CHECK_THROWS_AS(ginibre::rho_odd(4), std::invalid_argument);
    CHECK_THROWS_AS(ginibre::rho_even(3), std::invalid_argument);
    CHECK_THROWS_AS(ginibre::rho_even(0), std::invalid_argument);
}

TEST_CASE("diagonal entries are positive") {
    for (long n = 2; n <= 12; n += 2) {
        RhoMatrix r = ginibre::rho_even(n);
        for (long i = 0; i < r.entries.size(); ++i)
            CHECK(r.entries.at(i, i).sign() == 1);
    }
}
