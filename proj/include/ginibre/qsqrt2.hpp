#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace ginibre {

// Arbitrary-precision rational, stored reduced with positive denominator.
using Rational = mpq_class;

// Builds a reduced rational from numerator/denominator.
Rational make_rational(const mpz_class& num, const mpz_class& den);

// Renders as "num/den", denominator always explicit ("3" -> "3/1").
std::string rational_str(const Rational& r);

// An element a + b*sqrt(2) of the quadratic field Q[sqrt(2)].
//
// The representation is unique (sqrt(2) is irrational), so equality is
// componentwise. All operations are exact; values are immutable in spirit
// and safe to share across threads.
class QSqrt2 {
  public:
    QSqrt2() : a_(0), b_(0) {}
    QSqrt2(long v) : a_(v), b_(0) {}
    explicit QSqrt2(Rational a, Rational b = Rational(0))
        : a_(std::move(a)), b_(std::move(b)) {}

    static QSqrt2 sqrt2() { return QSqrt2(Rational(0), Rational(1)); }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_rational() const { return b_ == 0; }

    QSqrt2 operator-() const { return QSqrt2(-a_, -b_); }

    QSqrt2& operator+=(const QSqrt2& o);
    QSqrt2& operator-=(const QSqrt2& o);
    QSqrt2& operator*=(const QSqrt2& o);
    QSqrt2& operator/=(const QSqrt2& o);

    friend QSqrt2 operator+(QSqrt2 x, const QSqrt2& y) { return x += y; }
    friend QSqrt2 operator-(QSqrt2 x, const QSqrt2& y) { return x -= y; }
    friend QSqrt2 operator*(QSqrt2 x, const QSqrt2& y) { return x *= y; }
    friend QSqrt2 operator/(QSqrt2 x, const QSqrt2& y) { return x /= y; }

    friend bool operator==(const QSqrt2& x, const QSqrt2& y) {
        return x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend bool operator!=(const QSqrt2& x, const QSqrt2& y) { return !(x == y); }

    // Multiplicative inverse; throws std::domain_error on zero.
    QSqrt2 inverse() const;

    // Exact sign of the real number a + b*sqrt(2): -1, 0 or +1.
    // Decided purely in rational arithmetic (mixed-sign case compares
    // a^2 against 2 b^2).
    int sign() const;

    // Correctly rounded decimal string with `digits` fractional digits
    // (round half away from zero; ties only arise for rational values).
    std::string decimal(int digits) const;

    double to_double() const;

    // Canonical form "num_a/den_a + num_b/den_b*sqrt2" (or " - " when b < 0).
    std::string str() const;

    // Inverse of str(); throws std::invalid_argument on malformed input.
    static QSqrt2 parse(std::string_view s);

  private:
    Rational a_, b_;
};

QSqrt2 pow(const QSqrt2& x, unsigned long e);

}  // namespace ginibre
