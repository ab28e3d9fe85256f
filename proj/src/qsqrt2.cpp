#include "ginibre/qsqrt2.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>

namespace ginibre {

Rational make_rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::domain_error("make_rational: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::string rational_str(const Rational& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

QSqrt2& QSqrt2::operator+=(const QSqrt2& o) {
    a_ += o.a_;
    b_ += o.b_;
    return *this;
}

QSqrt2& QSqrt2::operator-=(const QSqrt2& o) {
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
}

QSqrt2& QSqrt2::operator*=(const QSqrt2& o) {
    // (a1 + b1 s)(a2 + b2 s) = a1 a2 + 2 b1 b2 + (a1 b2 + a2 b1) s
    Rational a = a_ * o.a_ + 2 * b_ * o.b_;
    Rational b = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(a);
    b_ = std::move(b);
    return *this;
}

QSqrt2 QSqrt2::inverse() const {
    if (is_zero()) throw std::domain_error("QSqrt2: division by zero");
    // Conjugate trick: 1/(a + b s) = (a - b s)/(a^2 - 2 b^2).
    // The norm a^2 - 2 b^2 vanishes over Q only at a = b = 0.
    Rational norm = a_ * a_ - 2 * b_ * b_;
    assert(norm != 0);
    return QSqrt2(a_ / norm, -b_ / norm);
}

QSqrt2& QSqrt2::operator/=(const QSqrt2& o) { return *this *= o.inverse(); }

int QSqrt2::sign() const {
    int sa = sgn(a_);
    int sb = sgn(b_);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // Mixed signs: a + b*sqrt2 has the sign of a iff a^2 > 2 b^2.
    int c = cmp(a_ * a_, 2 * b_ * b_);
    if (c == 0) {
        // a^2 = 2 b^2 with a, b nonzero would make sqrt2 rational.
        assert(false);
        return 0;
    }
    return c > 0 ? sa : sb;
}

double QSqrt2::to_double() const {
    return a_.get_d() + b_.get_d() * std::sqrt(2.0);
}

QSqrt2 pow(const QSqrt2& x, unsigned long e) {
    QSqrt2 r(1);
    QSqrt2 base = x;
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

namespace {

// Sign of (a + b*sqrt2) - n, exact.
int cmp_to_int(const QSqrt2& x, const mpz_class& n) {
    return (x - QSqrt2(Rational(n))).sign();
}

}  // namespace

std::string QSqrt2::decimal(int digits) const {
    if (digits < 1) throw std::invalid_argument("decimal: digits must be >= 1");
    int sg = sign();
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));

    // t = |x| * 10^digits + 1/2; the rounded magnitude is floor(t).
    QSqrt2 t = *this * QSqrt2(Rational(scale));
    if (sg < 0) t = -t;
    t += QSqrt2(make_rational(1, 2));

    // Float estimate of floor(t) with generous guard bits, then exact fix-up.
    mp_bitcnt_t prec = 64;
    prec += mpz_sizeinbase(t.a().get_num().get_mpz_t(), 2);
    prec += mpz_sizeinbase(t.a().get_den().get_mpz_t(), 2);
    prec += mpz_sizeinbase(t.b().get_num().get_mpz_t(), 2);
    prec += mpz_sizeinbase(t.b().get_den().get_mpz_t(), 2);
    mpf_class fa(t.a(), prec), fb(t.b(), prec), s2(2, prec);
    mpf_sqrt(s2.get_mpf_t(), s2.get_mpf_t());
    mpf_class ft = fa + fb * s2;
    mpf_floor(ft.get_mpf_t(), ft.get_mpf_t());
    mpz_class n;
    mpz_set_f(n.get_mpz_t(), ft.get_mpf_t());

    while (cmp_to_int(t, n) < 0) --n;
    while (cmp_to_int(t, n + 1) >= 0) ++n;
    assert(n >= 0);

    mpz_class ipart = n / scale;
    mpz_class fpart = n % scale;
    std::string frac = fpart.get_str();
    frac.insert(0, static_cast<size_t>(digits) - frac.size(), '0');

    std::string out;
    if (sg < 0 && n != 0) out += '-';
    out += ipart.get_str();
    out += '.';
    out += frac;
    return out;
}

std::string QSqrt2::str() const {
    std::string out = rational_str(a_);
    if (sgn(b_) < 0) {
        out += " - " + rational_str(-b_);
    } else {
        out += " + " + rational_str(b_);
    }
    out += "*sqrt2";
    return out;
}

QSqrt2 QSqrt2::parse(std::string_view s) {
    auto fail = [] { throw std::invalid_argument("QSqrt2::parse: malformed input"); };
    const std::string suffix = "*sqrt2";
    if (s.size() < suffix.size() ||
        s.substr(s.size() - suffix.size()) != suffix)
        fail();
    s.remove_suffix(suffix.size());

    // Split on the central " + " / " - "; the leading rational may itself
    // start with '-', so search from position 1.
    size_t pos = s.find(" + ", 1);
    int bsign = 1;
    if (pos == std::string_view::npos) {
        pos = s.find(" - ", 1);
        bsign = -1;
    }
    if (pos == std::string_view::npos) fail();

    auto parse_rat = [&](std::string_view part) {
        Rational r;
        if (r.set_str(std::string(part), 10) != 0) fail();
        if (r.get_den() <= 0) fail();
        r.canonicalize();
        return r;
    };
    Rational a = parse_rat(s.substr(0, pos));
    Rational b = parse_rat(s.substr(pos + 3));
    if (bsign < 0) b = -b;
    return QSqrt2(std::move(a), std::move(b));
}

}  // namespace ginibre
