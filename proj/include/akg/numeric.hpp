#pragma once

#include <gmpxx.h>
#include <boost/multiprecision/mpfr.hpp>

#include <string>

namespace akg {

namespace mp = boost::multiprecision;

using Rational = mpq_class;
using Integer  = mpz_class;

/// Arbitrary-precision real. Precision is process-global (see set_precision);
/// all values constructed after set_precision carry the working precision.
using Real = mp::number<mp::mpfr_float_backend<0>, mp::et_off>;

/// Requested significant decimal digits P (P >= 30). Internally a guard of
/// 15 digits is added on top of P.
void set_precision(unsigned digits);
unsigned precision();          // requested P
unsigned working_digits();     // P + guard

Real to_real(const Rational& q);
Real to_real(const Integer& z);
Real real_pi();

/// Decimal-string form with the requested number of significant digits.
std::string to_decimal_string(const Real& x, unsigned digits = 0);

/// Minimal complex type over Real. std::complex is specified for builtin
/// floating types only, so we keep our own.
struct Complex {
    Real re{0};
    Real im{0};

    Complex() = default;
    Complex(Real r) : re(std::move(r)) {}
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

    Complex operator+(const Complex& o) const { return {re + o.re, im + o.im}; }
    Complex operator-(const Complex& o) const { return {re - o.re, im - o.im}; }
    Complex operator*(const Complex& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    Complex operator*(const Real& s) const { return {re * s, im * s}; }
    Complex operator/(const Real& s) const { return {re / s, im / s}; }
    Complex operator/(const Complex& o) const {
        Real n = o.re * o.re + o.im * o.im;
        return {(re * o.re + im * o.im) / n, (im * o.re - re * o.im) / n};
    }
    Complex& operator+=(const Complex& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    Complex& operator-=(const Complex& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    Complex conj() const { return {re, -im}; }
    Real abs2() const { return re * re + im * im; }
    Real abs() const { return sqrt(abs2()); }

    bool operator==(const Complex& o) const { return re == o.re && im == o.im; }
};

/// exp(i*theta)
Complex unit_phase(const Real& theta);

/// i^n, exact
Complex imaginary_power(long n);

}  // namespace akg
