#include "akg/numeric.hpp"

#include <stdexcept>

namespace akg {

namespace {
constexpr unsigned kGuardDigits = 15;
unsigned g_requested = 50;
}  // namespace

void set_precision(unsigned digits) {
    if (digits < 30) throw std::invalid_argument("precision must be at least 30 digits");
    g_requested = digits;
    Real::default_precision(digits + kGuardDigits);
}

unsigned precision() { return g_requested; }

unsigned working_digits() { return g_requested + kGuardDigits; }

Real to_real(const Rational& q) {
    Real x;
    mpfr_set_q(x.backend().data(), q.get_mpq_t(), MPFR_RNDN);
    return x;
}

Real to_real(const Integer& z) {
    Real x;
    mpfr_set_z(x.backend().data(), z.get_mpz_t(), MPFR_RNDN);
    return x;
}

Real real_pi() { return acos(Real(-1)); }

std::string to_decimal_string(const Real& x, unsigned digits) {
    return x.str(digits ? digits : g_requested);
}

Complex unit_phase(const Real& theta) { return {cos(theta), sin(theta)}; }

Complex imaginary_power(long n) {
    switch (((n % 4) + 4) % 4) {
        case 0: return {Real(1), Real(0)};
        case 1: return {Real(0), Real(1)};
        case 2: return {Real(-1), Real(0)};
        default: return {Real(0), Real(-1)};
    }
}

}  // namespace akg
