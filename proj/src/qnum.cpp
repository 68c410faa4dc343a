#include "akg/qnum.hpp"

#include <algorithm>
#include <stdexcept>

namespace akg::qnum {

using lie::Family;
using lie::LieData;

QContext QContext::make(long kappa) {
    if (kappa < 2) throw std::invalid_argument("altitude must be >= 2");
    QContext ctx;
    ctx.altitude = kappa;
    ctx.precision = akg::precision();
    ctx.pi = real_pi();
    return ctx;
}

Real QContext::angle(const Rational& x) const { return to_real(x) * pi / altitude; }

Real q_number(const QContext& ctx, const Rational& x) {
    return sin(ctx.angle(x)) / sin(ctx.pi / ctx.altitude);
}

Complex q_number_bb(const QContext& ctx, long n, int base) {
    if (n < 0) throw std::invalid_argument("q_number_bb: n must be >= 0");
    const Complex one{Real(1), Real(0)};
    Complex qn = unit_phase(Real(base) * Real(n) * ctx.pi / ctx.altitude);
    Complex q1 = unit_phase(Real(base) * ctx.pi / ctx.altitude);
    return (one - qn) / (one - q1);
}

Real q_factorial(const QContext& ctx, long s) {
    if (s < 0) throw std::invalid_argument("q_factorial: s must be >= 0");
    if (s >= ctx.altitude)
        throw std::domain_error("q_factorial: s = " + std::to_string(s) +
                                " is outside the unitary window (kappa = " +
                                std::to_string(ctx.altitude) + ")");
    Real p(1);
    for (long n = 2; n <= s; ++n) p *= q_number(ctx, Rational(n));
    return p;
}

Complex q_factorial_bb(const QContext& ctx, long s, int base) {
    if (s < 0) throw std::invalid_argument("q_factorial_bb: s must be >= 0");
    Complex p{Real(1), Real(0)};
    for (long n = 2; n <= s; ++n) p = p * q_number_bb(ctx, n, base);
    return p;
}

std::vector<Rational> superfactorial_factors(const LieData& d) {
    std::vector<Rational> f;
    auto half = [](long j) {
        Rational q(j, 2);
        q.canonicalize();
        return q;
    };
    auto push_factorial = [&](long s) {
        for (long n = 1; n <= s; ++n) f.emplace_back(n);
    };
    switch (d.type.family) {
        case Family::A:
        case Family::D:
        case Family::E:
            for (long s : d.exponents) push_factorial(s);
            break;
        case Family::B:
            // tilde[s]! = [s/2] [s-1] [s-2] ... [1]
            for (long s : d.exponents) {
                f.push_back(half(s));
                for (long n = 1; n < s; ++n) f.emplace_back(n);
            }
            break;
        case Family::C:
            // tilde[s]!, s = 2t+1: halves from s/2 down to (t+2)/2,
            // the integer t+1, then halves from t/2 down to 1/2
            for (long s : d.exponents) {
                const long t = (s - 1) / 2;
                for (long j = 2 * t + 1; j >= t + 2; --j) f.push_back(half(j));
                f.emplace_back(t + 1);
                for (long j = t; j >= 1; --j) f.push_back(half(j));
            }
            break;
        case Family::F:
            f = {Rational(1, 2),  Rational(1, 2), Rational(1),     Rational(1),    Rational(1),
                 Rational(3, 2),  Rational(2),    Rational(2),     Rational(2),    Rational(5, 2),
                 Rational(5, 2),  Rational(3),    Rational(3),     Rational(3),    Rational(7, 2),
                 Rational(4),     Rational(4),    Rational(9, 2),  Rational(5),    Rational(5),
                 Rational(11, 2), Rational(6),    Rational(7),     Rational(8)};
            break;
        case Family::G:
            f = {Rational(5, 3), Rational(4, 3), Rational(3), Rational(2), Rational(1),
                 Rational(1, 3)};
            break;
    }
    return f;
}

Real q_superfactorial(const QContext& ctx, const LieData& d) {
    Real p(1);
    for (const Rational& x : superfactorial_factors(d)) {
        if (x <= 0 || x >= ctx.altitude)
            throw std::domain_error("q_superfactorial: factor argument " + x.get_str() +
                                    " outside (0, kappa) at kappa = " +
                                    std::to_string(ctx.altitude));
        p *= q_number(ctx, x);
    }
    return p;
}

Complex q_superfactorial_bb(const QContext& ctx, const LieData& d, int base) {
    const Complex one{Real(1), Real(0)};
    Complex q1 = unit_phase(Real(base) * ctx.pi / ctx.altitude);
    Complex p = one;
    for (const Rational& x : superfactorial_factors(d)) {
        if (x <= 0 || x >= ctx.altitude)
            throw std::domain_error("q_superfactorial_bb: factor argument " + x.get_str() +
                                    " outside (0, kappa) at kappa = " +
                                    std::to_string(ctx.altitude));
        Complex qx = unit_phase(Real(base) * to_real(x) * ctx.pi / ctx.altitude);
        p = p * ((one - qx) / (one - q1));
    }
    return p;
}

Rational superfactorial_classical(const LieData& d) {
    Rational p(1);
    for (const Rational& x : superfactorial_factors(d)) p *= x;
    return p;
}

Complex q_barnes_integer(const QContext& ctx, long n) {
    if (n < 1) throw std::invalid_argument("q_barnes_integer: argument must be >= 1");
    Complex g{Real(1), Real(0)};
    // G_q(1) = 1, G_q(z+1) = Gamma_q(z) G_q(z), Gamma_q(m) = [[m-1]]!_q
    for (long z = 1; z < n; ++z) g = g * q_factorial_bb(ctx, z - 1);
    return g;
}

}  // namespace akg::qnum
