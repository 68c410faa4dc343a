#pragma once

#include "akg/lie.hpp"
#include "akg/numeric.hpp"

#include <vector>

namespace akg::qnum {

/// Evaluation context at the root of unity q = exp(i*pi/kappa),
/// kappa = g + k the altitude.
struct QContext {
    long altitude = 0;      // kappa >= 2
    unsigned precision = 50;  // requested significant decimal digits
    Real pi;

    static QContext make(long kappa);
    Real angle(const Rational& x) const;  // x * pi / kappa
};

/// [x]_q = sin(x pi/kappa) / sin(pi/kappa); real for real x.
Real q_number(const QContext& ctx, const Rational& x);

/// [[n]]_q = (1 - q^n)/(1 - q), evaluated at q^base (base=2 gives [[n]]_{q^2}).
Complex q_number_bb(const QContext& ctx, long n, int base = 1);

/// [s]!_q = prod_{n=1..s} [n]_q; requires 0 <= s < kappa.
Real q_factorial(const QContext& ctx, long s);

/// [[s]]!_q at q^base.
Complex q_factorial_bb(const QContext& ctx, long s, int base = 1);

/// The multiset of q-bracket arguments whose product defines sf_G[q]:
/// products of [n]!_q over exponents for the simply-laced types, the
/// tilde-factorial expansions for B_r, C_r, F4, G2.
std::vector<Rational> superfactorial_factors(const lie::LieData& d);

/// Quantum Lie superfactorial sf_G[q] (single-bracket convention).
Real q_superfactorial(const QContext& ctx, const lie::LieData& d);

/// Double-bracket variant Sf_G[q^base].
Complex q_superfactorial_bb(const QContext& ctx, const lie::LieData& d, int base = 1);

/// Exact classical limit (q -> 1) of sf_G[q], in rational arithmetic.
Rational superfactorial_classical(const lie::LieData& d);

/// Quantum Barnes G at positive integer argument via the recurrence
/// G_q(z+1) = Gamma_q(z) G_q(z) with Gamma_q(m) = [[m-1]]!_q.
Complex q_barnes_integer(const QContext& ctx, long n);

}  // namespace akg::qnum
