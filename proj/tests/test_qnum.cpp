#include <doctest.h>

#include "akg/lie.hpp"
#include "akg/qnum.hpp"

#include <set>

using namespace akg;
using namespace akg::qnum;
using lie::Family;

namespace {

Real tol() { return pow(Real(10), -30); }

bool near(const Real& a, const Real& b) {
    Real scale = std::max(abs(a), abs(b));
    if (scale < 1) scale = 1;
    return abs(a - b) <= tol() * scale;
}

bool cnear(const Complex& a, const Complex& b) { return (a - b).abs() <= tol(); }

}  // namespace

TEST_CASE("q-numbers") {
    QContext ctx = QContext::make(30);
    CHECK(near(q_number(ctx, 1), Real(1)));
    CHECK(near(q_number(ctx, 2), 2 * cos(ctx.pi / 30)));
    // symmetry and positivity inside the unitary window
    for (int num = 1; num < 90; ++num) {
        Rational x(num, 3);
        CHECK(q_number(ctx, x) > 0);
        CHECK(near(q_number(ctx, x), q_number(ctx, Rational(30) - x)));
    }
    QContext small = QContext::make(6);
    CHECK(near(q_number(small, Rational(1, 3)), sin(small.pi / 18) / sin(small.pi / 6)));
    CHECK_THROWS_AS(QContext::make(1), std::invalid_argument);
}

TEST_CASE("double-bracket q-numbers") {
    QContext ctx = QContext::make(10);
    CHECK(q_number_bb(ctx, 0).abs() <= tol());
    CHECK(cnear(q_number_bb(ctx, 1), Complex{Real(1), Real(0)}));
    // [[kappa]] = 2/(1-q) since q^kappa = -1
    Complex q1 = unit_phase(ctx.pi / 10);
    Complex expected = Complex{Real(2), Real(0)} / (Complex{Real(1), Real(0)} - q1);
    CHECK(cnear(q_number_bb(ctx, 10), expected));
    CHECK_THROWS_AS(q_number_bb(ctx, -1), std::invalid_argument);
}

TEST_CASE("q-factorials") {
    QContext ctx = QContext::make(30);
    CHECK(near(q_factorial(ctx, 0), Real(1)));
    CHECK(near(q_factorial(ctx, 1), Real(1)));
    CHECK(near(q_factorial(ctx, 2), 2 * cos(ctx.pi / 30)));
    QContext k12 = QContext::make(12);
    Real prod(1);
    for (int n = 1; n <= 5; ++n) prod *= sin(n * k12.pi / 12) / sin(k12.pi / 12);
    CHECK(near(q_factorial(k12, 5), prod));
    CHECK_THROWS_AS(q_factorial(k12, 12), std::domain_error);
    CHECK_THROWS_AS(q_factorial(k12, 25), std::domain_error);
}

TEST_CASE("bridge between the two factorial conventions") {
    for (long kappa : {7L, 10L, 30L}) {
        QContext ctx = QContext::make(kappa);
        for (long s = 2; s <= 6; ++s) {
            Complex lhs = unit_phase(ctx.pi * Real(s * (s - 1)) / (2 * kappa)) * q_factorial(ctx, s);
            CHECK(cnear(lhs, q_factorial_bb(ctx, s, 2)));
        }
    }
}

TEST_CASE("superfactorial factor lists match the rho ribbon") {
    // the product over positive roots of <rho, alpha> and the factor list of
    // sf_G[q] are the same multiset; this pins the tilde-factorial reading
    for (const lie::LieType& t :
         {lie::LieType{Family::A, 4}, {Family::B, 2}, {Family::B, 3}, {Family::B, 4},
          {Family::C, 2}, {Family::C, 3}, {Family::C, 4}, {Family::C, 5}, {Family::D, 4},
          {Family::D, 5}, {Family::E, 6}, {Family::F, 4}, {Family::G, 2}}) {
        CAPTURE(lie::to_string(t));
        lie::LieData d = lie::build_lie_data(t);
        std::multiset<Rational> factors;
        for (const auto& x : superfactorial_factors(d)) factors.insert(x);
        std::multiset<Rational> ribbon;
        for (const auto& [root, v] : lie::ribbon_table(d, d.weyl_vector)) ribbon.insert(v);
        CHECK(factors == ribbon);
    }
}

TEST_CASE("quantum superfactorial values") {
    lie::LieData a3 = lie::build_lie_data({Family::A, 3});
    QContext ctx = QContext::make(9);
    CHECK(near(q_superfactorial(ctx, a3),
               q_factorial(ctx, 1) * q_factorial(ctx, 2) * q_factorial(ctx, 3)));
    lie::LieData g2 = lie::build_lie_data({Family::G, 2});
    QContext k5 = QContext::make(5);
    Real direct = q_number(k5, Rational(5, 3)) * q_number(k5, Rational(4, 3)) *
                  q_number(k5, 3) * q_number(k5, 2) * q_number(k5, Rational(1, 3));
    CHECK(near(q_superfactorial(k5, g2), direct));
    // kappa too small: E6 has exponent 11
    lie::LieData e6 = lie::build_lie_data({Family::E, 6});
    CHECK_THROWS_AS(q_superfactorial(QContext::make(11), e6), std::domain_error);
}

TEST_CASE("classical limits are exact rationals") {
    auto classical = [](lie::LieType t) {
        return superfactorial_classical(lie::build_lie_data(t));
    };
    CHECK(classical({Family::A, 3}) == Rational(12));  // 1! 2! 3!
    CHECK(classical({Family::G, 2}) == Rational(40, 9));
    CHECK(classical({Family::B, 2}) == Rational(3, 2));   // (1/4) 1! 3!
    CHECK(classical({Family::C, 2}) == Rational(3, 2));
    CHECK(classical({Family::B, 3}) == Rational(90));     // (1/8) 1! 3! 5!
    CHECK(classical({Family::C, 3}) == Rational(45, 4));  // (1/64) 1! 3! 5!
    CHECK(classical({Family::E, 6}) ==
          Rational(Integer(1) << 25) * Integer(59049) * 3125 * 343 * 11);
    CHECK(classical({Family::F, 4}) == Rational(5893965000));  // 2^3 3^7 5^4 7^2 11
}

TEST_CASE("double-bracket superfactorials") {
    lie::LieData a1 = lie::build_lie_data({Family::A, 1});
    QContext any = QContext::make(17);
    CHECK(cnear(q_superfactorial_bb(any, a1), Complex{Real(1), Real(0)}));

    // Sf_{q^2}(3) = q^4 sf_q(3) at kappa = 10
    lie::LieData a3 = lie::build_lie_data({Family::A, 3});
    QContext k10 = QContext::make(10);
    Complex lhs = q_superfactorial_bb(k10, a3, 2);
    Complex rhs = unit_phase(4 * k10.pi / 10) * q_superfactorial(k10, a3);
    CHECK(cnear(lhs, rhs));

    // A2 composition [[1]]! [[2]]!
    lie::LieData a2 = lie::build_lie_data({Family::A, 2});
    QContext k6 = QContext::make(6);
    CHECK(cnear(q_superfactorial_bb(k6, a2),
                q_factorial_bb(k6, 1) * q_factorial_bb(k6, 2)));
}

TEST_CASE("quantum Barnes function at integers") {
    QContext k8 = QContext::make(8);
    CHECK(cnear(q_barnes_integer(k8, 1), Complex{Real(1), Real(0)}));
    CHECK(cnear(q_barnes_integer(k8, 2), Complex{Real(1), Real(0)}));
    lie::LieData a2 = lie::build_lie_data({Family::A, 2});
    CHECK(cnear(q_barnes_integer(k8, 4), q_superfactorial_bb(k8, a2)));
    QContext k12 = QContext::make(12);
    lie::LieData a3 = lie::build_lie_data({Family::A, 3});
    CHECK(cnear(q_barnes_integer(k12, 5), q_superfactorial_bb(k12, a3)));
    CHECK_THROWS_AS(q_barnes_integer(k8, 0), std::invalid_argument);
}

TEST_CASE("level-rank duality of A-type superfactorials") {
    for (long g = 2; g <= 6; ++g)
        for (long k = 2; k <= 6; ++k) {
            const long kappa = g + k;
            QContext ctx = QContext::make(kappa);
            auto side = [&](long a) {
                lie::LieData d = lie::build_lie_data({Family::A, static_cast<int>(a - 1)});
                return pow(Real(2), Real((a - 1) * a) / 2) *
                       pow(Real(kappa), Real(1 - a) / 2) *
                       pow(sin(ctx.pi / kappa), Real((a - 1) * a) / 2) *
                       q_superfactorial(ctx, d);
            };
            CHECK(near(side(g), side(k)));
        }
}
