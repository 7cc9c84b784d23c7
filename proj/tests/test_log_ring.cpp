#include "doctest.h"

#include <cmath>
#include <random>

#include "apd/xpoly.hpp"

using namespace apd;

namespace {

RatFunc lm1() {
    return RatFunc::lambda() - RatFunc::one();
}

// Random small element: up to three terms c * l^e with e in [-3, 3] and
// c = p(lambda)/q(lambda) built from tiny polynomials.
LogElem random_elem(std::mt19937& rng) {
    auto coef = [&rng]() {
        return Rational(static_cast<long>(rng() % 9) - 4, static_cast<long>(rng() % 4) + 1);
    };
    LogElem out;
    const unsigned terms = rng() % 4;
    for (unsigned i = 0; i < terms; ++i) {
        const long e = static_cast<long>(rng() % 7) - 3;
        LambdaPoly num(std::vector<Rational>{coef(), coef()});
        if (num.is_zero()) num = LambdaPoly(Rational(1));
        const RatFunc c = RatFunc(num) * (rng() % 2 ? RatFunc::one() : lm1().inverse());
        out += LogElem::log_term(e, c);
    }
    return out;
}

} // namespace

TEST_CASE("log ring constants and units") {
    CHECK(LogElem().is_zero());
    CHECK(LogElem(Rational(0)).is_zero()); // zero coefficients are dropped
    CHECK(LogElem::log_symbol().is_unit());
    CHECK_FALSE(LogElem::log_symbol().is_log_free());
    CHECK(LogElem(Rational(3)).is_log_free());
    CHECK((LogElem(1) + LogElem::log_symbol()).is_unit() == false);
    CHECK(LogElem::log_term(-2).min_exp() == -2);
    CHECK((LogElem::log_term(2) + LogElem::log_term(-1)).max_exp() == 2);
}

TEST_CASE("log ring axioms on random elements") {
    std::mt19937 rng(99);
    for (int i = 0; i < 200; ++i) {
        const LogElem a = random_elem(rng), b = random_elem(rng), c = random_elem(rng);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + LogElem() == a);
        CHECK(a * LogElem::one() == a);
        CHECK(a - a == LogElem());
        CHECK(a * LogElem() == LogElem());
    }
}

TEST_CASE("laurent inverse and monomial division") {
    const LogElem u = LogElem::log_term(2, lm1());
    CHECK(u.inverse() == LogElem::log_term(-2, lm1().inverse()));
    CHECK(u * u.inverse() == LogElem::one());
    CHECK_THROWS_AS(LogElem().inverse(), ZeroDivisor);
    CHECK_THROWS_AS((LogElem(1) + LogElem::log_symbol()).inverse(), ZeroDivisor);

    // ((lambda-1) l + l^2) / ((lambda-1) l) = 1 + l/(lambda-1)
    const LogElem num = LogElem::log_term(1, lm1()) + LogElem::log_term(2);
    const LogElem q = num.div_monomial(1, lm1());
    CHECK(q == LogElem::one() + LogElem::log_term(1, lm1().inverse()));
    CHECK_THROWS_AS(num.div_monomial(0, RatFunc()), ZeroDivisor);
}

TEST_CASE("exact lambda substitution matches float evaluation") {
    std::mt19937 rng(7);
    for (int i = 0; i < 50; ++i) {
        const LogElem a = random_elem(rng);
        const Rational lam(static_cast<long>(rng() % 5) + 2, 1); // 2..6, clear of the pole
        const EvalExact exact = a.eval_lambda(lam);
        const double direct = a.eval(lam.to_double());
        const double via_exact = exact.to_double(std::log(lam.to_double()));
        CHECK(std::abs(direct - via_exact) <= 1e-12 * (1.0 + std::abs(direct)));
    }
}

TEST_CASE("lambda substitution guards") {
    const LogElem neg = LogElem::log_term(-1);
    CHECK_THROWS_AS(neg.eval_lambda(Rational(1)), DomainError);
    CHECK_THROWS_AS(neg.eval(1.0), DomainError);
    CHECK_THROWS_AS(neg.eval(-2.0), DomainError);
    CHECK_THROWS_AS(neg.eval(0.0), DomainError);
    // nonnegative powers stay formal at lambda = 1 and vanish numerically
    const EvalExact at_one = LogElem::log_symbol().eval_lambda(Rational(1));
    CHECK(at_one.coeff(1) == Rational(1));
    CHECK(at_one.to_double(0.0) == 0.0);
    const RatFunc pole = lm1().inverse();
    CHECK_THROWS_AS(LogElem(pole).eval_lambda(Rational(1)), PoleAtLambda);
}

TEST_CASE("x polynomial arithmetic and evaluation") {
    const XPoly x = XPoly::x();
    const XPoly p = x * x - XPoly(Rational(1)); // x^2 - 1
    CHECK(p.degree() == 2);
    CHECK(p.eval(Rational(3)) == LogElem(Rational(8)));
    CHECK((p * p).degree() == 4);
    CHECK(p - p == XPoly());
    CHECK(XPoly().degree() == -1);

    const XPoly q = x * LogElem::log_symbol() + XPoly(Rational(2));
    CHECK(q.eval(Rational(1, 2)) == LogElem::log_term(1, RatFunc(Rational(1, 2))) + LogElem(Rational(2)));
    CHECK(q.eval(3.0, 2.0) == doctest::Approx(3.0 * std::log(2.0) + 2.0));
}

TEST_CASE("definite integrals in x") {
    const XPoly x = XPoly::x();
    // int_0^1 (x^2 - 1) dx = 1/3 - 1 = -2/3
    CHECK(integrate(x * x - XPoly(Rational(1)), Rational(0), Rational(1)) ==
          LogElem(Rational(-2, 3)));
    // int_1^3 x dx = 4
    CHECK(integrate(x, Rational(1), Rational(3)) == LogElem(Rational(4)));
    CHECK(integrate(XPoly(), Rational(0), Rational(1)).is_zero());

    // the symbolic antiderivative evaluated at the upper bound agrees
    const XPoly p = x * x * LogElem::log_symbol() - x * LogElem(lm1());
    const XPoly f = integrate_to_symbolic(p, Rational(0));
    CHECK(f.eval(Rational(1)) == integrate(p, Rational(0), Rational(1)));
    CHECK(f.eval(Rational(-2)) == integrate(p, Rational(0), Rational(-2)));
    CHECK(f.eval(Rational(0)).is_zero());
}
