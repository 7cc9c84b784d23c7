#include "doctest.h"

#include <random>

#include "apd/numbers.hpp"
#include "apd/series.hpp"

using namespace apd;

using QSeries = Series<Rational>;

TEST_CASE("series construction and indexing") {
    QSeries s(3);
    CHECK(s.order() == 3);
    CHECK(s.coeff(2) == Rational(0));
    s.set_coeff(2, Rational(5));
    CHECK(s.coeff(2) == Rational(5));
    CHECK(s.egf_coeff(2) == Rational(10)); // 5 * 2!
    CHECK_THROWS_AS(s.coeff(4), IndexBeyondOrder);
    CHECK_THROWS_AS(s.set_coeff(-1, Rational(1)), IndexBeyondOrder);
    CHECK_THROWS_AS(QSeries(-1), BadIndex);
    CHECK_THROWS_AS(QSeries(1, {Rational(1), Rational(2), Rational(3)}), OrderMismatch);
    CHECK(QSeries::monomial(4, 2, Rational(7)).coeff(2) == Rational(7));
    CHECK_THROWS_AS(QSeries::monomial(4, -1, Rational(7)), BadIndex);
}

TEST_CASE("series order discipline") {
    const QSeries a = QSeries::constant(3, Rational(1));
    const QSeries b = QSeries::constant(2, Rational(1));
    CHECK_THROWS_AS(a + b, OrderMismatch);
    CHECK_THROWS_AS(a - b, OrderMismatch);
    CHECK_THROWS_AS(a * b, OrderMismatch);
    CHECK(a.truncated(2) == b);
    CHECK_THROWS_AS(b.truncated(3), OrderMismatch);
}

TEST_CASE("shifting down divides by t") {
    QSeries s(2);
    s.set_coeff(1, Rational(4));
    s.set_coeff(2, Rational(6));
    const QSeries d = s.shifted_down();
    CHECK(d.order() == 1);
    CHECK(d.coeff(0) == Rational(4));
    CHECK(d.coeff(1) == Rational(6));
    s.set_coeff(0, Rational(1));
    CHECK_THROWS_AS(s.shifted_down(), DomainError);
    CHECK_THROWS_AS(QSeries::constant(0, Rational(0)).shifted_down(), OrderMismatch);
}

TEST_CASE("geometric series inverse") {
    // (1 - t)^{-1} = 1 + t + t^2 + ...
    QSeries s = QSeries::constant(6, Rational(1));
    s.set_coeff(1, Rational(-1));
    const QSeries inv = s.inverse();
    for (int n = 0; n <= 6; ++n) CHECK(inv.coeff(n) == Rational(1));
    CHECK(s * inv == QSeries::constant(6, Rational(1)));
}

TEST_CASE("inverse requires a unit constant term") {
    CHECK_THROWS_AS(QSeries(3).inverse(), NonUnitConstantTerm);
    CHECK_THROWS_AS(QSeries::monomial(3, 1, Rational(1)).inverse(), NonUnitConstantTerm);
}

TEST_CASE("random series satisfy s * s^{-1} = 1") {
    std::mt19937 rng(4242);
    for (int i = 0; i < 50; ++i) {
        QSeries s(8);
        s.set_coeff(0, Rational(static_cast<long>(rng() % 6) + 1, static_cast<long>(rng() % 3) + 1));
        for (int k = 1; k <= 8; ++k)
            s.set_coeff(k, Rational(static_cast<long>(rng() % 11) - 5, static_cast<long>(rng() % 4) + 1));
        CHECK(s * s.inverse() == QSeries::constant(8, Rational(1)));
    }
}

TEST_CASE("series powers") {
    QSeries s = QSeries::constant(5, Rational(1));
    s.set_coeff(1, Rational(1)); // 1 + t
    const QSeries p = s.pow(4);
    for (int k = 0; k <= 4; ++k) CHECK(p.coeff(k) == binomial(4ul, static_cast<unsigned long>(k)));
    CHECK(p.coeff(5) == Rational(0));
    CHECK(s.pow(0) == QSeries::constant(5, Rational(1)));
}

TEST_CASE("log and binomial builders") {
    const QSeries l = log1p_series(Rational(2), 4); // log(1 + 2t)
    CHECK(l.coeff(0) == Rational(0));
    CHECK(l.coeff(1) == Rational(2));
    CHECK(l.coeff(2) == Rational(-2));    // -4/2
    CHECK(l.coeff(3) == Rational(8, 3));
    CHECK(l.coeff(4) == Rational(-4));    // -16/4

    const QSeries b = binom_pow_series(Rational(1, 2), Rational(1), 3); // (1+t)^{1/2}
    CHECK(b.coeff(0) == Rational(1));
    CHECK(b.coeff(1) == Rational(1, 2));
    CHECK(b.coeff(2) == Rational(-1, 8));
    CHECK(b.coeff(3) == Rational(1, 16));

    // integer exponents terminate
    const QSeries sq = binom_pow_series(Rational(2), Rational(3), 4); // (1+3t)^2
    CHECK(sq.coeff(1) == Rational(6));
    CHECK(sq.coeff(2) == Rational(9));
    CHECK(sq.coeff(3) == Rational(0));

    const QSeries e = exp_series(Rational(-2), 3);
    CHECK(e.coeff(0) == Rational(1));
    CHECK(e.coeff(2) == Rational(2));      // 4/2!
    CHECK(e.coeff(3) == Rational(-4, 3));  // -8/3!
}

TEST_CASE("builders over rational-function scalars") {
    const Series<RatFunc> b = binom_pow_series(Rational(1, 2), RatFunc::lambda(), 4);
    CHECK(b.coeff(2) == RatFunc(LambdaPoly::monomial(2, Rational(-1, 8))));
    const Series<RatFunc> l = log1p_series(RatFunc::lambda(), 3);
    CHECK(l.coeff(3) == RatFunc(LambdaPoly::monomial(3, Rational(1, 3))));
}

TEST_CASE("daehee and cauchy generating functions") {
    const int order = 12;
    // F(t) = log(1+t)/t generates D_n; its reciprocal generates b_n(0).
    const QSeries f = log1p_series(Rational(1), order + 1).shifted_down();
    for (int n = 0; n <= order; ++n)
        CHECK(f.egf_coeff(n) == daehee_number(static_cast<unsigned long>(n)));
    const QSeries g = f.inverse();
    for (int n = 0; n <= order; ++n)
        CHECK(g.egf_coeff(n) == cauchy_number(static_cast<unsigned long>(n)));
}

TEST_CASE("stirling numbers from the log power generating function") {
    const int order = 10;
    const QSeries l = log1p_series(Rational(1), order);
    for (unsigned long k = 0; k <= 6; ++k) {
        const QSeries gf = l.pow(k) * factorial(k).inverse();
        for (int n = 0; n <= order; ++n)
            CHECK(gf.egf_coeff(n) == stirling1(n, static_cast<long>(k)));
    }
}

TEST_CASE("bernstein basis from its exponential generating function") {
    // sum_n B_k^n(x) t^n/n! = (xt)^k e^{(1-x)t} / k!
    const int order = 8;
    for (const Rational& x0 : {Rational(0), Rational(1, 2), Rational(1)}) {
        for (unsigned long k = 0; k <= 8; ++k) {
            const QSeries gf = QSeries::monomial(order, static_cast<int>(k),
                                                 x0.pow(static_cast<long>(k)) / factorial(k)) *
                               exp_series(Rational(1) - x0, order);
            for (int n = 0; n <= order; ++n)
                CHECK(gf.egf_coeff(n) ==
                      bernstein_basis(k, static_cast<unsigned long>(n), x0));
        }
    }
}
