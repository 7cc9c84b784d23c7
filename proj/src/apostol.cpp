#include "apd/apostol.hpp"

#include <cmath>
#include <vector>

#include "apd/errors.hpp"
#include "apd/numbers.hpp"

namespace apd {

namespace {

LambdaPoly lambda_minus_one() {
    return LambdaPoly(std::vector<Rational>{Rational(-1), Rational(1)});
}

Rational sign(unsigned long parity) { return parity % 2 == 0 ? Rational(1) : Rational(-1); }

// (lambda-1) + lambda^2 t, the shared denominator of the Y and D
// generating functions, over any scalar ring embedding RatFunc.
template <typename R>
Series<R> gen_denominator(int order) {
    Series<R> d(order);
    d.set_coeff(0, R(RatFunc(lambda_minus_one())));
    if (order >= 1) d.set_coeff(1, R(RatFunc(LambdaPoly::monomial(2))));
    return d;
}

} // namespace

RatFunc y_num(unsigned long n) {
    const Rational c = sign(n) * Rational(2) * factorial(n);
    return RatFunc(LambdaPoly::monomial(static_cast<int>(2 * n), c), lambda_minus_one().pow(n + 1));
}

XPoly y_poly(unsigned long n) {
    XPoly acc;
    for (unsigned long j = 0; j <= n; ++j) {
        const RatFunc c = RatFunc(binomial(n, j)) * y_num(j) * RatFunc::lambda_power(static_cast<long>(n - j));
        acc += falling_factorial_poly(n - j) * LogElem(c);
    }
    return acc;
}

RatFunc y_neg_order(unsigned long n, unsigned long k) {
    if (n > k) return RatFunc();
    const Rational c = factorial(n) * binomial(k, n) * Rational(1, 2).pow(static_cast<long>(k));
    return RatFunc(LambdaPoly::monomial(static_cast<int>(2 * n), c) * lambda_minus_one().pow(k - n));
}

XPoly q_poly(unsigned long n, unsigned long k) {
    XPoly acc;
    for (unsigned long j = 0; j <= n && j <= k; ++j) {
        const RatFunc c = RatFunc(binomial(n, j)) * y_neg_order(j, k) * RatFunc::lambda_power(static_cast<long>(n - j));
        acc += falling_factorial_poly(n - j) * LogElem(c);
    }
    return acc;
}

LogElem ad_num(unsigned long n) {
    const Rational s = sign(n) * factorial(n);
    const RatFunc log_coeff(LambdaPoly::monomial(static_cast<int>(2 * n), s), lambda_minus_one().pow(n + 1));
    RatFunc inner; // sum_{j<n} (1/(n-j)) (lambda/(lambda-1))^j
    for (unsigned long j = 0; j < n; ++j)
        inner += RatFunc(LambdaPoly::monomial(static_cast<int>(j), Rational(1, static_cast<long>(n - j))),
                         lambda_minus_one().pow(j));
    const RatFunc free_coeff =
        RatFunc(LambdaPoly::monomial(static_cast<int>(n), -s), lambda_minus_one()) * inner;
    return LogElem::log_term(1, log_coeff) + LogElem(free_coeff);
}

XPoly ad_poly(unsigned long n) {
    XPoly acc = y_poly(n) * LogElem::log_term(1, RatFunc(Rational(1, 2)));
    for (unsigned long j = 0; j < n; ++j) {
        const Rational w = Rational(static_cast<long>(n), 2) * binomial(n - 1, j) * daehee_number(n - j - 1);
        acc += y_poly(j) * LogElem(RatFunc::lambda_power(static_cast<long>(n - j)) * RatFunc(w));
    }
    return acc;
}

XPoly ad_poly_explicit(unsigned long n) {
    XPoly acc = y_poly(n) * LogElem::log_term(1, RatFunc(Rational(1, 2)));
    const Rational half_fact = factorial(n) / Rational(2);
    for (unsigned long j = 0; j < n; ++j) {
        const Rational w = -sign(n - j) * half_fact / (factorial(j) * Rational(static_cast<long>(n - j)));
        acc += y_poly(j) * LogElem(RatFunc::lambda_power(static_cast<long>(n - j)) * RatFunc(w));
    }
    return acc;
}

Series<LogElem> ad_gen_series(int order) {
    Series<LogElem> num = log1p_series(LogElem(RatFunc::lambda()), order);
    num.set_coeff(0, LogElem::log_symbol());
    return num * gen_denominator<LogElem>(order).inverse();
}

LogElem ad_num_oracle(unsigned long n, int order) {
    if (order < static_cast<int>(n))
        throw OrderTooSmall("series order " + std::to_string(order) + " below requested index " + std::to_string(n));
    return ad_gen_series(order).egf_coeff(static_cast<int>(n));
}

LogElem ad_poly_oracle(unsigned long n, const Rational& x0, int order) {
    if (order < static_cast<int>(n))
        throw OrderTooSmall("series order " + std::to_string(order) + " below requested index " + std::to_string(n));
    const Series<LogElem> powered = binom_pow_series(x0, LogElem(RatFunc::lambda()), order);
    return (ad_gen_series(order) * powered).egf_coeff(static_cast<int>(n));
}

Series<RatFunc> y_gen_series(int order) {
    return gen_denominator<RatFunc>(order).inverse() * RatFunc(Rational(2));
}

Series<RatFunc> y_neg_gen_series(unsigned long k, int order) {
    return gen_denominator<RatFunc>(order).pow(k) * RatFunc(Rational(1, 2).pow(static_cast<long>(k)));
}

double series_rep_partial(unsigned long m, const Rational& x0, double lambda0, unsigned long N) {
    if (!(lambda0 > 0.0) || !(std::abs(lambda0 - 1.0) < 1.0))
        throw DomainError("series representation needs 0 < lambda with |lambda - 1| < 1");
    return series_rep_partial_exact(m, x0, Rational::from_double_exact(lambda0), N).to_double();
}

Rational series_rep_partial_exact(unsigned long m, const Rational& x0, const Rational& lambda0,
                                  unsigned long N) {
    Rational gap = lambda0 - Rational(1);
    if (gap.is_negative()) gap = -gap;
    if (!(Rational(0) < lambda0) || !(gap < Rational(1)))
        throw DomainError("series representation needs 0 < lambda with |lambda - 1| < 1");
    // Termwise this is sign * 2^n/(n+1) * Q_m^{(-n)}(x0); the 2^n cancels
    // against the 2^{-n} inside the negative-order numbers, leaving
    //   sign/(n+1) * sum_j binom(m,j) j! binom(n,j) lambda0^{m+j}
    //                      (lambda0-1)^{n-j} (x0)_{m-j},
    // assembled from scalars so no symbolic polynomial is built per term.
    // The terms are orders of magnitude larger than the sum they cancel to,
    // so everything stays rational until the caller converts.
    const Rational shifted = lambda0 - Rational(1);
    std::vector<Rational> outer(m + 1);
    for (unsigned long j = 0; j <= m; ++j)
        outer[j] = binomial(m, j) * factorial(j) * lambda0.pow(static_cast<long>(m + j)) *
                   falling_factorial(x0, m - j);
    Rational acc;
    std::vector<Rational> win(m + 1, Rational(1)); // win[j] = shifted^{n-j} once n >= j
    for (unsigned long n = 0; n <= N; ++n) {
        Rational term;
        for (unsigned long j = 0; j <= m; ++j) term += outer[j] * binomial(n, j) * win[j];
        acc += sign(n) * term / Rational(static_cast<long>(n) + 1);
        for (unsigned long j = m; j > 0; --j) win[j] = win[j - 1];
        win[0] *= shifted;
    }
    return acc;
}

} // namespace apd
