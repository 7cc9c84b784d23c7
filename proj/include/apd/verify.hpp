#ifndef APD_VERIFY_HPP
#define APD_VERIFY_HPP

#include <string>
#include <variant>
#include <vector>

#include "apd/apostol.hpp"

namespace apd {

/// Outcome of one identity check. Exact checks carry a ring element as
/// residual and pass only when it is the zero element; the numeric check
/// carries a float residual compared against its tolerance.
struct VerifyReport {
    std::string identity;
    std::string params;
    bool passed = false;
    std::variant<LogElem, XPoly, double> residual;
    std::string detail;
};

/// Binomial convolution of two polynomial families against the
/// Chu-Vandermonde value: expands the triple sum
///   A(mu) = sum_{k,n,j} binom(mu,k) binom(-2,n) binom(mu-k,j)
///           n! S1(k,n) D_j(x0) D_{mu-k-j}(y0) / l^n
/// for mu in {m-2, m-1, m}, assembles
///   (lambda^{4-m} m(m-1) A(m-2) + 2 lambda^{2-m}(lambda-1) m A(m-1)
///    + lambda^{-m}(lambda-1)^2 A(m)) / l^2,
/// and asserts that after dividing by m! everything but the constant
/// term cancels and the constant equals binom(x0+y0, m).
/// Requires m >= 2 (throws BadIndex).
VerifyReport check_binomial_expansion(unsigned long m, const Rational& x0, const Rational& y0);

/// Finite sum sum_{j<n} (1/(n-j)) (lambda/(lambda-1))^j against its
/// closed form in terms of ad_num(n); the log terms of the right-hand
/// side must cancel exactly. Requires n >= 1 (throws BadIndex).
VerifyReport check_finite_sum(unsigned long n);

/// Integral of ad_poly(n) over [0,1] against the Cauchy-number
/// convolution sum_m binom(n,m) lambda^m cauchy(m) ad_num(n-m). Exact.
VerifyReport check_integral_unit(unsigned long n);

/// Integral of ad_poly(n) from 0 to a symbolic upper bound against
/// (1/(n+1)) sum_m binom(n+1,m) lambda^{m-1} cauchy(m)
///           (ad_poly(n+1-m) - ad_num(n+1-m)), coefficientwise. Exact.
VerifyReport check_integral_to_z(unsigned long n);

/// Reconstructs the weight p_m from the integral formula
/// int_0^1 ad_poly(i) = sum_j j! binom(i,j) lambda^j ad_num(i-j) p_j
/// by triangular solving, then confirms m! p_m = cauchy(m). Exact.
VerifyReport check_cauchy_weights(unsigned long m);

/// Partial sum of the alternating Q-family series against the closed
/// form, both substituted exactly at the dyadic lambda0 (only log lambda0
/// rounds); passes when the gap is within tol * (1 + |closed form|).
/// Requires 0 < lambda0, lambda0 != 1, |lambda0 - 1| < 1 (throws
/// DomainError).
VerifyReport check_series_representation(unsigned long m, const Rational& x0, double lambda0,
                                         unsigned long N, double tol);

/// Knobs for run_suite; the defaults match the tolerances the identity
/// demands at lambda0 = 1.25.
struct SuiteOptions {
    double series_lambda0 = 1.25;
    unsigned long series_terms = 60;
    double series_tol = 1e-9;
};

/// Deterministic sweep of every check over indices <= max_n with
/// `samples` random rational arguments (|num| <= 20, den <= 20) drawn
/// from a seeded generator. Reports come back sorted by identity name,
/// then parameter string. Requires max_n >= 2.
std::vector<VerifyReport> run_suite(unsigned long max_n, unsigned long samples, unsigned long seed,
                                    const SuiteOptions& options = {});

} // namespace apd

#endif
