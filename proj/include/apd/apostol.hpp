#ifndef APD_APOSTOL_HPP
#define APD_APOSTOL_HPP

#include "apd/series.hpp"
#include "apd/xpoly.hpp"

namespace apd {

/// Y_n(lambda) = 2 (-1)^n n! lambda^{2n} / (lambda-1)^{n+1}.
RatFunc y_num(unsigned long n);

/// Y_n(x;lambda) = sum_j binom(n,j) Y_j(lambda) lambda^{n-j} (x)_{n-j}.
XPoly y_poly(unsigned long n);

/// Y_n^{(-k)}(lambda) = 2^{-k} n! binom(k,n) lambda^{2n} (lambda-1)^{k-n};
/// zero when n > k.
RatFunc y_neg_order(unsigned long n, unsigned long k);

/// Q_n(x;lambda,k) = sum_j binom(n,j) Y_j^{(-k)}(lambda) lambda^{n-j} (x)_{n-j}.
XPoly q_poly(unsigned long n, unsigned long k);

/// D_n(lambda), closed form:
/// ((-1)^n n!/(lambda-1)) ((lambda^2/(lambda-1))^n l
///                         - lambda^n sum_{j<n} (1/(n-j)) (lambda/(lambda-1))^j).
LogElem ad_num(unsigned long n);

/// D_n(x;lambda) = (l/2) Y_n(x;lambda)
///               + (1/2) sum_{j<n} n binom(n-1,j) lambda^{n-j} D_{n-j-1} Y_j(x;lambda),
/// with D_m the Daehee numbers.
XPoly ad_poly(unsigned long n);

/// Same family, with the Daehee weights expanded to their explicit values:
/// (l/2) Y_n(x;lambda) - (n!/2) sum_{j<n} (-1)^{n-j} lambda^{n-j} Y_j(x;lambda)/(j!(n-j)).
XPoly ad_poly_explicit(unsigned long n);

/// Generating function (l + log(1+lambda t)) / ((lambda-1) + lambda^2 t),
/// truncated at the given order, over log-ring scalars.
Series<LogElem> ad_gen_series(int order);

/// n-th EGF coefficient of ad_gen_series; throws OrderTooSmall when order < n.
LogElem ad_num_oracle(unsigned long n, int order);

/// n-th EGF coefficient of ad_gen_series times (1+lambda t)^{x0};
/// throws OrderTooSmall when order < n.
LogElem ad_poly_oracle(unsigned long n, const Rational& x0, int order);

/// 2 / ((lambda-1) + lambda^2 t), truncated.
Series<RatFunc> y_gen_series(int order);

/// 2^{-k} ((lambda-1) + lambda^2 t)^k, truncated.
Series<RatFunc> y_neg_gen_series(unsigned long k, int order);

/// Partial sum sum_{n=0}^{N} (-1)^n 2^n Q_m(x0;lambda0,n)/(n+1),
/// computed exactly. Valid for 0 < lambda0 with |lambda0 - 1| < 1.
Rational series_rep_partial_exact(unsigned long m, const Rational& x0, const Rational& lambda0,
                                  unsigned long N);

/// Same sum at a float lambda0 (taken at its exact dyadic value),
/// rounded once at the end.
double series_rep_partial(unsigned long m, const Rational& x0, double lambda0, unsigned long N);

} // namespace apd

#endif
