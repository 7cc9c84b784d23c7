#ifndef APD_NUMBERS_HPP
#define APD_NUMBERS_HPP

#include <utility>

#include "apd/rational.hpp"
#include "apd/xpoly.hpp"

namespace apd {

/// Signed Stirling number of the first kind S1(n,k), defined by
/// (x)_n = sum_k S1(n,k) x^k. Out-of-triangle indices give 0.
/// Values are cached; safe to call concurrently.
Rational stirling1(long n, long k);

/// (x0)_n = x0 (x0-1) ... (x0-n+1); empty product for n = 0.
Rational falling_factorial(const Rational& x0, unsigned long n);

/// The same product with x left symbolic.
XPoly falling_factorial_poly(unsigned long n);

/// D_n = (-1)^n n! / (n+1).
Rational daehee_number(unsigned long n);

/// b_n(0) = sum_{m<=n} S1(n,m)/(m+1); equals the integral of (x)_n over [0,1].
Rational cauchy_number(unsigned long n);

/// B_k^n(x0) = binom(n,k) x0^k (1-x0)^(n-k); zero when k > n.
Rational bernstein_basis(unsigned long k, unsigned long n, const Rational& x0);

/// Both sides of the Chu-Vandermonde identity:
/// first = binom(x0+y0, n), second = (1/n!) sum_k binom(n,k)(x0)_k(y0)_{n-k}.
std::pair<Rational, Rational> chu_vandermonde_sides(const Rational& x0, const Rational& y0, unsigned long n);

} // namespace apd

#endif
