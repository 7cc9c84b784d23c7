#ifndef APD_RATIONAL_HPP
#define APD_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <utility>

#include "apd/errors.hpp"

namespace apd {

/// Arbitrary-precision rational, always kept in canonical form
/// (gcd(|num|, den) = 1, den > 0, zero stored as 0/1).
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long n) : v_(static_cast<signed long>(n)) {}
    Rational(long num, long den);
    explicit Rational(mpz_class n) : v_(std::move(n)) {}

    /// Accepts "p", "p/q" and plain decimal literals like "-1.25".
    static Rational from_string(std::string_view s);

    /// Exact value of a finite double (every finite double is dyadic).
    static Rational from_double_exact(double d);

    /// Wraps an mpq that is already canonical (as produced by mpq arithmetic).
    static Rational from_canonical(mpq_class v) { return Rational(std::move(v), canonical_tag{}); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_negative() const { return sgn(v_) < 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    bool is_unit() const { return !is_zero(); }

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    Rational inverse() const;
    Rational pow(long e) const;

    double to_double() const { return v_.get_d(); }
    std::string to_string() const { return v_.get_str(); }

    friend Rational operator+(const Rational& a, const Rational& b) { return from_canonical(a.v_ + b.v_); }
    friend Rational operator-(const Rational& a, const Rational& b) { return from_canonical(a.v_ - b.v_); }
    friend Rational operator*(const Rational& a, const Rational& b) { return from_canonical(a.v_ * b.v_); }
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational operator-() const { return from_canonical(-v_); }

    Rational& operator+=(const Rational& b) { v_ += b.v_; return *this; }
    Rational& operator-=(const Rational& b) { v_ -= b.v_; return *this; }
    Rational& operator*=(const Rational& b) { v_ *= b.v_; return *this; }
    Rational& operator/=(const Rational& b) { *this = *this / b; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    // scalar-ring hooks used by Series<R>
    static Rational one() { return Rational(1); }
    static Rational from_rational(const Rational& q) { return q; }

private:
    struct canonical_tag {};
    Rational(mpq_class v, canonical_tag) : v_(std::move(v)) {}
    mpq_class v_;
};

Rational factorial(unsigned long n);

/// Integer binomial; 0 when k > n.
Rational binomial(unsigned long n, unsigned long k);

/// Generalized binomial binom(x, k) = x(x-1)...(x-k+1)/k!, defined for any
/// rational x (covers negative upper indices such as binom(-2, n)).
Rational binomial(const Rational& x, unsigned long k);

} // namespace apd

#endif
