#ifndef APD_RAT_FUNC_HPP
#define APD_RAT_FUNC_HPP

#include "apd/lambda_poly.hpp"

namespace apd {

/// Rational function in lambda, kept in canonical form:
/// gcd(num, den) = 1 over the rationals and den monic.
/// Equality is therefore plain field-by-field comparison.
class RatFunc {
public:
    RatFunc() : num_(), den_(Rational(1)) {}
    RatFunc(const Rational& c) : num_(c), den_(Rational(1)) {}
    RatFunc(int c) : RatFunc(Rational(c)) {}
    RatFunc(LambdaPoly num) : num_(std::move(num)), den_(Rational(1)) {}
    RatFunc(LambdaPoly num, LambdaPoly den);

    /// lambda^k for any integer k (negative k gives 1/lambda^|k|).
    static RatFunc lambda_power(long k);
    static RatFunc lambda() { return lambda_power(1); }

    const LambdaPoly& num() const { return num_; }
    const LambdaPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_unit() const { return !is_zero(); }
    bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }

    RatFunc inverse() const;
    RatFunc pow(long e) const;

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc operator-() const;
    RatFunc& operator+=(const RatFunc& b) { *this = *this + b; return *this; }
    RatFunc& operator-=(const RatFunc& b) { *this = *this - b; return *this; }
    RatFunc& operator*=(const RatFunc& b) { *this = *this * b; return *this; }

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    /// Substitute a rational lambda; throws PoleAtLambda when the
    /// denominator vanishes there.
    Rational eval(const Rational& lambda0) const;
    double eval(double lambda0) const;
    long double eval_ld(long double lambda0) const;

    // scalar-ring hooks used by Series<R>
    static RatFunc one() { return RatFunc(Rational(1)); }
    static RatFunc from_rational(const Rational& q) { return RatFunc(q); }

private:
    void normalize();
    LambdaPoly num_;
    LambdaPoly den_;
};

} // namespace apd

#endif
