#ifndef APD_LAMBDA_POLY_HPP
#define APD_LAMBDA_POLY_HPP

#include <vector>

#include "apd/rational.hpp"

namespace apd {

/// Dense polynomial in lambda with rational coefficients.
/// Zero is the empty coefficient vector; otherwise the leading
/// coefficient is nonzero.
class LambdaPoly {
public:
    LambdaPoly() = default;
    LambdaPoly(const Rational& constant);
    LambdaPoly(int constant) : LambdaPoly(Rational(constant)) {}
    explicit LambdaPoly(std::vector<Rational> coeffs);

    static LambdaPoly monomial(int degree, const Rational& c = Rational(1));
    static LambdaPoly lambda() { return monomial(1); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    Rational coeff(int i) const;
    const Rational& leading() const;
    const std::vector<Rational>& coeffs() const { return c_; }

    friend LambdaPoly operator+(const LambdaPoly& a, const LambdaPoly& b);
    friend LambdaPoly operator-(const LambdaPoly& a, const LambdaPoly& b);
    friend LambdaPoly operator*(const LambdaPoly& a, const LambdaPoly& b);
    LambdaPoly operator-() const;
    friend LambdaPoly operator*(const LambdaPoly& a, const Rational& s);
    friend LambdaPoly operator*(const Rational& s, const LambdaPoly& a) { return a * s; }
    friend bool operator==(const LambdaPoly& a, const LambdaPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const LambdaPoly& a, const LambdaPoly& b) { return !(a == b); }

    LambdaPoly pow(unsigned long e) const;

    /// Euclidean division; b must be nonzero.
    static void div_rem(const LambdaPoly& a, const LambdaPoly& b, LambdaPoly& q, LambdaPoly& r);

    /// Monic gcd over the rationals; gcd(0, 0) = 0.
    static LambdaPoly gcd(LambdaPoly a, LambdaPoly b);

    Rational eval(const Rational& x) const;
    double eval(double x) const;
    long double eval_ld(long double x) const;

private:
    void trim();
    std::vector<Rational> c_;
};

} // namespace apd

#endif
