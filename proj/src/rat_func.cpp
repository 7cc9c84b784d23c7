#include "apd/rat_func.hpp"

namespace apd {

RatFunc::RatFunc(LambdaPoly num, LambdaPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw ZeroDenominator("rational function with zero denominator");
    normalize();
}

void RatFunc::normalize() {
    if (num_.is_zero()) {
        den_ = LambdaPoly(Rational(1));
        return;
    }
    const LambdaPoly g = LambdaPoly::gcd(num_, den_);
    if (g.degree() > 0) {
        LambdaPoly q, r;
        LambdaPoly::div_rem(num_, g, q, r);
        num_ = q;
        LambdaPoly::div_rem(den_, g, q, r);
        den_ = q;
    }
    const Rational lc = den_.leading();
    if (!(lc == Rational(1))) {
        const Rational inv = lc.inverse();
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

RatFunc RatFunc::lambda_power(long k) {
    if (k >= 0) return RatFunc(LambdaPoly::monomial(static_cast<int>(k)));
    RatFunc r;
    r.num_ = LambdaPoly(Rational(1));
    r.den_ = LambdaPoly::monomial(static_cast<int>(-k));
    return r;
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw ZeroDivisor("inverse of the zero rational function");
    RatFunc r;
    r.num_ = den_;
    r.den_ = num_;
    const Rational lc = r.den_.leading();
    if (!(lc == Rational(1))) {
        const Rational inv = lc.inverse();
        r.num_ = r.num_ * inv;
        r.den_ = r.den_ * inv;
    }
    return r;
}

RatFunc RatFunc::pow(long e) const {
    if (e == 0) return one();
    const RatFunc base = e < 0 ? inverse() : *this;
    unsigned long n = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    RatFunc r;
    r.num_ = base.num_.pow(n);
    r.den_ = base.den_.pow(n); // gcd(num,den)=1 is preserved under powers, den stays monic
    return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw ZeroDivisor("division by the zero rational function");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

RatFunc RatFunc::operator-() const {
    RatFunc r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Rational RatFunc::eval(const Rational& lambda0) const {
    const Rational d = den_.eval(lambda0);
    if (d.is_zero())
        throw PoleAtLambda("denominator vanishes at lambda = " + lambda0.to_string());
    return num_.eval(lambda0) / d;
}

double RatFunc::eval(double lambda0) const { return static_cast<double>(eval_ld(lambda0)); }

long double RatFunc::eval_ld(long double lambda0) const {
    const long double d = den_.eval_ld(lambda0);
    if (d == 0.0L)
        throw PoleAtLambda("denominator vanishes at lambda = " +
                           std::to_string(static_cast<double>(lambda0)));
    return num_.eval_ld(lambda0) / d;
}

} // namespace apd
