#ifndef APD_XPOLY_HPP
#define APD_XPOLY_HPP

#include <vector>

#include "apd/log_elem.hpp"

namespace apd {

/// Polynomial in x whose coefficients live in the log-lambda ring.
class XPoly {
public:
    XPoly() = default;
    XPoly(const LogElem& constant);
    XPoly(const RatFunc& constant) : XPoly(LogElem(constant)) {}
    XPoly(const Rational& constant) : XPoly(LogElem(constant)) {}
    explicit XPoly(std::vector<LogElem> coeffs);

    static XPoly monomial(int degree, const LogElem& c = LogElem::one());
    static XPoly x() { return monomial(1); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    LogElem coeff(int i) const;
    const std::vector<LogElem>& coeffs() const { return c_; }

    friend XPoly operator+(const XPoly& a, const XPoly& b);
    friend XPoly operator-(const XPoly& a, const XPoly& b);
    friend XPoly operator*(const XPoly& a, const XPoly& b);
    XPoly operator-() const;
    friend XPoly operator*(const XPoly& a, const LogElem& s);
    friend XPoly operator*(const LogElem& s, const XPoly& a) { return a * s; }
    XPoly& operator+=(const XPoly& b) { *this = *this + b; return *this; }
    XPoly& operator-=(const XPoly& b) { *this = *this - b; return *this; }

    friend bool operator==(const XPoly& a, const XPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const XPoly& a, const XPoly& b) { return !(a == b); }

    /// Horner evaluation at a rational x.
    LogElem eval(const Rational& x0) const;

    /// Numeric evaluation: coefficients at lambda0, then Horner in x0.
    double eval(double x0, double lambda0) const;

private:
    void trim();
    std::vector<LogElem> c_;
};

/// Exact definite integral of p in x between rational bounds.
LogElem integrate(const XPoly& p, const Rational& lower, const Rational& upper);

/// Exact integral from a rational lower bound to a symbolic upper bound;
/// the result is the antiderivative in the new variable minus its value
/// at the lower bound.
XPoly integrate_to_symbolic(const XPoly& p, const Rational& lower);

} // namespace apd

#endif
