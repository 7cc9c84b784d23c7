#include "apd/xpoly.hpp"

#include <algorithm>

namespace apd {

XPoly::XPoly(const LogElem& constant) {
    if (!constant.is_zero()) c_.push_back(constant);
}

XPoly::XPoly(std::vector<LogElem> coeffs) : c_(std::move(coeffs)) { trim(); }

XPoly XPoly::monomial(int degree, const LogElem& c) {
    XPoly p;
    if (c.is_zero()) return p;
    p.c_.assign(static_cast<std::size_t>(degree) + 1, LogElem());
    p.c_.back() = c;
    return p;
}

void XPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

LogElem XPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return LogElem();
    return c_[static_cast<std::size_t>(i)];
}

XPoly operator+(const XPoly& a, const XPoly& b) {
    XPoly r;
    r.c_.resize(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r.c_[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r.c_[i] += b.c_[i];
    r.trim();
    return r;
}

XPoly operator-(const XPoly& a, const XPoly& b) { return a + (-b); }

XPoly XPoly::operator-() const {
    XPoly r;
    r.c_.reserve(c_.size());
    for (const auto& c : c_) r.c_.push_back(-c);
    return r;
}

XPoly operator*(const XPoly& a, const XPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    XPoly r;
    r.c_.resize(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    r.trim();
    return r;
}

XPoly operator*(const XPoly& a, const LogElem& s) {
    XPoly r;
    if (s.is_zero()) return r;
    r.c_.reserve(a.c_.size());
    for (const auto& c : a.c_) r.c_.push_back(c * s);
    r.trim();
    return r;
}

LogElem XPoly::eval(const Rational& x0) const {
    LogElem acc;
    const RatFunc xs{x0};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * xs + *it;
    return acc;
}

double XPoly::eval(double x0, double lambda0) const {
    long double acc = 0.0L;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x0 + it->eval_ld(lambda0);
    return static_cast<double>(acc);
}

namespace {

// Termwise antiderivative with zero constant term.
XPoly antiderivative(const XPoly& p) {
    std::vector<LogElem> out(static_cast<std::size_t>(p.degree()) + 2);
    for (int i = 0; i <= p.degree(); ++i)
        out[static_cast<std::size_t>(i) + 1] = p.coeff(i) * RatFunc(Rational(1, i + 1));
    return XPoly(std::move(out));
}

} // namespace

LogElem integrate(const XPoly& p, const Rational& lower, const Rational& upper) {
    if (p.is_zero()) return LogElem();
    const XPoly a = antiderivative(p);
    return a.eval(upper) - a.eval(lower);
}

XPoly integrate_to_symbolic(const XPoly& p, const Rational& lower) {
    if (p.is_zero()) return XPoly();
    XPoly a = antiderivative(p);
    return a - XPoly(a.eval(lower));
}

} // namespace apd
