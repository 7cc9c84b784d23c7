#include "apd/lambda_poly.hpp"

#include <algorithm>

namespace apd {

LambdaPoly::LambdaPoly(const Rational& constant) {
    if (!constant.is_zero()) c_.push_back(constant);
}

LambdaPoly::LambdaPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

LambdaPoly LambdaPoly::monomial(int degree, const Rational& c) {
    LambdaPoly p;
    if (c.is_zero()) return p;
    p.c_.assign(static_cast<std::size_t>(degree) + 1, Rational(0));
    p.c_.back() = c;
    return p;
}

void LambdaPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational LambdaPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return Rational(0);
    return c_[static_cast<std::size_t>(i)];
}

const Rational& LambdaPoly::leading() const {
    static const Rational zero(0);
    return c_.empty() ? zero : c_.back();
}

LambdaPoly operator+(const LambdaPoly& a, const LambdaPoly& b) {
    LambdaPoly r;
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r.c_[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r.c_[i] += b.c_[i];
    r.trim();
    return r;
}

LambdaPoly operator-(const LambdaPoly& a, const LambdaPoly& b) {
    LambdaPoly r;
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r.c_[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r.c_[i] -= b.c_[i];
    r.trim();
    return r;
}

LambdaPoly operator*(const LambdaPoly& a, const LambdaPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    LambdaPoly r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    r.trim();
    return r;
}

LambdaPoly LambdaPoly::operator-() const {
    LambdaPoly r;
    r.c_.reserve(c_.size());
    for (const auto& c : c_) r.c_.push_back(-c);
    return r;
}

LambdaPoly operator*(const LambdaPoly& a, const Rational& s) {
    if (s.is_zero()) return {};
    LambdaPoly r;
    r.c_.reserve(a.c_.size());
    for (const auto& c : a.c_) r.c_.push_back(c * s);
    return r;
}

LambdaPoly LambdaPoly::pow(unsigned long e) const {
    LambdaPoly result{Rational(1)};
    LambdaPoly base = *this;
    while (e > 0) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

void LambdaPoly::div_rem(const LambdaPoly& a, const LambdaPoly& b, LambdaPoly& q, LambdaPoly& r) {
    if (b.is_zero()) throw ZeroDivisor("polynomial division by zero");
    q = LambdaPoly();
    r = a;
    const int db = b.degree();
    const Rational lb_inv = b.leading().inverse();
    std::vector<Rational> qc;
    if (r.degree() >= db) qc.assign(static_cast<std::size_t>(r.degree() - db) + 1, Rational(0));
    while (!r.is_zero() && r.degree() >= db) {
        const int shift = r.degree() - db;
        const Rational factor = r.leading() * lb_inv;
        qc[static_cast<std::size_t>(shift)] = factor;
        r = r - LambdaPoly::monomial(shift, factor) * b;
    }
    q = LambdaPoly(std::move(qc));
}

LambdaPoly LambdaPoly::gcd(LambdaPoly a, LambdaPoly b) {
    while (!b.is_zero()) {
        LambdaPoly q, r;
        div_rem(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
        if (!b.is_zero()) b = b * b.leading().inverse(); // keep remainders monic
    }
    if (a.is_zero()) return a;
    return a * a.leading().inverse();
}

Rational LambdaPoly::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

double LambdaPoly::eval(double x) const { return static_cast<double>(eval_ld(x)); }

long double LambdaPoly::eval_ld(long double x) const {
    long double acc = 0.0L;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * x + static_cast<long double>(it->to_double());
    return acc;
}

} // namespace apd
