#include "apd/log_elem.hpp"

#include <cmath>

namespace apd {

EvalExact::EvalExact(std::map<long, Rational> terms) : t_(std::move(terms)) {
    for (auto it = t_.begin(); it != t_.end();) {
        if (it->second.is_zero())
            it = t_.erase(it);
        else
            ++it;
    }
}

Rational EvalExact::coeff(long e) const {
    auto it = t_.find(e);
    return it == t_.end() ? Rational(0) : it->second;
}

double EvalExact::to_double(double log_lambda0) const {
    double acc = 0.0;
    for (const auto& [e, c] : t_) acc += c.to_double() * std::pow(log_lambda0, static_cast<double>(e));
    return acc;
}

LogElem::LogElem(const RatFunc& c) {
    if (!c.is_zero()) t_.emplace(0, c);
}

LogElem LogElem::log_term(long e, const RatFunc& c) {
    LogElem r;
    if (!c.is_zero()) r.t_.emplace(e, c);
    return r;
}

RatFunc LogElem::coeff(long e) const {
    auto it = t_.find(e);
    return it == t_.end() ? RatFunc() : it->second;
}

long LogElem::min_exp() const { return t_.empty() ? 0 : t_.begin()->first; }
long LogElem::max_exp() const { return t_.empty() ? 0 : t_.rbegin()->first; }

void LogElem::insert_term(long e, RatFunc c) {
    if (c.is_zero()) return;
    auto it = t_.find(e);
    if (it == t_.end()) {
        t_.emplace(e, std::move(c));
    } else {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

LogElem& LogElem::operator+=(const LogElem& b) {
    for (const auto& [e, c] : b.t_) {
        auto [it, inserted] = t_.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }
    return *this;
}

LogElem operator+(const LogElem& a, const LogElem& b) {
    LogElem r = a;
    r += b;
    return r;
}

LogElem operator-(const LogElem& a, const LogElem& b) { return a + (-b); }

LogElem LogElem::operator-() const {
    LogElem r;
    for (const auto& [e, c] : t_) r.t_.emplace(e, -c);
    return r;
}

LogElem operator*(const LogElem& a, const LogElem& b) {
    LogElem r;
    for (const auto& [ea, ca] : a.t_)
        for (const auto& [eb, cb] : b.t_) r.insert_term(ea + eb, ca * cb);
    return r;
}

LogElem operator*(const LogElem& a, const RatFunc& s) {
    LogElem r;
    if (s.is_zero()) return r;
    for (const auto& [e, c] : a.t_) r.t_.emplace(e, c * s);
    return r;
}

LogElem LogElem::inverse() const {
    if (is_zero()) throw ZeroDivisor("inverse of the zero element");
    if (!is_unit()) throw ZeroDivisor("element with several log powers is not a unit");
    const auto& [e, c] = *t_.begin();
    return log_term(-e, c.inverse());
}

LogElem LogElem::div_monomial(long e, const RatFunc& c) const {
    if (c.is_zero()) throw ZeroDivisor("division by a zero coefficient");
    const RatFunc inv = c.inverse();
    LogElem r;
    for (const auto& [exp, coeff] : t_) r.t_.emplace(exp - e, coeff * inv);
    return r;
}

EvalExact LogElem::eval_lambda(const Rational& lambda0) const {
    if (lambda0 == Rational(1) && min_exp() < 0)
        throw DomainError("lambda = 1 maps the log symbol to zero; negative powers undefined");
    std::map<long, Rational> out;
    for (const auto& [e, c] : t_) {
        const Rational v = c.eval(lambda0); // PoleAtLambda propagates
        if (!v.is_zero()) out.emplace(e, v);
    }
    return EvalExact(std::move(out));
}

double LogElem::eval(double lambda0) const { return static_cast<double>(eval_ld(lambda0)); }

long double LogElem::eval_ld(long double lambda0) const {
    if (lambda0 <= 0.0L || lambda0 == 1.0L)
        throw DomainError("numeric evaluation needs lambda > 0, lambda != 1");
    const long double log_l = std::log(lambda0);
    long double acc = 0.0L;
    for (const auto& [e, c] : t_)
        acc += c.eval_ld(lambda0) * std::pow(log_l, static_cast<long double>(e));
    return acc;
}

} // namespace apd
