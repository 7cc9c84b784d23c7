#ifndef APD_LOG_ELEM_HPP
#define APD_LOG_ELEM_HPP

#include <map>

#include "apd/rat_func.hpp"

namespace apd {

/// Result of substituting a rational lambda into a LogElem while keeping
/// the log symbol formal: a Laurent polynomial in log(lambda0) with
/// rational coefficients.
class EvalExact {
public:
    EvalExact() = default;
    explicit EvalExact(std::map<long, Rational> terms);

    bool is_zero() const { return t_.empty(); }
    Rational coeff(long e) const;
    const std::map<long, Rational>& terms() const { return t_; }

    /// Numeric value once log(lambda0) is known.
    double to_double(double log_lambda0) const;

    friend bool operator==(const EvalExact& a, const EvalExact& b) { return a.t_ == b.t_; }
    friend bool operator!=(const EvalExact& a, const EvalExact& b) { return !(a == b); }

private:
    std::map<long, Rational> t_; // exponent of log(lambda) -> nonzero coefficient
};

/// Laurent polynomial in the formal symbol l = log(lambda) with RatFunc
/// coefficients. The symbol is a pure transcendental: nothing relates it
/// back to lambda, so identities that hold here hold as exact
/// cancellations. No zero coefficient is ever stored.
class LogElem {
public:
    LogElem() = default;
    LogElem(const Rational& c) : LogElem(RatFunc(c)) {}
    LogElem(int c) : LogElem(RatFunc(c)) {}
    LogElem(const RatFunc& c);

    /// c * l^e
    static LogElem log_term(long e, const RatFunc& c = RatFunc::one());
    static LogElem log_symbol() { return log_term(1); }

    bool is_zero() const { return t_.empty(); }
    /// Units of Q(lambda)[l, 1/l] are the nonzero monomials c * l^e.
    bool is_unit() const { return t_.size() == 1; }
    bool is_log_free() const { return t_.empty() || (t_.size() == 1 && t_.begin()->first == 0); }

    RatFunc coeff(long e) const;
    const std::map<long, RatFunc>& terms() const { return t_; }
    long min_exp() const; // 0 for the zero element
    long max_exp() const;

    LogElem inverse() const;

    friend LogElem operator+(const LogElem& a, const LogElem& b);
    friend LogElem operator-(const LogElem& a, const LogElem& b);
    friend LogElem operator*(const LogElem& a, const LogElem& b);
    LogElem operator-() const;
    friend LogElem operator*(const LogElem& a, const RatFunc& s);
    friend LogElem operator*(const RatFunc& s, const LogElem& a) { return a * s; }
    LogElem& operator+=(const LogElem& b);
    LogElem& operator-=(const LogElem& b) { return *this += -b; }

    friend bool operator==(const LogElem& a, const LogElem& b) { return a.t_ == b.t_; }
    friend bool operator!=(const LogElem& a, const LogElem& b) { return !(a == b); }

    /// Shift every exponent by -e and divide every coefficient by c.
    LogElem div_monomial(long e, const RatFunc& c) const;

    /// Substitute lambda := lambda0 exactly, keeping the log symbol formal.
    EvalExact eval_lambda(const Rational& lambda0) const;

    /// Substitute lambda := lambda0 and l := log(lambda0) numerically.
    /// All float evaluation runs in extended precision and rounds once at the
    /// end; the canonical coefficients hide cancellations like
    /// lambda^{2n}/(lambda-1)^{n+1} that plain double arithmetic amplifies.
    double eval(double lambda0) const;
    long double eval_ld(long double lambda0) const;

    // scalar-ring hooks used by Series<R>
    static LogElem one() { return LogElem(RatFunc::one()); }
    static LogElem from_rational(const Rational& q) { return LogElem(RatFunc(q)); }

private:
    void insert_term(long e, RatFunc c);
    std::map<long, RatFunc> t_;
};

} // namespace apd

#endif
