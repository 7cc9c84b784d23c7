#include "apd/rational.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>

namespace apd {

Rational::Rational(long num, long den) {
    if (den == 0) throw ZeroDenominator("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::from_string(std::string_view s) {
    std::string text(s);
    if (text.empty()) throw DomainError("empty rational literal");
    auto slash = text.find('/');
    auto dot = text.find('.');
    if (slash != std::string::npos) {
        mpq_class v;
        if (v.set_str(text, 10) != 0) throw DomainError("bad rational literal: " + text);
        if (v.get_den() == 0) throw ZeroDenominator("rational with zero denominator: " + text);
        v.canonicalize();
        return from_canonical(std::move(v));
    }
    if (dot != std::string::npos) {
        std::string digits = text.substr(0, dot) + text.substr(dot + 1);
        std::size_t frac_len = text.size() - dot - 1;
        for (char c : digits)
            if (!std::isdigit(static_cast<unsigned char>(c)) && c != '+' && c != '-')
                throw DomainError("bad decimal literal: " + text);
        mpz_class num(digits.empty() ? "0" : digits, 10);
        mpz_class den(1);
        for (std::size_t i = 0; i < frac_len; ++i) den *= 10;
        mpq_class v(num, den);
        v.canonicalize();
        return from_canonical(std::move(v));
    }
    mpq_class v;
    if (v.set_str(text, 10) != 0) throw DomainError("bad integer literal: " + text);
    return from_canonical(std::move(v));
}

Rational Rational::from_double_exact(double d) {
    if (!std::isfinite(d)) throw DomainError("non-finite double has no rational value");
    return from_canonical(mpq_class(d));
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw ZeroDivisor("rational division by zero");
    return Rational::from_canonical(a.v_ / b.v_);
}

Rational Rational::inverse() const {
    if (is_zero()) throw ZeroDivisor("inverse of zero rational");
    return from_canonical(1 / v_);
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    if (is_zero()) {
        if (e < 0) throw ZeroDivisor("negative power of zero");
        return Rational(0);
    }
    const Rational base = e < 0 ? inverse() : *this;
    unsigned long n = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.v_.get_num().get_mpz_t(), n);
    mpz_pow_ui(den.get_mpz_t(), base.v_.get_den().get_mpz_t(), n);
    return from_canonical(mpq_class(num, den)); // powers of a canonical fraction stay canonical
}

Rational factorial(unsigned long n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(std::move(f));
}

Rational binomial(unsigned long n, unsigned long k) {
    if (k > n) return Rational(0);
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Rational(std::move(b));
}

Rational binomial(const Rational& x, unsigned long k) {
    Rational prod(1);
    for (unsigned long i = 0; i < k; ++i) prod *= x - Rational(static_cast<long>(i));
    return prod / factorial(k);
}

} // namespace apd
