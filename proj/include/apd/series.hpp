#ifndef APD_SERIES_HPP
#define APD_SERIES_HPP

#include <string>
#include <vector>

#include "apd/errors.hpp"
#include "apd/rational.hpp"

namespace apd {

/// Truncated formal power series in t over a commutative scalar ring R.
/// Coefficients are kept for t^0 .. t^order; arithmetic never reads
/// beyond the order, and mixed-order arithmetic is rejected rather than
/// silently truncated (use truncated() first).
///
/// R must provide: default ctor (zero), one(), from_rational(),
/// +, -, *, unary -, ==, is_zero(), is_unit(), inverse().
template <typename R>
class Series {
public:
    explicit Series(int order) : c_(static_cast<std::size_t>(order) + 1) {
        if (order < 0) throw BadIndex("series order must be >= 0");
    }

    Series(int order, std::vector<R> coeffs) : Series(order) {
        if (coeffs.size() > c_.size())
            throw OrderMismatch("coefficient list longer than order allows");
        for (std::size_t i = 0; i < coeffs.size(); ++i) c_[i] = std::move(coeffs[i]);
    }

    static Series constant(int order, const R& c) {
        Series s(order);
        s.c_[0] = c;
        return s;
    }

    /// c * t^k
    static Series monomial(int order, int k, const R& c) {
        Series s(order);
        if (k < 0) throw BadIndex("negative power of t");
        if (k <= order) s.c_[static_cast<std::size_t>(k)] = c;
        return s;
    }

    int order() const { return static_cast<int>(c_.size()) - 1; }

    const R& coeff(int n) const {
        check_index(n);
        return c_[static_cast<std::size_t>(n)];
    }

    void set_coeff(int n, R v) {
        check_index(n);
        c_[static_cast<std::size_t>(n)] = std::move(v);
    }

    /// n-th EGF coefficient, i.e. n! * [t^n].
    R egf_coeff(int n) const {
        check_index(n);
        return c_[static_cast<std::size_t>(n)] * R::from_rational(factorial(static_cast<unsigned long>(n)));
    }

    Series truncated(int new_order) const {
        if (new_order > order()) throw OrderMismatch("cannot extend a truncated series");
        Series s(new_order);
        for (int i = 0; i <= new_order; ++i) s.c_[static_cast<std::size_t>(i)] = c_[static_cast<std::size_t>(i)];
        return s;
    }

    /// Divide by t; requires a vanishing constant term. The order drops by one.
    Series shifted_down() const {
        if (!c_[0].is_zero()) throw DomainError("cannot divide by t: nonzero constant term");
        if (order() == 0) throw OrderMismatch("order 0 series cannot lose a coefficient");
        Series s(order() - 1);
        for (int i = 0; i < static_cast<int>(c_.size()) - 1; ++i)
            s.c_[static_cast<std::size_t>(i)] = c_[static_cast<std::size_t>(i) + 1];
        return s;
    }

    friend Series operator+(const Series& a, const Series& b) {
        a.check_same_order(b);
        Series s(a.order());
        for (std::size_t i = 0; i < a.c_.size(); ++i) s.c_[i] = a.c_[i] + b.c_[i];
        return s;
    }

    friend Series operator-(const Series& a, const Series& b) {
        a.check_same_order(b);
        Series s(a.order());
        for (std::size_t i = 0; i < a.c_.size(); ++i) s.c_[i] = a.c_[i] - b.c_[i];
        return s;
    }

    /// Cauchy product truncated at the common order.
    friend Series operator*(const Series& a, const Series& b) {
        a.check_same_order(b);
        Series s(a.order());
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; i + j < b.c_.size(); ++j) s.c_[i + j] = s.c_[i + j] + a.c_[i] * b.c_[j];
        }
        return s;
    }

    friend Series operator*(const Series& a, const R& s) {
        Series r(a.order());
        for (std::size_t i = 0; i < a.c_.size(); ++i) r.c_[i] = a.c_[i] * s;
        return r;
    }

    /// Multiplicative inverse up to the order; the constant term must be
    /// a unit of the scalar ring.
    Series inverse() const {
        if (!c_[0].is_unit())
            throw NonUnitConstantTerm("series inverse needs a unit constant term");
        Series s(order());
        const R a0_inv = c_[0].inverse();
        s.c_[0] = a0_inv;
        for (std::size_t n = 1; n < c_.size(); ++n) {
            R acc{};
            for (std::size_t k = 1; k <= n; ++k) acc = acc + c_[k] * s.c_[n - k];
            s.c_[n] = -(a0_inv * acc);
        }
        return s;
    }

    Series pow(unsigned long e) const {
        Series result = constant(order(), R::one());
        Series base = *this;
        while (e > 0) {
            if (e & 1) result = result * base;
            e >>= 1;
            if (e) base = base * base;
        }
        return result;
    }

    friend bool operator==(const Series& a, const Series& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Series& a, const Series& b) { return !(a == b); }

private:
    void check_index(int n) const {
        if (n < 0 || n > order())
            throw IndexBeyondOrder("coefficient index " + std::to_string(n) + " beyond order " +
                                   std::to_string(order()));
    }
    void check_same_order(const Series& b) const {
        if (order() != b.order())
            throw OrderMismatch("series orders differ: " + std::to_string(order()) + " vs " +
                                std::to_string(b.order()));
    }
    std::vector<R> c_;
};

/// log(1 + z t) for a scalar z: coefficients 0, z, -z^2/2, z^3/3, ...
template <typename R>
Series<R> log1p_series(const R& z, int order) {
    Series<R> s(order);
    R zp = R::one();
    for (int k = 1; k <= order; ++k) {
        zp = zp * z;
        const Rational c = Rational(k % 2 == 0 ? -1 : 1) / Rational(k);
        s.set_coeff(k, zp * R::from_rational(c));
    }
    return s;
}

/// (1 + z t)^x0 for rational exponent x0: [t^k] = binom(x0, k) z^k.
template <typename R>
Series<R> binom_pow_series(const Rational& x0, const R& z, int order) {
    Series<R> s(order);
    R zp = R::one();
    for (int k = 0; k <= order; ++k) {
        if (k > 0) zp = zp * z;
        s.set_coeff(k, zp * R::from_rational(binomial(x0, static_cast<unsigned long>(k))));
    }
    return s;
}

/// e^{c t}: [t^k] = c^k / k!.
template <typename R>
Series<R> exp_series(const R& c, int order) {
    Series<R> s(order);
    R cp = R::one();
    for (int k = 0; k <= order; ++k) {
        if (k > 0) cp = cp * c;
        s.set_coeff(k, cp * R::from_rational(factorial(static_cast<unsigned long>(k)).inverse()));
    }
    return s;
}

} // namespace apd

#endif
