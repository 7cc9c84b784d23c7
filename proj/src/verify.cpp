#include "apd/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>

#include "apd/errors.hpp"
#include "apd/numbers.hpp"

namespace apd {

namespace {

LambdaPoly lambda_minus_one() {
    return LambdaPoly(std::vector<Rational>{Rational(-1), Rational(1)});
}

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// log(lambda0) as an exact rational: the Mercator series in u = lambda0 - 1,
// truncated once u^j drops below 1e-50. Only valid for |u| < 1; the cap on
// the term count keeps the remainder under ~1e-18 even at |u| = 0.9.
Rational log_rational(const Rational& lambda0) {
    const Rational u = lambda0 - Rational(1);
    Rational acc;
    Rational upow = u;
    for (long j = 1; j <= 600; ++j) {
        acc += (j % 2 ? upow : -upow) / Rational(j);
        upow *= u;
        if (j >= 8 && std::abs(upow.to_double()) < 1e-50) break;
    }
    return acc;
}

} // namespace

VerifyReport check_binomial_expansion(unsigned long m, const Rational& x0, const Rational& y0) {
    if (m < 2) throw BadIndex("binomial expansion check needs m >= 2");

    std::vector<LogElem> dx, dy;
    for (unsigned long j = 0; j <= m; ++j) {
        const XPoly p = ad_poly(j);
        dx.push_back(p.eval(x0));
        dy.push_back(p.eval(y0));
    }

    // The lambda^k rides along with S1(k,n): the two came from expanding
    // (log(1+lambda t))^n through the Stirling generating function.
    auto A = [&](unsigned long mu) {
        LogElem acc;
        for (unsigned long k = 0; k <= mu; ++k)
            for (unsigned long n = 0; n <= k; ++n) {
                const Rational s1 = stirling1(static_cast<long>(k), static_cast<long>(n));
                if (s1.is_zero()) continue;
                const Rational base = binomial(mu, k) * binomial(Rational(-2), n) * factorial(n) * s1;
                for (unsigned long j = 0; j + k <= mu; ++j) {
                    const RatFunc c{LambdaPoly::monomial(static_cast<int>(k), base * binomial(mu - k, j))};
                    acc += LogElem::log_term(-static_cast<long>(n), c) * (dx[j] * dy[mu - k - j]);
                }
            }
        return acc;
    };

    const RatFunc lm1{lambda_minus_one()};
    const long ml = static_cast<long>(m);
    LogElem rhs =
        LogElem::log_term(-2, RatFunc::lambda_power(4 - ml) * RatFunc(Rational(ml * (ml - 1)))) * A(m - 2) +
        LogElem::log_term(-2, RatFunc::lambda_power(2 - ml) * lm1 * RatFunc(Rational(2 * ml))) * A(m - 1) +
        LogElem::log_term(-2, RatFunc::lambda_power(-ml) * lm1 * lm1) * A(m);

    const LogElem normalized = rhs * RatFunc(factorial(m).inverse());
    const Rational expected = binomial(x0 + y0, m);
    const LogElem residual = normalized - LogElem(RatFunc(expected));

    VerifyReport r;
    r.identity = "binomial-expansion";
    r.params = "m=" + std::to_string(m) + " x0=" + x0.to_string() + " y0=" + y0.to_string();
    r.passed = residual.is_zero();
    r.residual = residual;
    r.detail = r.passed ? "collapses to the constant " + expected.to_string()
                        : "does not collapse to " + expected.to_string();
    return r;
}

VerifyReport check_finite_sum(unsigned long n) {
    if (n < 1) throw BadIndex("finite sum check needs n >= 1");

    RatFunc lhs;
    for (unsigned long j = 0; j < n; ++j)
        lhs += RatFunc(LambdaPoly::monomial(static_cast<int>(j), Rational(1, static_cast<long>(n - j))),
                       lambda_minus_one().pow(j));

    const Rational flip = n % 2 == 0 ? Rational(-1) : Rational(1); // (-1)^(n+1)
    const LogElem scaled = ad_num(n) * (RatFunc(lambda_minus_one()) * RatFunc(flip / factorial(n)) *
                                        RatFunc::lambda_power(-static_cast<long>(n)));
    const LogElem rhs = scaled + LogElem::log_term(1, RatFunc(LambdaPoly::monomial(static_cast<int>(n)),
                                                              lambda_minus_one().pow(n)));
    const LogElem residual = rhs - LogElem(lhs);

    VerifyReport r;
    r.identity = "finite-sum";
    r.params = "n=" + std::to_string(n);
    r.passed = residual.is_zero();
    r.residual = residual;
    r.detail = r.passed ? "log terms cancel, rational parts agree" : "sides differ";
    return r;
}

VerifyReport check_integral_unit(unsigned long n) {
    const LogElem lhs = integrate(ad_poly(n), Rational(0), Rational(1));
    LogElem rhs;
    for (unsigned long m = 0; m <= n; ++m)
        rhs += ad_num(n - m) *
               RatFunc(LambdaPoly::monomial(static_cast<int>(m), binomial(n, m) * cauchy_number(m)));
    const LogElem residual = lhs - rhs;

    VerifyReport r;
    r.identity = "integral-unit";
    r.params = "n=" + std::to_string(n);
    r.passed = residual.is_zero();
    r.residual = residual;
    r.detail = r.passed ? "integral equals the Cauchy convolution" : "sides differ";
    return r;
}

VerifyReport check_integral_to_z(unsigned long n) {
    const XPoly lhs = integrate_to_symbolic(ad_poly(n), Rational(0));
    XPoly rhs;
    const Rational inv = Rational(1, static_cast<long>(n) + 1);
    for (unsigned long m = 0; m <= n + 1; ++m) {
        const XPoly diff = ad_poly(n + 1 - m) - XPoly(ad_num(n + 1 - m));
        const RatFunc w = RatFunc::lambda_power(static_cast<long>(m) - 1) *
                          RatFunc(binomial(n + 1, m) * cauchy_number(m) * inv);
        rhs += diff * LogElem(w);
    }
    const XPoly residual = lhs - rhs;

    VerifyReport r;
    r.identity = "integral-to-z";
    r.params = "n=" + std::to_string(n);
    r.passed = residual.is_zero();
    r.residual = residual;
    r.detail = r.passed ? "antiderivatives agree coefficientwise" : "sides differ";
    return r;
}

VerifyReport check_cauchy_weights(unsigned long m) {
    std::vector<Rational> p;
    bool shape_ok = true;
    for (unsigned long i = 0; i <= m && shape_ok; ++i) {
        LogElem num = integrate(ad_poly(i), Rational(0), Rational(1));
        for (unsigned long j = 0; j < i; ++j)
            num -= ad_num(i - j) *
                   RatFunc(LambdaPoly::monomial(static_cast<int>(j), factorial(j) * binomial(i, j) * p[j]));
        const LogElem divisor =
            LogElem::log_term(1, RatFunc(LambdaPoly::monomial(static_cast<int>(i), factorial(i)),
                                         lambda_minus_one()));
        const LogElem q = num * divisor.inverse();
        const RatFunc c = q.coeff(0);
        if (q != LogElem(c) || !c.is_constant()) {
            shape_ok = false;
            break;
        }
        p.push_back(c.num().is_zero() ? Rational(0) : c.num().coeff(0));
    }

    VerifyReport r;
    r.identity = "cauchy-weights";
    r.params = "m=" + std::to_string(m);
    if (!shape_ok) {
        r.passed = false;
        r.residual = LogElem(RatFunc(Rational(1)));
        r.detail = "reconstructed weight is not a rational constant";
        return r;
    }
    const Rational gap = factorial(m) * p[m] - cauchy_number(m);
    r.passed = gap.is_zero();
    r.residual = LogElem(RatFunc(gap));
    r.detail = "p_" + std::to_string(m) + " = " + p[m].to_string();
    return r;
}

VerifyReport check_series_representation(unsigned long m, const Rational& x0, double lambda0,
                                         unsigned long N, double tol) {
    if (!(lambda0 > 0.0) || lambda0 == 1.0 || !(std::abs(lambda0 - 1.0) < 1.0))
        throw DomainError("series representation needs 0 < lambda != 1 with |lambda - 1| < 1");
    // Double arithmetic cannot decide this identity at the stated
    // tolerances: the log coefficient carries a (lambda-1)^{-m-1} pole and
    // cancels against the rational part down to a value many orders of
    // magnitude smaller. Both sides therefore stay rational, with
    // log(lambda0) itself replaced by an exact Mercator partial sum whose
    // remainder is far below anything measured here.
    const Rational lam = Rational::from_double_exact(lambda0);
    const Rational log_lam = log_rational(lam);
    const EvalExact closed_sym = ad_poly(m).eval(x0).eval_lambda(lam);
    Rational closed_rat;
    for (const auto& [e, c] : closed_sym.terms()) closed_rat += c * log_lam.pow(e);
    const Rational partial_rat = series_rep_partial_exact(m, x0, lam, N);

    const double closed = closed_rat.to_double();
    const double partial = partial_rat.to_double();
    const double gap = (partial_rat - closed_rat).to_double();

    VerifyReport r;
    r.identity = "series-representation";
    r.params = "m=" + std::to_string(m) + " x0=" + x0.to_string() + " lambda0=" + fmt_double(lambda0) +
               " N=" + std::to_string(N);
    r.passed = std::abs(gap) <= tol * (1.0 + std::abs(closed));
    r.residual = gap;
    r.detail = "partial=" + fmt_double(partial) + " closed=" + fmt_double(closed) +
               " tol=" + fmt_double(tol);
    return r;
}

std::vector<VerifyReport> run_suite(unsigned long max_n, unsigned long samples, unsigned long seed,
                                    const SuiteOptions& options) {
    if (max_n < 2) throw BadIndex("suite needs max_n >= 2");
    std::mt19937 rng(static_cast<std::uint32_t>(seed));
    auto rand_rational = [&rng]() {
        const long num = static_cast<long>(rng() % 41) - 20; // [-20, 20]
        const long den = static_cast<long>(rng() % 20) + 1;  // [1, 20]
        return Rational(num, den);
    };

    std::vector<VerifyReport> reports;
    for (unsigned long m = 2; m <= max_n; ++m)
        for (unsigned long s = 0; s < samples; ++s) {
            const Rational x0 = rand_rational();
            const Rational y0 = rand_rational();
            reports.push_back(check_binomial_expansion(m, x0, y0));
        }
    for (unsigned long n = 1; n <= max_n; ++n) reports.push_back(check_finite_sum(n));
    for (unsigned long n = 0; n <= max_n; ++n) reports.push_back(check_integral_unit(n));
    for (unsigned long n = 0; n <= max_n; ++n) reports.push_back(check_integral_to_z(n));
    for (unsigned long m = 0; m <= max_n; ++m) reports.push_back(check_cauchy_weights(m));
    for (unsigned long m = 0; m <= max_n; ++m)
        for (unsigned long s = 0; s < samples; ++s) {
            const Rational x0 = rand_rational();
            reports.push_back(check_series_representation(m, x0, options.series_lambda0,
                                                          options.series_terms, options.series_tol));
        }

    std::sort(reports.begin(), reports.end(), [](const VerifyReport& a, const VerifyReport& b) {
        if (a.identity != b.identity) return a.identity < b.identity;
        return a.params < b.params;
    });
    return reports;
}

} // namespace apd
