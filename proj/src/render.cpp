#include "apd/render.hpp"

#include <set>
#include <vector>

namespace apd {

namespace {

// ---- shared decomposition -------------------------------------------------

// c = sign * (num_scal / den_scal) * pnum / pden with pnum, pden primitive
// integer polynomials whose leading coefficients are positive.
struct Decomp {
    bool negative = false;
    mpz_class num_scal{1};
    mpz_class den_scal{1};
    LambdaPoly pnum{Rational(1)};
    LambdaPoly pden{Rational(1)};
};

// p = (g/l) * P with P primitive integer; returns P and sets g, l.
LambdaPoly extract_content(const LambdaPoly& p, mpz_class& g, mpz_class& l) {
    g = 0;
    l = 1;
    for (const Rational& c : p.coeffs()) {
        mpz_class num = c.numerator();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
        mpz_class den = c.denominator();
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
    }
    if (g == 0) g = 1;
    std::vector<Rational> out;
    const Rational scale = Rational(mpz_class(l)) / Rational(mpz_class(g));
    out.reserve(p.coeffs().size());
    for (const Rational& c : p.coeffs()) out.push_back(c * scale);
    return LambdaPoly(std::move(out));
}

Decomp decompose(const RatFunc& c) {
    Decomp d;
    if (c.is_zero()) {
        d.num_scal = 0;
        d.pnum = LambdaPoly();
        return d;
    }
    mpz_class gn, ln, gd, ld;
    d.pnum = extract_content(c.num(), gn, ln);
    d.pden = extract_content(c.den(), gd, ld);
    if (d.pnum.leading().is_negative()) {
        d.negative = true;
        d.pnum = -d.pnum;
    }
    // c = (gn/ln)/(gd/ld) * pnum/pden = (gn*ld)/(ln*gd) * pnum/pden
    d.num_scal = gn * ld;
    d.den_scal = ln * gd;
    mpz_class common;
    mpz_gcd(common.get_mpz_t(), d.num_scal.get_mpz_t(), d.den_scal.get_mpz_t());
    d.num_scal /= common;
    d.den_scal /= common;
    return d;
}

bool is_lm1_power(const LambdaPoly& p, int& k) {
    k = p.degree();
    if (k < 1) return false;
    const LambdaPoly base(std::vector<Rational>{Rational(-1), Rational(1)});
    return p == base.pow(static_cast<unsigned long>(k));
}

std::string join_terms(const std::vector<std::pair<bool, std::string>>& terms) {
    if (terms.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        const auto& [neg, body] = terms[i];
        if (i == 0)
            out += neg ? "-" + body : body;
        else
            out += (neg ? " - " : " + ") + body;
    }
    return out;
}

// ---- text ------------------------------------------------------------------

std::string monomial_text(const Rational& c, int deg, bool& neg) {
    neg = c.is_negative();
    const Rational a = neg ? -c : c;
    std::string var;
    if (deg == 1)
        var = "lambda";
    else if (deg > 1)
        var = "lambda^" + std::to_string(deg);
    if (var.empty()) return a.to_string();
    if (a == Rational(1)) return var;
    return a.to_string() + "*" + var;
}

std::string poly_text(const LambdaPoly& p) {
    if (p.is_zero()) return "0";
    std::vector<std::pair<bool, std::string>> terms;
    for (int i = p.degree(); i >= 0; --i) {
        const Rational c = p.coeff(i);
        if (c.is_zero()) continue;
        bool neg = false;
        std::string body = monomial_text(c, i, neg);
        terms.emplace_back(neg, std::move(body));
    }
    return join_terms(terms);
}

// One product factor of a denominator, parenthesized when compound.
std::string den_factor_text(const LambdaPoly& p) {
    int k = 0;
    if (is_lm1_power(p, k)) {
        if (k == 1) return "(lambda - 1)";
        return "(lambda - 1)^" + std::to_string(k);
    }
    const std::string s = poly_text(p);
    const bool atomic = p.degree() <= 0 || (p.coeffs().size() > 0 && s.find(' ') == std::string::npos);
    return atomic ? s : "(" + s + ")";
}

// c * x^d * log^e as (sign, magnitude); d < 0 means "no x factor".
std::pair<bool, std::string> term_text(const RatFunc& c, int d, long e) {
    const Decomp dec = decompose(c);
    std::vector<std::string> num, den;
    std::string xpart;
    if (d == 1)
        xpart = "x";
    else if (d > 1)
        xpart = "x^" + std::to_string(d);
    std::string logpart;
    if (e != 0) {
        const long a = e > 0 ? e : -e;
        logpart = a == 1 ? "log(lambda)" : "log(lambda)^" + std::to_string(a);
    }

    if (dec.pnum.degree() >= 1) {
        const std::string s = poly_text(dec.pnum);
        num.push_back(s.find(' ') == std::string::npos ? s : "(" + s + ")");
    }
    if (!xpart.empty()) num.push_back(xpart);
    if (e > 0) num.push_back(logpart);
    if (dec.num_scal != 1 || num.empty()) num.insert(num.begin(), dec.num_scal.get_str());

    if (dec.den_scal != 1) den.push_back(dec.den_scal.get_str());
    if (dec.pden.degree() >= 1) den.push_back(den_factor_text(dec.pden));
    if (e < 0) den.push_back(logpart);

    std::string body;
    for (std::size_t i = 0; i < num.size(); ++i) body += (i ? "*" : "") + num[i];
    if (!den.empty()) {
        std::string d_str;
        for (std::size_t i = 0; i < den.size(); ++i) d_str += (i ? "*" : "") + den[i];
        const bool wrap = den.size() > 1 || (den.size() == 1 && den[0].find('*') != std::string::npos);
        body += "/" + (wrap ? "(" + d_str + ")" : d_str);
    }
    return {dec.negative, std::move(body)};
}

// ---- latex -----------------------------------------------------------------

std::string monomial_latex(const Rational& c, int deg, bool& neg) {
    neg = c.is_negative();
    const Rational a = neg ? -c : c;
    std::string var;
    if (deg == 1)
        var = "\\lambda";
    else if (deg > 1)
        var = "\\lambda^{" + std::to_string(deg) + "}";
    std::string coeff;
    if (a.is_integer()) {
        if (a != Rational(1) || var.empty()) coeff = a.numerator().get_str();
    } else {
        coeff = "\\tfrac{" + a.numerator().get_str() + "}{" + a.denominator().get_str() + "}";
    }
    if (var.empty()) return coeff;
    if (coeff.empty()) return var;
    return coeff + " " + var;
}

std::string poly_latex(const LambdaPoly& p) {
    if (p.is_zero()) return "0";
    std::vector<std::pair<bool, std::string>> terms;
    for (int i = p.degree(); i >= 0; --i) {
        const Rational c = p.coeff(i);
        if (c.is_zero()) continue;
        bool neg = false;
        std::string body = monomial_latex(c, i, neg);
        terms.emplace_back(neg, std::move(body));
    }
    return join_terms(terms);
}

std::string den_factor_latex(const LambdaPoly& p, bool companions) {
    int k = 0;
    if (is_lm1_power(p, k)) {
        if (k == 1) return companions ? "\\left(\\lambda - 1\\right)" : "\\lambda - 1";
        return "\\left(\\lambda - 1\\right)^{" + std::to_string(k) + "}";
    }
    const std::string s = poly_latex(p);
    const bool multi = s.find(" + ") != std::string::npos || s.find(" - ") != std::string::npos;
    if (multi && companions) return "\\left(" + s + "\\right)";
    return s;
}

std::pair<bool, std::string> term_latex(const RatFunc& c, int d, long e) {
    const Decomp dec = decompose(c);
    std::vector<std::string> num, den;
    std::string xpart;
    if (d == 1)
        xpart = "x";
    else if (d > 1)
        xpart = "x^{" + std::to_string(d) + "}";
    std::string logpart;
    if (e != 0) {
        const long a = e > 0 ? e : -e;
        logpart = a == 1 ? "\\log \\lambda" : "\\left(\\log \\lambda\\right)^{" + std::to_string(a) + "}";
    }

    if (dec.pnum.degree() >= 1) {
        const std::string s = poly_latex(dec.pnum);
        const bool multi = s.find(" + ") != std::string::npos || s.find(" - ") != std::string::npos;
        const bool companions = !xpart.empty() || e > 0 || dec.num_scal != 1;
        num.push_back(multi && companions ? "\\left(" + s + "\\right)" : s);
    }
    if (!xpart.empty()) num.push_back(xpart);
    if (e > 0) num.push_back(logpart);
    if (dec.num_scal != 1 || num.empty()) num.insert(num.begin(), dec.num_scal.get_str());

    if (dec.den_scal != 1) den.push_back(dec.den_scal.get_str());
    if (dec.pden.degree() >= 1)
        den.push_back(den_factor_latex(dec.pden, dec.den_scal != 1 || e < 0));
    if (e < 0) den.push_back(logpart);

    std::string num_str;
    for (std::size_t i = 0; i < num.size(); ++i) num_str += (i ? " " : "") + num[i];
    if (den.empty()) return {dec.negative, std::move(num_str)};
    std::string den_str;
    for (std::size_t i = 0; i < den.size(); ++i) den_str += (i ? " " : "") + den[i];
    return {dec.negative, "\\frac{" + num_str + "}{" + den_str + "}"};
}

// ---- flattening ------------------------------------------------------------

template <typename TermFn>
std::string render_log_elem(const LogElem& v, TermFn term) {
    if (v.is_zero()) return "0";
    std::vector<std::pair<bool, std::string>> terms;
    for (auto it = v.terms().rbegin(); it != v.terms().rend(); ++it)
        terms.push_back(term(it->second, -1, it->first));
    return join_terms(terms);
}

template <typename TermFn>
std::string render_xpoly(const XPoly& v, TermFn term) {
    if (v.is_zero()) return "0";
    std::set<long> exps;
    for (const LogElem& c : v.coeffs())
        for (const auto& kv : c.terms()) exps.insert(kv.first);
    std::vector<std::pair<bool, std::string>> terms;
    for (auto it = exps.rbegin(); it != exps.rend(); ++it)
        for (int d = v.degree(); d >= 0; --d) {
            const RatFunc c = v.coeff(d).coeff(*it);
            if (c.is_zero()) continue;
            terms.push_back(term(c, d, *it));
        }
    return join_terms(terms);
}

std::string log_label_text(const std::string& lambda_label, long abs_e) {
    const std::string base = "log(" + lambda_label + ")";
    return abs_e == 1 ? base : base + "^" + std::to_string(abs_e);
}

std::string log_label_latex(const std::string& lambda_label, long abs_e) {
    const std::string base = "\\log(" + lambda_label + ")";
    return abs_e == 1 ? base : "\\left(" + base + "\\right)^{" + std::to_string(abs_e) + "}";
}

} // namespace

std::string to_text(const Rational& v) { return v.to_string(); }

std::string to_text(const LambdaPoly& v) { return poly_text(v); }

std::string to_text(const RatFunc& v) {
    if (v.is_zero()) return "0";
    auto [neg, body] = term_text(v, -1, 0);
    return neg ? "-" + body : body;
}

std::string to_text(const LogElem& v) {
    return render_log_elem(v, [](const RatFunc& c, int d, long e) { return term_text(c, d, e); });
}

std::string to_text(const XPoly& v) {
    return render_xpoly(v, [](const RatFunc& c, int d, long e) { return term_text(c, d, e); });
}

std::string to_text(const EvalExact& v, const std::string& lambda_label) {
    if (v.is_zero()) return "0";
    std::vector<std::pair<bool, std::string>> terms;
    for (auto it = v.terms().rbegin(); it != v.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        const bool neg = c.is_negative();
        const Rational a = neg ? -c : c;
        std::string body;
        if (e == 0) {
            body = a.to_string();
        } else if (e > 0) {
            body = (a == Rational(1) ? "" : a.to_string() + "*") + log_label_text(lambda_label, e);
        } else {
            body = a.to_string() + "/" + log_label_text(lambda_label, -e);
        }
        terms.emplace_back(neg, std::move(body));
    }
    return join_terms(terms);
}

std::string to_latex(const Rational& v) {
    const bool neg = v.is_negative();
    const Rational a = neg ? -v : v;
    std::string body = a.is_integer()
                           ? a.numerator().get_str()
                           : "\\frac{" + a.numerator().get_str() + "}{" + a.denominator().get_str() + "}";
    return neg ? "-" + body : body;
}

std::string to_latex(const LambdaPoly& v) { return poly_latex(v); }

std::string to_latex(const RatFunc& v) {
    if (v.is_zero()) return "0";
    auto [neg, body] = term_latex(v, -1, 0);
    return neg ? "-" + body : body;
}

std::string to_latex(const LogElem& v) {
    return render_log_elem(v, [](const RatFunc& c, int d, long e) { return term_latex(c, d, e); });
}

std::string to_latex(const XPoly& v) {
    return render_xpoly(v, [](const RatFunc& c, int d, long e) { return term_latex(c, d, e); });
}

std::string to_latex(const EvalExact& v, const std::string& lambda_label) {
    if (v.is_zero()) return "0";
    std::vector<std::pair<bool, std::string>> terms;
    for (auto it = v.terms().rbegin(); it != v.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        const bool neg = c.is_negative();
        const Rational a = neg ? -c : c;
        const std::string scal = a.is_integer() ? a.numerator().get_str()
                                                : "\\frac{" + a.numerator().get_str() + "}{" +
                                                      a.denominator().get_str() + "}";
        std::string body;
        if (e == 0) {
            body = scal;
        } else if (e > 0) {
            body = (a == Rational(1) ? "" : scal + " ") + log_label_latex(lambda_label, e);
        } else {
            body = "\\frac{" + scal + "}{" + log_label_latex(lambda_label, -e) + "}";
        }
        terms.emplace_back(neg, std::move(body));
    }
    return join_terms(terms);
}

} // namespace apd
