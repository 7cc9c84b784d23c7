#ifndef APD_RENDER_HPP
#define APD_RENDER_HPP

#include <string>

#include "apd/xpoly.hpp"

namespace apd {

/// Plain-text renderers. Deterministic: the same value always produces
/// the same bytes. Terms are ordered by descending log-power, then by
/// descending x-degree, then by descending lambda-degree.
std::string to_text(const Rational& v);
std::string to_text(const LambdaPoly& v);
std::string to_text(const RatFunc& v);
std::string to_text(const LogElem& v);
std::string to_text(const XPoly& v);
/// lambda_label is the textual value substituted for lambda, e.g. "2";
/// the log symbol renders as log(<lambda_label>).
std::string to_text(const EvalExact& v, const std::string& lambda_label);

/// LaTeX renderers with the same term order. Coefficients are shown as
/// an integer scalar times a primitive integer polynomial; denominators
/// that are powers of (lambda - 1) are rendered in factored form.
std::string to_latex(const Rational& v);
std::string to_latex(const LambdaPoly& v);
std::string to_latex(const RatFunc& v);
std::string to_latex(const LogElem& v);
std::string to_latex(const XPoly& v);
std::string to_latex(const EvalExact& v, const std::string& lambda_label);

} // namespace apd

#endif
