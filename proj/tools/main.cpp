#include <cmath>
#include <cstdio>
#include <iostream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "apd/apostol.hpp"
#include "apd/numbers.hpp"
#include "apd/plot.hpp"
#include "apd/render.hpp"
#include "apd/verify.hpp"

namespace {

using nlohmann::json;

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

// "e" and "e2" are accepted wherever a float parameter is expected, so the
// figure presets can be requested without typing out the constants.
double parse_float_param(const std::string& s) {
    if (s == "e") return std::exp(1.0);
    if (s == "e2") return std::exp(2.0);
    try {
        std::size_t pos = 0;
        const double v = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw apd::DomainError("cannot parse numeric value: " + s);
    }
}

struct ValueArgs {
    std::string family;
    long n = 0;
    long k = 0;
    bool has_k = false;
    std::string x_str;
    bool has_x = false;
    std::string lambda_str;
    bool has_lambda = false;
    bool exact = false;
    std::string format = "text";
};

// What a value command produced, before formatting.
using ValuePayload = std::variant<apd::Rational, apd::RatFunc, apd::LogElem, apd::XPoly,
                                  apd::EvalExact, double>;

std::string payload_text(const ValuePayload& p, const std::string& lambda_label) {
    return std::visit(
        [&](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, double>) return fmt17(v);
            else if constexpr (std::is_same_v<T, apd::EvalExact>) return apd::to_text(v, lambda_label);
            else return apd::to_text(v);
        },
        p);
}

std::string payload_latex(const ValuePayload& p, const std::string& lambda_label) {
    return std::visit(
        [&](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, double>) return fmt17(v);
            else if constexpr (std::is_same_v<T, apd::EvalExact>) return apd::to_latex(v, lambda_label);
            else return apd::to_latex(v);
        },
        p);
}

int do_value(const ValueArgs& a) {
    using namespace apd;

    if (a.n < 0) throw BadIndex("--n must be nonnegative");
    const auto un = static_cast<unsigned long>(a.n);

    const bool uses_k = a.family == "yneg" || a.family == "qpoly" || a.family == "stirling1" ||
                        a.family == "bernstein";
    const bool uses_x = a.family == "ypoly" || a.family == "qpoly" || a.family == "adpoly" ||
                        a.family == "bernstein";
    const bool uses_lambda = a.family == "ynum" || a.family == "ypoly" || a.family == "yneg" ||
                             a.family == "qpoly" || a.family == "adnum" || a.family == "adpoly";

    if (uses_k && !a.has_k) throw MissingParameter(a.family + " needs --k");
    if (!uses_k && a.has_k) throw DomainError("--k does not apply to " + a.family);
    if (!uses_x && a.has_x) throw DomainError("--x does not apply to " + a.family);
    if (!uses_lambda && a.has_lambda) throw DomainError("--lambda does not apply to " + a.family);
    if (a.exact && !a.has_lambda) throw MissingParameter("--exact needs --lambda");
    if (a.family == "bernstein" && !a.has_x) throw MissingParameter("bernstein needs --x");

    Rational x0;
    if (a.has_x) x0 = Rational::from_string(a.x_str);

    // Pure rational families: no lambda anywhere.
    ValuePayload payload;
    std::string lambda_label;
    if (a.family == "stirling1") {
        payload = stirling1(a.n, a.k);
    } else if (a.family == "daehee") {
        payload = daehee_number(un);
    } else if (a.family == "cauchy") {
        payload = cauchy_number(un);
    } else if (a.family == "bernstein") {
        if (a.k < 0) throw BadIndex("--k must be nonnegative");
        payload = bernstein_basis(static_cast<unsigned long>(a.k), un, x0);
    } else {
        if (uses_k && a.k < 0) throw BadIndex("--k must be nonnegative");
        const auto uk = uses_k ? static_cast<unsigned long>(a.k) : 0ul;

        const bool is_poly = a.family == "ypoly" || a.family == "qpoly" || a.family == "adpoly";
        if (a.has_lambda && is_poly && !a.has_x)
            throw MissingParameter(a.family + " needs --x when --lambda is given");

        if (!a.has_lambda) {
            // Symbolic output; an x value only substitutes into the polynomial.
            if (a.family == "ynum") payload = y_num(un);
            else if (a.family == "yneg") payload = y_neg_order(un, uk);
            else if (a.family == "adnum") payload = ad_num(un);
            else {
                XPoly p = a.family == "ypoly"   ? y_poly(un)
                          : a.family == "qpoly" ? q_poly(un, uk)
                                                : ad_poly(un);
                if (a.has_x) payload = p.eval(x0);
                else payload = p;
            }
        } else if (a.exact) {
            const Rational lam = Rational::from_string(a.lambda_str);
            lambda_label = lam.to_string();
            if (a.family == "ynum") payload = y_num(un).eval(lam);
            else if (a.family == "yneg") payload = y_neg_order(un, uk).eval(lam);
            else if (a.family == "adnum") payload = ad_num(un).eval_lambda(lam);
            else {
                XPoly p = a.family == "ypoly"   ? y_poly(un)
                          : a.family == "qpoly" ? q_poly(un, uk)
                                                : ad_poly(un);
                payload = p.eval(x0).eval_lambda(lam);
            }
        } else {
            const double lam = parse_float_param(a.lambda_str);
            if (!(lam > 0.0) || lam == 1.0)
                throw DomainError("float lambda must be positive and different from 1");
            lambda_label = fmt17(lam);
            if (a.family == "ynum") payload = y_num(un).eval(lam);
            else if (a.family == "yneg") payload = y_neg_order(un, uk).eval(lam);
            else if (a.family == "adnum") payload = ad_num(un).eval(lam);
            else {
                XPoly p = a.family == "ypoly"   ? y_poly(un)
                          : a.family == "qpoly" ? q_poly(un, uk)
                                                : ad_poly(un);
                payload = p.eval(x0.to_double(), lam);
            }
        }
    }

    if (a.format == "text") {
        std::cout << payload_text(payload, lambda_label) << "\n";
    } else if (a.format == "latex") {
        std::cout << payload_latex(payload, lambda_label) << "\n";
    } else {
        json params = json::object();
        if (a.has_x) params["x"] = a.x_str;
        if (a.has_lambda) {
            params["lambda"] = a.lambda_str;
            params["mode"] = a.exact ? "exact" : "float";
        } else {
            params["mode"] = "symbolic";
        }
        json j;
        j["family"] = a.family;
        j["n"] = a.n;
        j["k"] = a.has_k ? json(a.k) : json(nullptr);
        j["params"] = params;
        if (std::holds_alternative<double>(payload)) j["value"] = std::get<double>(payload);
        else j["value"] = payload_text(payload, lambda_label);
        std::cout << j.dump() << "\n";
    }
    return 0;
}

json residual_json(const apd::VerifyReport& r) {
    if (std::holds_alternative<double>(r.residual)) return std::get<double>(r.residual);
    if (std::holds_alternative<apd::LogElem>(r.residual))
        return apd::to_text(std::get<apd::LogElem>(r.residual));
    return apd::to_text(std::get<apd::XPoly>(r.residual));
}

int do_verify(unsigned long max_n, unsigned long samples, unsigned long seed, bool json_out,
              const apd::SuiteOptions& options) {
    const auto reports = apd::run_suite(max_n, samples, seed, options);
    std::size_t passed = 0;
    for (const auto& r : reports) {
        if (r.passed) ++passed;
        if (json_out) {
            json j;
            j["identity"] = r.identity;
            j["params"] = r.params;
            j["passed"] = r.passed;
            j["residual"] = residual_json(r);
            if (!r.detail.empty()) j["detail"] = r.detail;
            std::cout << j.dump() << "\n";
        } else {
            std::cout << (r.passed ? "PASS " : "FAIL ") << r.identity << " " << r.params;
            if (!r.passed) {
                std::cout << "  residual=" << residual_json(r).dump();
                if (!r.detail.empty()) std::cout << "  (" << r.detail << ")";
            }
            std::cout << "\n";
        }
    }
    if (!json_out)
        std::cout << passed << "/" << reports.size() << " checks passed\n";
    return passed == reports.size() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact calculator for the lambda-Apostol-Daehee and Simsek families"};
    app.require_subcommand(1);

    const std::vector<std::string> families = {"ynum",  "ypoly",     "yneg",   "qpoly",
                                               "adnum", "adpoly",    "stirling1", "daehee",
                                               "cauchy", "bernstein"};

    ValueArgs va;
    auto* value_cmd = app.add_subcommand("value", "compute one family member");
    value_cmd->add_option("--family", va.family, "family name")
        ->required()
        ->check(CLI::IsMember(families));
    value_cmd->add_option("--n", va.n, "index n")->required();
    value_cmd->add_option("--k", va.k, "order k (yneg, qpoly, stirling1, bernstein)");
    value_cmd->add_option("--x", va.x_str, "rational x value, e.g. 1/2");
    value_cmd->add_option("--lambda", va.lambda_str,
                          "lambda value; float unless --exact (presets: e, e2)");
    value_cmd->add_flag("--exact", va.exact, "treat --lambda as an exact rational");
    value_cmd->add_option("--format", va.format, "output format")
        ->check(CLI::IsMember({"text", "latex", "json"}))
        ->default_val("text");

    unsigned long max_n = 8, samples = 2, seed = 1;
    bool verify_json = false;
    apd::SuiteOptions options;
    auto* verify_cmd = app.add_subcommand("verify", "run the identity suite");
    verify_cmd->add_option("--max-n", max_n, "largest index checked");
    verify_cmd->add_option("--samples", samples, "random rational samples per identity");
    verify_cmd->add_option("--seed", seed, "sample generator seed");
    verify_cmd->add_flag("--json", verify_json, "one JSON object per report line");
    verify_cmd->add_option("--series-lambda", options.series_lambda0)->group("");
    verify_cmd->add_option("--series-terms", options.series_terms)->group("");
    verify_cmd->add_option("--series-tol", options.series_tol)->group("");

    apd::PlotSpec ps;
    std::string fixed_str = "0";
    std::string out_path;
    auto* plot_cmd = app.add_subcommand("plot-data", "write a CSV parameter sweep");
    plot_cmd->add_option("--family", ps.family, "family name")
        ->required()
        ->check(CLI::IsMember({"ynum", "ypoly", "yneg", "qpoly", "adnum", "adpoly"}));
    plot_cmd->add_option("--n-list", ps.n_list, "comma separated degrees")
        ->required()
        ->delimiter(',');
    plot_cmd->add_option("--sweep", ps.sweep, "swept parameter")
        ->required()
        ->check(CLI::IsMember({"lambda", "x"}));
    plot_cmd->add_option("--fixed", fixed_str, "value of the non-swept parameter (presets: e, e2)");
    plot_cmd->add_option("--k", ps.k, "order k (qpoly only)");
    plot_cmd->add_option("--min", ps.lo, "sweep start")->required();
    plot_cmd->add_option("--max", ps.hi, "sweep end")->required();
    plot_cmd->add_option("--samples", ps.samples, "number of rows")->required();
    plot_cmd->add_option("--out", out_path, "output CSV path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (value_cmd->parsed()) {
            va.has_k = value_cmd->count("--k") > 0;
            va.has_x = value_cmd->count("--x") > 0;
            va.has_lambda = value_cmd->count("--lambda") > 0;
            return do_value(va);
        }
        if (verify_cmd->parsed()) return do_verify(max_n, samples, seed, verify_json, options);
        if (plot_cmd->parsed()) {
            ps.fixed = parse_float_param(fixed_str);
            apd::write_plot_csv(ps, out_path);
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
