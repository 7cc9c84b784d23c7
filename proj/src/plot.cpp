#include "apd/plot.hpp"

#include <cstdio>
#include <fstream>
#include <functional>

#include "apd/apostol.hpp"
#include "apd/errors.hpp"

namespace apd {

namespace {

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

} // namespace

void write_plot_csv(const PlotSpec& spec, const std::string& path) {
    if (spec.n_list.empty()) throw MissingParameter("plot needs at least one degree");
    for (long n : spec.n_list)
        if (n < 0) throw BadIndex("negative degree in plot request");
    if (!(spec.lo < spec.hi)) throw DomainError("plot range must satisfy min < max");
    if (spec.samples < 2) throw DomainError("plot needs at least two samples");

    const bool lambda_sweep = spec.sweep == "lambda";
    if (!lambda_sweep && spec.sweep != "x")
        throw DomainError("sweep must be lambda or x");

    if (lambda_sweep) {
        if (spec.lo <= 0.0) throw DomainError("lambda sweep must stay positive");
        if (spec.lo <= 1.0 && spec.hi >= 1.0)
            throw DomainError("lambda sweep may not touch lambda = 1");
    } else {
        if (!(spec.fixed > 0.0) || spec.fixed == 1.0)
            throw DomainError("fixed lambda must be positive and different from 1");
    }

    // Build each symbolic object once; sampling then only costs evaluation.
    std::vector<std::function<double(double)>> cols;
    for (long n : spec.n_list) {
        const auto un = static_cast<unsigned long>(n);
        if (spec.family == "ynum" || spec.family == "yneg" || spec.family == "adnum") {
            if (!lambda_sweep)
                throw DomainError(spec.family + " has no x parameter; sweep lambda instead");
            if (spec.family == "adnum") {
                LogElem f = ad_num(un);
                cols.emplace_back([f](double lam) { return f.eval(lam); });
            } else {
                RatFunc f;
                if (spec.family == "ynum") {
                    f = y_num(un);
                } else {
                    if (spec.k < 0) throw MissingParameter("yneg needs the order k");
                    f = y_neg_order(un, static_cast<unsigned long>(spec.k));
                }
                cols.emplace_back([f](double lam) { return f.eval(lam); });
            }
        } else if (spec.family == "ypoly" || spec.family == "adpoly" || spec.family == "qpoly") {
            XPoly p;
            if (spec.family == "ypoly") {
                p = y_poly(un);
            } else if (spec.family == "adpoly") {
                p = ad_poly(un);
            } else {
                if (spec.k < 0) throw MissingParameter("qpoly needs the order k");
                p = q_poly(un, static_cast<unsigned long>(spec.k));
            }
            const double fixed = spec.fixed;
            if (lambda_sweep)
                cols.emplace_back([p, fixed](double lam) { return p.eval(fixed, lam); });
            else
                cols.emplace_back([p, fixed](double x) { return p.eval(x, fixed); });
        } else {
            throw DomainError("unknown plot family: " + spec.family);
        }
    }

    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");

    out << "param";
    for (long n : spec.n_list) out << ",D" << n;
    out << "\n";

    const double step = (spec.hi - spec.lo) / static_cast<double>(spec.samples - 1);
    for (long i = 0; i < spec.samples; ++i) {
        const double param =
            i + 1 == spec.samples ? spec.hi : spec.lo + step * static_cast<double>(i);
        out << fmt17(param);
        for (const auto& col : cols) out << ',' << fmt17(col(param));
        out << "\n";
    }
    if (!out) throw std::runtime_error("write failed for " + path);
}

} // namespace apd
