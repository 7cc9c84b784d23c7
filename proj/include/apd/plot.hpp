#pragma once

#include <string>
#include <vector>

namespace apd {

/// Description of a CSV sweep over one parameter of a polynomial family.
///
/// `sweep` is "lambda" or "x".  For a lambda sweep, `fixed` is the x value
/// (ignored for the number families, which have no x); for an x sweep it is
/// the lambda value.  `k` is only consulted by the qpoly family.
struct PlotSpec {
    std::string family;       ///< ynum, ypoly, yneg, qpoly, adnum, adpoly
    std::vector<long> n_list; ///< degrees, one output column each
    std::string sweep;        ///< "lambda" or "x"
    double fixed = 0.0;
    long k = -1;
    double lo = 0.0;
    double hi = 0.0;
    long samples = 0;
};

/// Evaluate the requested family over an even grid and write CSV to `path`.
///
/// The header row is `param,D0,D1,...` with one data column per entry of
/// `n_list`.  Values are printed with "%.17g" so a round-trip through the
/// file reproduces the doubles bit for bit.  Lambda sweeps must stay inside
/// a region where the functions are defined: the range may not touch zero
/// or contain 1.
void write_plot_csv(const PlotSpec& spec, const std::string& path);

} // namespace apd
