#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "fpquad/contour.hpp"
#include "fpquad/integrand.hpp"

namespace fpquad {

struct ConvergenceRow {
    int N = 0;
    double value = 0.0;
    double abs_error = 0.0;
    double rel_error = 0.0;
};

struct ConvergenceReport {
    std::vector<ConvergenceRow> rows;
    double reference = 0.0;
    double fitted_rate = 0.0;  // error ~ C * rate^N over the fit window
    bool rate_determined = false;
    int floor_N = 0;  // first N on the double-precision plateau, 0 if none seen
};

// Least-squares slope of log(error) against N, returned as exp(slope).
// Points with non-positive error are skipped; fewer than two usable points
// yields NaN.
double fit_rate(const std::vector<std::pair<int, double>>& points);

// Evaluates the quadrature at each N (symmetric rule by default, full rule
// otherwise) against a trusted reference value. The rate fit drops the first
// row and ends at the roundoff floor (successive values closer than 1e-15
// relative) or at the first row whose rel_error falls within a factor 1000
// of max(eps, smallest rel_error in the sweep), whichever comes first; the
// latter masks noise plateaus sitting above eps. It needs at least three
// surviving rows, else rate_determined stays false.
ConvergenceReport run_convergence(const FpProblem& p, const Contour& c, const std::vector<int>& Ns,
                                  double reference, bool use_symmetric = true);

// Shortest round-trippable decimal form (printf %.17g).
std::string format_g17(double x);

// Header "N,value,abs_error,rel_error", one row per line, %.17g fields,
// LF line endings.
void write_csv(std::ostream& os, const ConvergenceReport& report);

} // namespace fpquad
