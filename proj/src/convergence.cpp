#include "fpquad/convergence.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>

#include "fpquad/errors.hpp"
#include "fpquad/fp_quadrature.hpp"

namespace fpquad {

double fit_rate(const std::vector<std::pair<int, double>>& points) {
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    int m = 0;
    for (const auto& [N, err] : points) {
        if (!(err > 0.0) || !std::isfinite(err)) continue;
        const double x = static_cast<double>(N);
        const double y = std::log(err);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++m;
    }
    if (m < 2) return std::numeric_limits<double>::quiet_NaN();
    const double denom = m * sxx - sx * sx;
    if (denom == 0.0) return std::numeric_limits<double>::quiet_NaN();
    return std::exp((m * sxy - sx * sy) / denom);
}

ConvergenceReport run_convergence(const FpProblem& p, const Contour& c, const std::vector<int>& Ns,
                                  double reference, bool use_symmetric) {
    if (Ns.empty()) throw PreconditionError("run_convergence: empty N list");
    std::vector<int> sorted = Ns;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

    ConvergenceReport report;
    report.reference = reference;
    const double ref_scale = std::abs(reference);
    for (int N : sorted) {
        const QuadResult q = use_symmetric ? fp_trapezoid_symmetric(p, c, N) : fp_trapezoid_full(p, c, N);
        ConvergenceRow row;
        row.N = N;
        row.value = q.value.real();
        row.abs_error = std::abs(row.value - reference);
        row.rel_error = ref_scale > 0.0 ? row.abs_error / ref_scale : row.abs_error;
        report.rows.push_back(row);
    }

    for (std::size_t i = 1; i < report.rows.size(); ++i) {
        const double prev = report.rows[i - 1].value;
        const double cur = report.rows[i].value;
        if (std::abs(cur - prev) < 1e-15 * std::max(std::abs(cur), std::abs(prev))) {
            report.floor_N = report.rows[i].N;
            break;
        }
    }

    // The fit must see only the geometric-decay regime. Drop the first row
    // (pre-asymptotic) and everything at or past the roundoff floor, and cut
    // the window at the first row that reaches the noise band, taken as a
    // factor 1000 above the best relative error seen. The plateau's jitter
    // can span two decades and sit well above machine epsilon without ever
    // satisfying the successive-value floor test, and once a sweep touches
    // the band no later row is trustworthy.
    double min_rel = std::numeric_limits<double>::infinity();
    for (const ConvergenceRow& row : report.rows) min_rel = std::min(min_rel, row.rel_error);
    const double noise_floor =
        1000.0 * std::max(std::numeric_limits<double>::epsilon(), min_rel);
    std::vector<std::pair<int, double>> window;
    for (std::size_t i = 1; i < report.rows.size(); ++i) {
        const ConvergenceRow& row = report.rows[i];
        if (report.floor_N != 0 && row.N >= report.floor_N) break;
        if (row.rel_error <= noise_floor) break;
        window.emplace_back(row.N, row.abs_error);
    }
    if (window.size() >= 3) {
        const double rate = fit_rate(window);
        if (std::isfinite(rate)) {
            report.fitted_rate = rate;
            report.rate_determined = true;
        }
    }
    return report;
}

std::string format_g17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

void write_csv(std::ostream& os, const ConvergenceReport& report) {
    os << "N,value,abs_error,rel_error\n";
    for (const ConvergenceRow& row : report.rows)
        os << row.N << ',' << format_g17(row.value) << ',' << format_g17(row.abs_error) << ','
           << format_g17(row.rel_error) << '\n';
}

} // namespace fpquad
