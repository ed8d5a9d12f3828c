#include "fpquad/contour.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "fpquad/errors.hpp"
#include "fpquad/summation.hpp"

namespace fpquad {

namespace {

// 512 samples keep the validation cost negligible next to the quadrature
// while the trapezoidal winding number resolves ellipses down to rho ~ 1.05.
constexpr int kValidationSamples = 512;
constexpr double kClosureTol = 1e-12;
constexpr double kWindingTol = 1e-10;
constexpr double kIntervalClearance = 1e-6;

double distance_to_unit_segment(Cplx z) {
    const double t = std::clamp(z.real(), 0.0, 1.0);
    return std::abs(z - Cplx(t, 0.0));
}

} // namespace

Contour make_ellipse(double rho) {
    if (!(rho > 1.0))
        throw PreconditionError("make_ellipse: rho must exceed 1 (degenerate contour)");
    const double a = 0.25 * (rho + 1.0 / rho);
    const double b = 0.25 * (rho - 1.0 / rho);
    Contour c;
    c.phi = [a, b](Cplx u) { return Cplx(0.5, 0.0) + a * std::cos(u) + Cplx(0.0, 1.0) * (b * std::sin(u)); };
    c.dphi = [a, b](Cplx u) { return -a * std::sin(u) + Cplx(0.0, 1.0) * (b * std::cos(u)); };
    c.period = 2.0 * std::numbers::pi;
    c.symmetric = true;
    return c;
}

double winding_number(const Contour& c, Cplx z0, int samples) {
    if (samples < 8)
        throw PreconditionError("winding_number: need at least 8 samples");
    const double h = c.period / samples;
    ComplexCompensatedSum sum;
    for (int k = 0; k < samples; ++k) {
        const Cplx u(k * h, 0.0);
        sum.add(c.dphi(u) / (c.phi(u) - z0));
    }
    // (2 pi i)^{-1} * h * sum
    const Cplx w = sum.value() * (h / (2.0 * std::numbers::pi)) * Cplx(0.0, -1.0);
    return w.real();
}

ValidationReport validate_contour(const Contour& c, const std::vector<Cplx>& singularities) {
    ValidationReport rep;

    rep.closure_residual = std::abs(c.phi(Cplx(0.0, 0.0)) - c.phi(Cplx(c.period, 0.0)));
    if (!(rep.closure_residual <= kClosureTol))
        rep.failures.push_back("contour does not close: |phi(0)-phi(period)| = " +
                               std::to_string(rep.closure_residual));

    rep.winding_center = winding_number(c, Cplx(0.5, 0.0), kValidationSamples);
    if (!(std::abs(rep.winding_center - 1.0) <= kWindingTol))
        rep.failures.push_back("winding number around 0.5 is " + std::to_string(rep.winding_center) +
                               ", expected +1 (contour must encircle [0,1] once, positively)");

    const double h = c.period / kValidationSamples;
    double min_dist = std::numeric_limits<double>::infinity();
    std::vector<double> min_sing_dist(singularities.size(), std::numeric_limits<double>::infinity());
    for (int k = 0; k < kValidationSamples; ++k) {
        const Cplx z = c.phi(Cplx(k * h, 0.0));
        min_dist = std::min(min_dist, distance_to_unit_segment(z));
        for (std::size_t j = 0; j < singularities.size(); ++j)
            min_sing_dist[j] = std::min(min_sing_dist[j], std::abs(z - singularities[j]));
    }
    rep.min_distance_to_interval = min_dist;
    rep.singularity_distances = min_sing_dist;
    if (!(min_dist > kIntervalClearance))
        rep.failures.push_back("contour grazes [0,1]: sampled clearance " + std::to_string(min_dist));

    for (std::size_t j = 0; j < singularities.size(); ++j) {
        const double w = winding_number(c, singularities[j], kValidationSamples);
        rep.singularity_windings.push_back(w);
        // A singularity strictly outside must show winding 0; anything else
        // (including NaN from a near-hit) is a failure.
        if (!(std::abs(w) <= 0.5))
            rep.failures.push_back("declared singularity at (" + std::to_string(singularities[j].real()) +
                                   "," + std::to_string(singularities[j].imag()) +
                                   ") is not outside the contour (winding " + std::to_string(w) + ")");
    }

    rep.pass = rep.failures.empty();
    return rep;
}

} // namespace fpquad
