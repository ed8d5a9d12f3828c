#pragma once

#include <complex>
#include <functional>
#include <string>
#include <vector>

namespace fpquad {

using Cplx = std::complex<double>;

// Closed analytic curve phi(u), u in [0, period). phi and dphi accept a
// complex parameter so the same map can be evaluated on the strip boundary
// lines Im u = +-d' required by the a-priori error bound.
struct Contour {
    std::function<Cplx(Cplx)> phi;
    std::function<Cplx(Cplx)> dphi;
    double period = 0.0;
    bool symmetric = false; // phi(-u) = conj(phi(u))
};

struct EllipseSpec {
    double rho; // > 1
};

// Ellipse around [0,1]:
//   phi(u) = 1/2 + (rho+1/rho)/4 cos u + i (rho-1/rho)/4 sin u,  period 2 pi.
// This is the Bernstein ellipse with foci {0,1}, the image of |w| = rho
// under z = 1/2 + (w + 1/w)/4. Throws PreconditionError for rho <= 1
// (degenerate contour).
Contour make_ellipse(double rho);
inline Contour make_ellipse(const EllipseSpec& spec) { return make_ellipse(spec.rho); }

// Trapezoidal winding number (2 pi i)^{-1} \oint dphi/(phi - z0) du, sampled
// at `samples` equispaced nodes; returns the real part (near-integer for a
// point well off the curve).
double winding_number(const Contour& c, Cplx z0, int samples);

struct ValidationReport {
    bool pass = false;
    double closure_residual = 0.0;              // |phi(0) - phi(period)|
    double winding_center = 0.0;                // around 1/2, target +1
    double min_distance_to_interval = 0.0;      // sampled distance to [0,1]
    std::vector<double> singularity_windings;   // target 0 (strictly outside)
    std::vector<double> singularity_distances;  // sampled clearance margins
    std::vector<std::string> failures;          // empty iff pass
};

// Checks that the contour closes, winds once positively around [0,1], keeps
// clear of the segment, and leaves every declared singularity of f outside.
// Failures are collected in the report, never thrown.
ValidationReport validate_contour(const Contour& c, const std::vector<Cplx>& singularities);

} // namespace fpquad
