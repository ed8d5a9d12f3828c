#pragma once

#include <vector>

#include "fpquad/contour.hpp"
#include "fpquad/integrand.hpp"

namespace fpquad {

// Result of one trapezoidal evaluation of the loop representation
//
//   fp int = (2 pi i)^{-1} \oint_C z^{-n} f(z) Psi_alpha(z) dz
//            + sum_{k=0}^{n-1} f^(k)(0) / (k! (alpha-n+k)).
//
// value = loop_part + correction holds exactly, by construction.
struct QuadResult {
    Cplx value{};
    Cplx loop_part{};
    Cplx correction{};
    int n_points = 0;
    double imag_residue = 0.0; // |Im value| when f is real on the real axis
};

// sum_{k=0}^{n-1} derivs0[k] / (k! (alpha-n+k)). The denominators never
// vanish for alpha strictly inside (0,1). Throws PreconditionError when
// fewer than n derivative values are supplied.
Cplx correction_sum(double alpha, int n, const std::vector<Cplx>& derivs0);

// Taylor-coefficient extraction on a circle of the given radius:
//   f^(k)(0) ~= (k!/M) sum_j f(r e^{i theta_j}) r^{-k} e^{-i k theta_j},
// theta_j = 2 pi j / M, k = 0..count-1. Imaginary parts are discarded when
// f is real on the real axis (conjugate symmetrization). Requires
// M >= 4*count and a circle free of declared singularities.
std::vector<Cplx> derivs_at_zero_cauchy(const Integrand& f, int count, double radius, int M);

// f^(k)(0) for k < n: user-supplied derivs0 take precedence, then exact
// Taylor data, then the Cauchy circle with radius min(0.5, half the distance
// to the nearest declared singularity) and M = 128 nodes.
std::vector<Cplx> resolve_derivs(const FpProblem& p);

// Full trapezoidal rule, mesh h = period/N over nodes u_k = k h, k = 0..N-1:
//   loop_part = h/(2 pi i) sum_k phi(u_k)^{-n} f(phi(u_k)) Psi_alpha(phi(u_k)) phi'(u_k).
// The contour is validated against the integrand's declared singularities
// before any evaluation (DomainError on failure).
QuadResult fp_trapezoid_full(const FpProblem& p, const Contour& c, int N);

// Symmetry-reduced rule for real-on-real f on a real-axis-symmetric contour,
// mesh h = period/(2N): endpoint nodes u = 0 and u = period/2 enter with
// weight h/(2 pi) on Im g, interior nodes with weight h/pi on Im g. Equals
// the full rule with 2N nodes exactly (conjugate folding); the result is
// real by construction. Same correction sign convention as the full rule.
QuadResult fp_trapezoid_symmetric(const FpProblem& p, const Contour& c, int N);

// A-priori bound for |fp int - full rule with N nodes|:
//   (period/pi) * Nmax * q / (1 - q),   q = exp(-2 pi d' N / period),
// where Nmax is the sampled maximum of |phi(w)^{-n} f(phi(w))
// Psi_alpha(phi(w)) phi'(w)| over the strip boundary lines Im w = +-d'.
// Before sampling, the strip is checked: each boundary-line image must still
// wind once around 1/2 (guards against the map folding over [0,1]) and keep
// every declared singularity outside. Any failure throws StripError
// ("d' too large").
double error_bound(const FpProblem& p, const Contour& c, double d_prime, int N, int samples = 512);

// Largest d' from the geometric grid 4.0 * 0.93^k whose strip evaluates
// cleanly, times a 0.9 safety factor. Throws StripError when no grid point
// works.
double auto_d_prime(const FpProblem& p, const Contour& c, int samples = 512);

} // namespace fpquad
