#pragma once

#include <complex>

namespace fpquad {

using Cplx = std::complex<double>;

// Gauss hypergeometric function F(a,1;c;z) with the second upper parameter
// fixed at 1, on the cut plane C \ [1,inf). Evaluated with the Gauss
// continued fraction and the modified Lentz algorithm.
// Throws DomainError for z on [1,inf) or c a non-positive integer,
// ConvergenceError if the fraction fails to settle within max_iter
// iterations (the fraction slows down as z approaches the cut).
Cplx hyp2f1_b1(double a, double c, Cplx z, int max_iter = 500);

// Kummer confluent function M(a;b;z) = sum_k (a)_k/((b)_k k!) z^k by direct
// summation, terms added until |term| < 1e-17 |partial sum|.
double kummer_m_series(double a, double b, double z);

// Psi_alpha(z) = (alpha z)^{-1} F(alpha,1;alpha+1;1/z)
//             = int_0^1 x^(alpha-1)/(z-x) dx,   z off [0,1],
// the Cauchy-type kernel of the loop representation. Exterior form, valid
// everywhere off the segment. Throws DomainError within 1e-13 of [0,1].
Cplx psi_alpha(double alpha, Cplx z);

// The same kernel through the connection formula (A&S 15.3.7):
//   Psi_alpha(z) = -pi/sin(pi alpha) (-z)^(alpha-1)
//                  - (alpha-1)^{-1} F(1-alpha,1;2-alpha;z),
// principal branch of (-z)^(alpha-1), requires |arg(-z)| < pi.
// Exposed for cross-representation identity checks and near-interval
// diagnostics; throws DomainError for z on the ray [0,inf).
Cplx psi_alpha_connection(double alpha, Cplx z);

} // namespace fpquad
