#pragma once

#include <vector>

#include "fpquad/integrand.hpp"

namespace fpquad {

// Epsilon ladder for the limit-definition evaluator: eps_i = eps0 * ratio^i,
// i = 0..count-1.
struct EpsilonSchedule {
    double eps0 = 1e-2;
    double ratio = 0.25;
    int count = 8;
};

// Throws PreconditionError unless eps0 <= 0.1, 0 < ratio < 1, count >= 3,
// and eps0 * ratio^count stays above 1e-8 (the roundoff danger zone).
void check_schedule(const EpsilonSchedule& sched);

struct LimitResult {
    double value = 0.0;
    double error_estimate = 0.0;
};

// Independent reference evaluator straight from the definition
//
//   fp int = lim_{eps->0} [ int_eps^1 x^(alpha-1-n) f(x) dx
//            - sum_{k<n} eps^(alpha-n+k) f^(k)(0) / (k! (n-k-alpha)) ].
//
// The divergent subtraction is folded into the integrand algebraically
// (identical in exact arithmetic): the regularized value equals
//   sum_{k<n} f^(k)(0)/(k!(alpha-n+k)) + int_eps^1 x^(alpha-1-n) (f - T_{n-1}) dx
// with T_{n-1} the order-(n-1) Taylor polynomial. The integral is evaluated
// by adaptive Gauss-Kronrod on octaves split geometrically toward eps; for
// x < 1/4 the factor (f - T_{n-1})/x^n is summed as a Taylor tail when the
// coefficients are available and tame (avoids subtractive cancellation).
// The eps -> 0 limit is a Richardson-style fit of L + C0 eps^alpha
// + C1 eps^(alpha+1) through the last three ladder points.
//
// Throws ConvergenceError when the residuals behave non-monotonically
// (schedule too aggressive for the integrand).
LimitResult fp_limit_definition(const FpProblem& p, const EpsilonSchedule& sched = {});

// fp int_0^1 x^(alpha-1-n) e^x dx = sum_{m>=0} 1/(m! (alpha-n+m)),
// summed to |term| < 1e-17 |sum|.
double reference_exp(double alpha, int n);

// fp int_0^1 x^(alpha-1-n)/(1+x^2) dx = Re F(a,1;a+1;i)/a with a = alpha-n,
// cross-checked internally against the Euler-accelerated alternating series
// sum_j (-1)^j/(a+2j); disagreement beyond 1e-10 throws ConvergenceError.
double reference_rational(double alpha, int n);

// fp int_0^1 x^(alpha-1-n) sum_j c_j x^j dx = sum_j c_j/(alpha-n+j)
// (exact monomial rule, term by term).
double reference_polynomial(double alpha, int n, const std::vector<double>& coeffs);

} // namespace fpquad
