#include "fpquad/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "fpquad/errors.hpp"
#include "fpquad/summation.hpp"

namespace fpquad {

namespace {

constexpr double kLentzTiny = 1e-300;
constexpr double kLentzTol = 1e-15;

// Partial-numerator coefficients of the Gauss continued fraction
//
//   F(a,1;c;z) = 1 / (1 + d_1 z / (1 + d_2 z / (1 + ...)))
//
//   d_{2i+1} = -(a+i)(c-1+i) / ((c-1+2i)(c+2i)),   i >= 0
//   d_{2i}   = -i(c-1-a+i) / ((c-2+2i)(c-1+2i)),   i >= 1
//
// (Gauss's cf for ratios of contiguous 2F1, specialized to b=1 so the
// numerator function is F(a,0;c-1;z) = 1; cf. Henrici vol. 2 sec. 12.5.)
double gauss_cf_coeff(double a, double c, int k) {
    if (k % 2 == 1) {
        const double i = (k - 1) / 2;
        return -(a + i) * (c - 1 + i) / ((c - 1 + 2 * i) * (c + 2 * i));
    }
    const double i = k / 2;
    return -i * (c - 1 - a + i) / ((c - 2 + 2 * i) * (c - 1 + 2 * i));
}

bool nonpositive_integer(double x) {
    return x <= 0.0 && x == std::floor(x);
}

void require_alpha(double alpha, const char* who) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw PreconditionError(std::string(who) + ": alpha must lie strictly in (0,1)");
}

} // namespace

Cplx hyp2f1_b1(double a, double c, Cplx z, int max_iter) {
    if (nonpositive_integer(c))
        throw DomainError("hyp2f1_b1: c must not be zero or a negative integer");
    if (z.imag() == 0.0 && z.real() >= 1.0)
        throw DomainError("hyp2f1_b1: z lies on the branch cut [1,inf)");
    if (max_iter < 1)
        throw PreconditionError("hyp2f1_b1: max_iter must be positive");

    // Modified Lentz on G = 1 + d_1 z/(1 + d_2 z/(1 + ...)); then F = 1/G.
    Cplx f = 1.0;
    Cplx C = 1.0;
    Cplx D = 0.0;
    for (int k = 1; k <= max_iter; ++k) {
        const Cplx ak = gauss_cf_coeff(a, c, k) * z;
        D = 1.0 + ak * D;
        if (D == 0.0)
            D = kLentzTiny;
        C = 1.0 + ak / C;
        if (C == 0.0)
            C = kLentzTiny;
        D = 1.0 / D;
        const Cplx delta = C * D;
        f *= delta;
        if (std::abs(delta - 1.0) < kLentzTol) {
            const Cplx result = 1.0 / f;
            if (!std::isfinite(result.real()) || !std::isfinite(result.imag()))
                throw DomainError("hyp2f1_b1: non-finite result");
            return result;
        }
    }
    throw ConvergenceError("hyp2f1_b1: continued fraction not converged after " +
                           std::to_string(max_iter) + " iterations");
}

double kummer_m_series(double a, double b, double z) {
    if (nonpositive_integer(b))
        throw DomainError("kummer_m_series: b must not be zero or a negative integer");

    CompensatedSum sum;
    sum.add(1.0);
    double term = 1.0;
    for (int k = 0; k < 1000; ++k) {
        term *= (a + k) / ((b + k) * (k + 1)) * z;
        sum.add(term);
        if (!std::isfinite(term))
            throw Error("kummer_m_series: non-finite accumulation");
        if (std::abs(term) < 1e-17 * std::abs(sum.value()))
            return sum.value();
    }
    throw ConvergenceError("kummer_m_series: series not converged after 1000 terms");
}

Cplx psi_alpha(double alpha, Cplx z) {
    require_alpha(alpha, "psi_alpha");
    // Distance from z to the segment [0,1] (which lies on the real axis).
    const double t = std::clamp(z.real(), 0.0, 1.0);
    if (std::abs(z - Cplx(t, 0.0)) <= 1e-13)
        throw DomainError("psi_alpha: z within 1e-13 of the segment [0,1]");
    return hyp2f1_b1(alpha, alpha + 1.0, 1.0 / z) / (alpha * z);
}

Cplx psi_alpha_connection(double alpha, Cplx z) {
    require_alpha(alpha, "psi_alpha_connection");
    if (z.imag() == 0.0 && z.real() >= 0.0)
        throw DomainError("psi_alpha_connection: z on the branch cut [0,inf)");
    // (-z)^(alpha-1) = exp((alpha-1) log(-z)), principal log, arg in (-pi,pi].
    const Cplx branch = std::exp((alpha - 1.0) * std::log(-z));
    const double pi = std::numbers::pi;
    // The fraction's convergence factor approaches 1 like
    // 1 - 2 cos(arg(-z)/2)/sqrt|z| near the positive real axis, so points
    // deep in the admissible wedge need a few thousand iterations.
    return -(pi / std::sin(pi * alpha)) * branch -
           hyp2f1_b1(1.0 - alpha, 2.0 - alpha, z, 4000) / (alpha - 1.0);
}

} // namespace fpquad
