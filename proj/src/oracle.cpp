#include "fpquad/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "fpquad/errors.hpp"
#include "fpquad/fp_quadrature.hpp"
#include "fpquad/quadrature.hpp"
#include "fpquad/special_functions.hpp"
#include "fpquad/summation.hpp"

namespace fpquad {

namespace {

// Evaluate sum_j c[j] x^j (Horner).
double horner(const std::vector<double>& c, double x) {
    double acc = 0.0;
    for (std::size_t j = c.size(); j-- > 0;) acc = acc * x + c[j];
    return acc;
}

constexpr int kTailTerms = 60;       // Taylor tail length past x^(n-1)
constexpr double kSeriesSwitch = 0.25;

// Tail coefficients a_k = f^(k)(0)/k! for k = n .. n+kTailTerms-1, from the
// integrand's Taylor data or, failing that, Cauchy-circle extraction. Returns
// false (direct subtraction fallback) when neither route yields coefficients
// tame enough for the series to converge on (0, 1/4].
bool build_tail(const FpProblem& p, std::vector<double>& tail) {
    const int count = p.n + kTailTerms;
    tail.assign(static_cast<std::size_t>(kTailTerms), 0.0);
    if (p.f.taylor) {
        for (int k = 0; k < kTailTerms; ++k) tail[static_cast<std::size_t>(k)] = p.f.taylor(p.n + k);
    } else {
        try {
            double radius = 0.5;
            for (const Cplx& s : p.f.singularities) radius = std::min(radius, std::abs(s) / 2.0);
            const auto derivs = derivs_at_zero_cauchy(p.f, count, radius, std::max(256, 4 * count));
            double factorial = 1.0;
            for (int k = 1; k < p.n; ++k) factorial *= k;
            for (int k = 0; k < kTailTerms; ++k) {
                factorial *= (p.n + k == 0) ? 1.0 : static_cast<double>(p.n + k);
                tail[static_cast<std::size_t>(k)] =
                    derivs[static_cast<std::size_t>(p.n + k)].real() / factorial;
            }
        } catch (const Error&) {
            return false;
        }
    }
    const double scale = 1.0 + std::abs(tail[0]);
    double weight = 1.0;
    for (int k = 0; k < kTailTerms; ++k) {
        if (!(std::abs(tail[static_cast<std::size_t>(k)]) * weight <= 1e6 * scale)) return false;
        weight *= kSeriesSwitch;
    }
    return true;
}

} // namespace

void check_schedule(const EpsilonSchedule& sched) {
    if (!(sched.eps0 > 0.0) || !(sched.eps0 <= 0.1))
        throw PreconditionError("epsilon schedule: eps0 must lie in (0, 0.1]");
    if (!(sched.ratio > 0.0) || !(sched.ratio < 1.0))
        throw PreconditionError("epsilon schedule: ratio must lie in (0, 1)");
    if (sched.count < 3)
        throw PreconditionError("epsilon schedule: count must be at least 3 (the limit fit needs three points)");
    if (!(sched.eps0 * std::pow(sched.ratio, sched.count) > 1e-8))
        throw PreconditionError(
            "epsilon schedule: eps0 * ratio^count must stay above 1e-8; smaller cutoffs drown in roundoff");
}

LimitResult fp_limit_definition(const FpProblem& p, const EpsilonSchedule& sched) {
    check_problem(p);
    check_schedule(sched);
    if (!p.f.real_on_real)
        throw PreconditionError("fp_limit_definition requires an integrand that is real on (0,1)");

    const auto derivs = resolve_derivs(p);
    std::vector<double> head(static_cast<std::size_t>(p.n));
    double factorial = 1.0;
    for (int k = 0; k < p.n; ++k) {
        if (k > 0) factorial *= k;
        head[static_cast<std::size_t>(k)] = derivs[static_cast<std::size_t>(k)].real() / factorial;
    }

    std::vector<double> tail;
    const bool tail_ok = build_tail(p, tail);

    const auto integrand = [&](double x) {
        if (tail_ok && x < kSeriesSwitch)
            return horner(tail, x) * std::pow(x, p.alpha - 1.0);
        const double fx = p.f.eval(Cplx(x, 0.0)).real();
        return (fx - horner(head, x)) * std::pow(x, p.alpha - 1.0 - p.n);
    };

    const double corr = correction_sum(p.alpha, p.n, derivs).real();

    const auto regularized = [&](double eps) {
        std::vector<double> cuts{eps};
        while (cuts.back() * 2.0 < 1.0) cuts.push_back(cuts.back() * 2.0);
        cuts.push_back(1.0);
        QuadOptions opts;
        opts.abs_tol = 1e-12 / static_cast<double>(cuts.size() - 1);
        CompensatedSum acc;
        for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
            acc.add(integrate_adaptive(integrand, cuts[i], cuts[i + 1], opts));
        return corr + acc.value();
    };

    std::vector<double> eps(static_cast<std::size_t>(sched.count));
    std::vector<double> reg(static_cast<std::size_t>(sched.count));
    for (int i = 0; i < sched.count; ++i) {
        eps[static_cast<std::size_t>(i)] = (i == 0) ? sched.eps0 : eps[static_cast<std::size_t>(i - 1)] * sched.ratio;
        reg[static_cast<std::size_t>(i)] = regularized(eps[static_cast<std::size_t>(i)]);
    }

    // The regularized values must settle monotonically as eps shrinks; a
    // growing residual means the quadrature is chasing structure the Taylor
    // subtraction did not capture.
    for (int i = 0; i + 2 < sched.count; ++i) {
        const double d0 = std::abs(reg[static_cast<std::size_t>(i + 1)] - reg[static_cast<std::size_t>(i)]);
        const double d1 = std::abs(reg[static_cast<std::size_t>(i + 2)] - reg[static_cast<std::size_t>(i + 1)]);
        if (d1 > 2.0 * d0 && d1 > 1e-11)
            throw ConvergenceError("fp_limit_definition: residuals grew along the epsilon ladder; "
                                   "refine the schedule or supply Taylor data for the integrand");
    }

    // Model R(eps) = L + C0 eps^alpha + C1 eps^(alpha+1) through the last
    // three points; the two-term fit through the last two gauges the error.
    const std::size_t m = static_cast<std::size_t>(sched.count);
    double A[3][4];
    for (int r = 0; r < 3; ++r) {
        const double e = eps[m - 3 + static_cast<std::size_t>(r)];
        A[r][0] = 1.0;
        A[r][1] = std::pow(e, p.alpha);
        A[r][2] = std::pow(e, p.alpha + 1.0);
        A[r][3] = reg[m - 3 + static_cast<std::size_t>(r)];
    }
    for (int col = 0; col < 3; ++col) {
        int pivot = col;
        for (int r = col + 1; r < 3; ++r)
            if (std::abs(A[r][col]) > std::abs(A[pivot][col])) pivot = r;
        if (std::abs(A[pivot][col]) < 1e-300)
            throw ConvergenceError("fp_limit_definition: degenerate extrapolation system");
        if (pivot != col)
            for (int c = col; c < 4; ++c) std::swap(A[pivot][c], A[col][c]);
        for (int r = 0; r < 3; ++r) {
            if (r == col) continue;
            const double factor = A[r][col] / A[col][col];
            for (int c = col; c < 4; ++c) A[r][c] -= factor * A[col][c];
        }
    }
    const double fit3 = A[0][3] / A[0][0];

    const double t1 = std::pow(eps[m - 2], p.alpha);
    const double t2 = std::pow(eps[m - 1], p.alpha);
    const double fit2 = (reg[m - 1] * t1 - reg[m - 2] * t2) / (t1 - t2);

    LimitResult out;
    out.value = fit3;
    out.error_estimate = std::abs(fit3 - fit2) + 1e-11;
    return out;
}

double reference_exp(double alpha, int n) {
    if (!(alpha > 0.0) || !(alpha < 1.0)) throw PreconditionError("reference_exp: alpha must lie in (0,1)");
    if (n < 1) throw PreconditionError("reference_exp: n must be at least 1");
    CompensatedSum sum;
    double inv_mfact = 1.0;
    for (int m = 0; m < 200; ++m) {
        if (m > 0) inv_mfact /= m;
        const double term = inv_mfact / (alpha - n + m);
        sum.add(term);
        if (m > n + 2 && std::abs(term) < 1e-17 * std::abs(sum.value())) return sum.value();
    }
    throw ConvergenceError("reference_exp: series failed to settle");
}

namespace {

// sum_{j>=0} (-1)^j / (a + 2j) by direct summation of the first terms plus
// Euler transformation (iterated averaging of partial sums) of the rest.
double alternating_series(double a) {
    constexpr int kHead = 20;
    constexpr int kCols = 40;
    CompensatedSum headsum;
    for (int j = 0; j < kHead; ++j) headsum.add(((j % 2 == 0) ? 1.0 : -1.0) / (a + 2.0 * j));
    double avg[kCols];
    double partial = 0.0;
    for (int k = 0; k < kCols; ++k) {
        const int j = kHead + k;
        partial += ((j % 2 == 0) ? 1.0 : -1.0) / (a + 2.0 * j);
        avg[k] = partial;
    }
    for (int width = kCols - 1; width > 0; --width)
        for (int k = 0; k < width; ++k) avg[k] = 0.5 * (avg[k] + avg[k + 1]);
    return headsum.value() + avg[0];
}

} // namespace

double reference_rational(double alpha, int n) {
    if (!(alpha > 0.0) || !(alpha < 1.0)) throw PreconditionError("reference_rational: alpha must lie in (0,1)");
    if (n < 1) throw PreconditionError("reference_rational: n must be at least 1");
    const double a = alpha - n;
    // Expanding 1/(1+x^2) termwise gives sum_j (-1)^j/(a+2j), which equals
    // Re F(a,1;a+1;i)/a by the Euler integral of the Gauss function; the
    // finite part extends both to a < 0.
    const double primary = (hyp2f1_b1(a, a + 1.0, Cplx(0.0, 1.0)) / a).real();
    const double series = alternating_series(a);
    if (std::abs(primary - series) > 1e-10 * std::max(1.0, std::abs(primary)))
        throw ConvergenceError("reference_rational: continued-fraction and accelerated-series routes disagree");
    return primary;
}

double reference_polynomial(double alpha, int n, const std::vector<double>& coeffs) {
    if (!(alpha > 0.0) || !(alpha < 1.0)) throw PreconditionError("reference_polynomial: alpha must lie in (0,1)");
    if (n < 1) throw PreconditionError("reference_polynomial: n must be at least 1");
    if (coeffs.empty()) throw PreconditionError("reference_polynomial: empty coefficient list");
    CompensatedSum sum;
    for (std::size_t j = 0; j < coeffs.size(); ++j)
        sum.add(coeffs[j] / (alpha - n + static_cast<double>(j)));
    return sum.value();
}

} // namespace fpquad
