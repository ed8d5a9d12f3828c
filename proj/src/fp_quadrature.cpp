#include "fpquad/fp_quadrature.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "fpquad/errors.hpp"
#include "fpquad/special_functions.hpp"
#include "fpquad/summation.hpp"

namespace fpquad {

namespace {

constexpr double kPi = std::numbers::pi;

// Integer power by repeated multiplication: deterministic and exactly
// conjugate-symmetric, unlike pow via log.
Cplx cpow_int(Cplx z, int e) {
    if (e < 0)
        return 1.0 / cpow_int(z, -e);
    Cplx r(1.0, 0.0);
    while (e > 0) {
        if (e & 1)
            r *= z;
        z *= z;
        e >>= 1;
    }
    return r;
}

void require_valid_contour(const Contour& c, const std::vector<Cplx>& singularities) {
    const ValidationReport rep = validate_contour(c, singularities);
    if (rep.pass)
        return;
    std::string what = "contour rejected before evaluation:";
    for (const auto& msg : rep.failures)
        what += " " + msg + ";";
    throw DomainError(what);
}

Cplx transplanted(const FpProblem& p, const Contour& c, Cplx u) {
    const Cplx z = c.phi(u);
    return cpow_int(z, -p.n) * p.f.eval(z) * psi_alpha(p.alpha, z) * c.dphi(u);
}

void require_finite(Cplx v, const char* who) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
        throw DomainError(std::string(who) + ": non-finite value produced");
}

// Winding number of the boundary-line image u -> phi(u + i v) around z0.
double line_winding(const Contour& c, double v, Cplx z0, int samples) {
    const double h = c.period / samples;
    ComplexCompensatedSum sum;
    for (int k = 0; k < samples; ++k)
        sum.add(c.dphi(Cplx(k * h, v)) / (c.phi(Cplx(k * h, v)) - z0));
    const Cplx w = sum.value() * (h / (2.0 * kPi)) * Cplx(0.0, -1.0);
    return w.real();
}

// Sampled sup of |g| over both lines Im w = +-d', after checking that the
// strip is actually usable. Every failure mode maps to StripError.
double strip_magnitude(const FpProblem& p, const Contour& c, double d_prime, int samples) {
    try {
        for (const double v : {d_prime, -d_prime}) {
            const double w_center = line_winding(c, v, Cplx(0.5, 0.0), samples);
            if (!(std::abs(w_center - 1.0) <= 0.5))
                throw StripError("d' too large: strip boundary image folds over [0,1]");
            for (const Cplx& s : p.f.singularities) {
                const double w_s = line_winding(c, v, s, samples);
                if (!(std::abs(w_s) <= 0.5))
                    throw StripError("d' too large: strip reaches a singularity of f");
            }
        }
        double sup = 0.0;
        const double h = c.period / samples;
        for (const double v : {d_prime, -d_prime}) {
            for (int k = 0; k < samples; ++k) {
                const double mag = std::abs(transplanted(p, c, Cplx(k * h, v)));
                if (!std::isfinite(mag))
                    throw StripError("d' too large: non-finite integrand on the strip boundary");
                sup = std::max(sup, mag);
            }
        }
        return sup;
    } catch (const StripError&) {
        throw;
    } catch (const DomainError& e) {
        throw StripError(std::string("d' too large: ") + e.what());
    } catch (const ConvergenceError& e) {
        throw StripError(std::string("d' too large: ") + e.what());
    }
}

} // namespace

Cplx correction_sum(double alpha, int n, const std::vector<Cplx>& derivs0) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw PreconditionError("correction_sum: alpha must lie strictly in (0,1)");
    if (n < 1)
        throw PreconditionError("correction_sum: n must be a positive integer");
    if (static_cast<int>(derivs0.size()) < n)
        throw PreconditionError("correction_sum: need at least n derivative values, got " +
                                std::to_string(derivs0.size()));
    ComplexCompensatedSum sum;
    double kfact = 1.0;
    for (int k = 0; k < n; ++k) {
        if (k > 0)
            kfact *= k;
        sum.add(derivs0[k] / (kfact * (alpha - n + k)));
    }
    return sum.value();
}

std::vector<Cplx> derivs_at_zero_cauchy(const Integrand& f, int count, double radius, int M) {
    if (count < 1)
        throw PreconditionError("derivs_at_zero_cauchy: count must be >= 1");
    if (!(radius > 0.0))
        throw PreconditionError("derivs_at_zero_cauchy: radius must be positive");
    if (M < 4 * count)
        throw PreconditionError("derivs_at_zero_cauchy: need M >= 4*count nodes");
    for (const Cplx& s : f.singularities)
        if (std::abs(s) <= radius)
            throw DomainError("derivs_at_zero_cauchy: circle radius reaches a declared singularity");

    std::vector<Cplx> samples(M);
    for (int j = 0; j < M; ++j) {
        const double theta = 2.0 * kPi * j / M;
        samples[j] = f.eval(std::polar(radius, theta));
        require_finite(samples[j], "derivs_at_zero_cauchy");
    }

    std::vector<Cplx> derivs(count);
    double kfact = 1.0;
    double rk = 1.0;
    for (int k = 0; k < count; ++k) {
        if (k > 0) {
            kfact *= k;
            rk *= radius;
        }
        ComplexCompensatedSum sum;
        for (int j = 0; j < M; ++j) {
            const double theta = 2.0 * kPi * j / M;
            sum.add(samples[j] * std::polar(1.0, -k * theta));
        }
        Cplx ck = sum.value() * (kfact / (M * rk));
        if (f.real_on_real)
            ck = Cplx(ck.real(), 0.0);
        derivs[k] = ck;
    }
    return derivs;
}

std::vector<Cplx> resolve_derivs(const FpProblem& p) {
    check_problem(p);
    if (!p.f.derivs0.empty()) {
        if (static_cast<int>(p.f.derivs0.size()) < p.n)
            throw PreconditionError("integrand supplies " + std::to_string(p.f.derivs0.size()) +
                                    " derivative values but the problem needs " + std::to_string(p.n));
        return {p.f.derivs0.begin(), p.f.derivs0.begin() + p.n};
    }
    if (p.f.taylor) {
        std::vector<Cplx> derivs(p.n);
        double kfact = 1.0;
        for (int k = 0; k < p.n; ++k) {
            if (k > 0)
                kfact *= k;
            derivs[k] = Cplx(p.f.taylor(k) * kfact, 0.0);
        }
        return derivs;
    }
    double radius = 0.5;
    for (const Cplx& s : p.f.singularities)
        radius = std::min(radius, 0.5 * std::abs(s));
    return derivs_at_zero_cauchy(p.f, p.n, radius, 128);
}

QuadResult fp_trapezoid_full(const FpProblem& p, const Contour& c, int N) {
    check_problem(p);
    if (N < 2)
        throw PreconditionError("fp_trapezoid_full: N must be >= 2");
    require_valid_contour(c, p.f.singularities);

    const Cplx correction = correction_sum(p.alpha, p.n, resolve_derivs(p));
    const double h = c.period / N;
    ComplexCompensatedSum sum;
    for (int k = 0; k < N; ++k)
        sum.add(transplanted(p, c, Cplx(k * h, 0.0)));
    const Cplx loop = sum.value() * (h / (2.0 * kPi)) * Cplx(0.0, -1.0); // h/(2 pi i) sum

    QuadResult r;
    r.loop_part = loop;
    r.correction = correction;
    r.value = loop + correction;
    r.n_points = N;
    r.imag_residue = p.f.real_on_real ? std::abs(r.value.imag()) : 0.0;
    require_finite(r.value, "fp_trapezoid_full");
    return r;
}

QuadResult fp_trapezoid_symmetric(const FpProblem& p, const Contour& c, int N) {
    check_problem(p);
    if (N < 2)
        throw PreconditionError("fp_trapezoid_symmetric: N must be >= 2");
    if (!p.f.real_on_real)
        throw PreconditionError("fp_trapezoid_symmetric: integrand must be real on the real axis");
    if (!c.symmetric)
        throw PreconditionError("fp_trapezoid_symmetric: contour must be symmetric about the real axis");
    require_valid_contour(c, p.f.singularities);

    const Cplx correction = correction_sum(p.alpha, p.n, resolve_derivs(p));
    const double h = c.period / (2.0 * N);
    CompensatedSum interior;
    for (int k = 1; k < N; ++k)
        interior.add(transplanted(p, c, Cplx(k * h, 0.0)).imag());
    const double ends = transplanted(p, c, Cplx(0.0, 0.0)).imag() +
                        transplanted(p, c, Cplx(N * h, 0.0)).imag();
    const double loop = (h / (2.0 * kPi)) * ends + (h / kPi) * interior.value();

    QuadResult r;
    r.loop_part = Cplx(loop, 0.0);
    r.correction = Cplx(correction.real(), 0.0);
    r.value = r.loop_part + r.correction;
    r.n_points = N;
    r.imag_residue = 0.0;
    require_finite(r.value, "fp_trapezoid_symmetric");
    return r;
}

double error_bound(const FpProblem& p, const Contour& c, double d_prime, int N, int samples) {
    check_problem(p);
    if (!(d_prime > 0.0))
        throw PreconditionError("error_bound: d' must be positive");
    if (N < 2)
        throw PreconditionError("error_bound: N must be >= 2");
    if (samples < 16)
        throw PreconditionError("error_bound: need at least 16 samples per line");

    const double sup = strip_magnitude(p, c, d_prime, samples);
    const double q = std::exp(-2.0 * kPi * d_prime * N / c.period);
    return (c.period / kPi) * sup * q / (1.0 - q);
}

double auto_d_prime(const FpProblem& p, const Contour& c, int samples) {
    check_problem(p);
    for (double d = 4.0; d > 1e-3; d *= 0.93) {
        try {
            strip_magnitude(p, c, d, samples);
            return 0.9 * d;
        } catch (const StripError&) {
            // too wide; shrink and retry
        }
    }
    throw StripError("auto_d_prime: no usable strip width found on the scan grid");
}

} // namespace fpquad
