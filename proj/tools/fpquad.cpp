// Command-line front end: evaluate Hadamard finite-part integrals
// fp int_0^1 x^(alpha-1-n) f(x) dx, run convergence sweeps, and tabulate the
// a-priori trapezoid error bound.
//
// Exit codes: 0 success, 2 usage error (bad flags or parameter domain),
// 3 numerical failure (contour rejected, non-convergence, unusable strip).

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "fpquad/contour.hpp"
#include "fpquad/convergence.hpp"
#include "fpquad/errors.hpp"
#include "fpquad/fp_quadrature.hpp"
#include "fpquad/integrand.hpp"
#include "fpquad/oracle.hpp"

namespace {

using fpquad::Cplx;

struct CommonArgs {
    std::string f = "exp";
    int m = 0;
    std::string coeffs;
    double alpha = 0.0;
    int n = 0;
    double rho = 3.0;
};

struct SweepArgs {
    int N = 0;
    int Nmin = 4;
    int Nmax = 96;
    int Nstep = 4;
};

void add_common(CLI::App* cmd, CommonArgs& a) {
    cmd->add_option("--f", a.f, "built-in integrand f(x)")
        ->check(CLI::IsMember({"one", "exp", "rational1px2", "monomial", "poly"}))
        ->capture_default_str();
    cmd->add_option("--m", a.m, "degree for --f monomial");
    cmd->add_option("--coeffs", a.coeffs, "comma-separated coefficients a0,a1,... for --f poly");
    cmd->add_option("--alpha", a.alpha, "exponent parameter alpha, 0 < alpha < 1")->required();
    cmd->add_option("--n", a.n, "singularity order n >= 1")->required();
    cmd->add_option("--rho", a.rho, "Bernstein ellipse parameter rho > 1")->capture_default_str();
}

void add_sweep(CLI::App* cmd, SweepArgs& s) {
    cmd->add_option("--N", s.N, "evaluate a single node count (overrides the sweep)");
    cmd->add_option("--Nmin", s.Nmin, "sweep start")->capture_default_str();
    cmd->add_option("--Nmax", s.Nmax, "sweep end (inclusive)")->capture_default_str();
    cmd->add_option("--Nstep", s.Nstep, "sweep stride")->capture_default_str();
}

std::vector<double> parse_coeff_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const char* begin = item.c_str();
        char* end = nullptr;
        const double v = std::strtod(begin, &end);
        if (end == begin || *end != '\0')
            throw fpquad::PreconditionError("--coeffs: cannot parse '" + item + "' as a number");
        out.push_back(v);
    }
    if (out.empty()) throw fpquad::PreconditionError("--coeffs: empty coefficient list");
    return out;
}

struct Built {
    fpquad::FpProblem problem;
    double reference = 0.0;
};

Built build_problem(const CommonArgs& a) {
    if (!(a.alpha > 0.0) || !(a.alpha < 1.0))
        throw fpquad::PreconditionError("--alpha must lie strictly between 0 and 1");
    if (a.n < 1) throw fpquad::PreconditionError("--n must be at least 1");
    if (!(a.rho > 1.0)) throw fpquad::PreconditionError("--rho must exceed 1");
    Built b;
    b.problem.alpha = a.alpha;
    b.problem.n = a.n;
    if (a.f == "one") {
        b.problem.f = fpquad::integrand_one();
        b.reference = fpquad::reference_polynomial(a.alpha, a.n, {1.0});
    } else if (a.f == "exp") {
        b.problem.f = fpquad::integrand_exp();
        b.reference = fpquad::reference_exp(a.alpha, a.n);
    } else if (a.f == "rational1px2") {
        b.problem.f = fpquad::integrand_rational1px2();
        b.reference = fpquad::reference_rational(a.alpha, a.n);
    } else if (a.f == "monomial") {
        if (a.m < 0) throw fpquad::PreconditionError("--m must be nonnegative");
        b.problem.f = fpquad::integrand_monomial(a.m);
        std::vector<double> c(static_cast<std::size_t>(a.m) + 1, 0.0);
        c.back() = 1.0;
        b.reference = fpquad::reference_polynomial(a.alpha, a.n, c);
    } else {
        if (a.coeffs.empty()) throw fpquad::PreconditionError("--f poly requires --coeffs");
        const std::vector<double> c = parse_coeff_list(a.coeffs);
        b.problem.f = fpquad::integrand_poly(c);
        b.reference = fpquad::reference_polynomial(a.alpha, a.n, c);
    }
    return b;
}

std::vector<int> sweep_list(const CLI::App* cmd, const SweepArgs& s) {
    if (cmd->count("--N") > 0) {
        if (s.N < 2) throw fpquad::PreconditionError("--N must be at least 2");
        return {s.N};
    }
    if (s.Nmin < 2 || s.Nmax < s.Nmin || s.Nstep < 1)
        throw fpquad::PreconditionError("need 2 <= Nmin <= Nmax and Nstep >= 1");
    std::vector<int> out;
    for (int v = s.Nmin; v <= s.Nmax; v += s.Nstep) out.push_back(v);
    return out;
}

double resolve_dprime(const std::string& text, const fpquad::FpProblem& p, const fpquad::Contour& c) {
    if (text == "auto") return fpquad::auto_d_prime(p, c);
    const char* begin = text.c_str();
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end == begin || *end != '\0')
        throw fpquad::PreconditionError("--dprime expects a positive real number or 'auto'");
    if (!(v > 0.0)) throw fpquad::PreconditionError("--dprime must be positive");
    return v;
}

// Routes the machine-readable table to --out (or stdout) and the human
// summary to stdout (or stderr), so piped output stays clean.
class OutputTarget {
  public:
    explicit OutputTarget(const std::string& path) {
        if (!path.empty()) {
            file_.open(path, std::ios::binary);
            if (!file_) throw fpquad::PreconditionError("cannot open output file: " + path);
            to_file_ = true;
        }
    }
    std::ostream& data() { return to_file_ ? file_ : std::cout; }
    std::ostream& summary() { return to_file_ ? std::cout : std::cerr; }

  private:
    std::ofstream file_;
    bool to_file_ = false;
};

std::string g17(double x) { return fpquad::format_g17(x); }

struct ComputeArgs {
    CommonArgs common;
    int N = 48;
    std::string dprime;
    std::string out;
    std::string format = "pretty";
};

int run_compute(const ComputeArgs& a) {
    const Built b = build_problem(a.common);
    const fpquad::Contour contour = fpquad::make_ellipse(a.common.rho);
    if (a.N < 2) throw fpquad::PreconditionError("--N must be at least 2");
    const fpquad::QuadResult q = fpquad::fp_trapezoid_symmetric(b.problem, contour, a.N);
    const bool with_bound = !a.dprime.empty();
    double dp = 0.0, bound = 0.0;
    if (with_bound) {
        dp = resolve_dprime(a.dprime, b.problem, contour);
        // the symmetric rule at N nodes carries the full rule's 2N-node error
        bound = fpquad::error_bound(b.problem, contour, dp, 2 * a.N);
    }
    OutputTarget target(a.out);
    std::ostream& os = target.data();
    if (a.format == "csv") {
        os << "value,loop_part,correction,N";
        if (with_bound) os << ",d_prime,bound";
        os << '\n'
           << g17(q.value.real()) << ',' << g17(q.loop_part.real()) << ',' << g17(q.correction.real())
           << ',' << a.N;
        if (with_bound) os << ',' << g17(dp) << ',' << g17(bound);
        os << '\n';
    } else {
        os << "value      = " << g17(q.value.real()) << '\n';
        os << "loop part  = " << g17(q.loop_part.real()) << '\n';
        os << "correction = " << g17(q.correction.real()) << '\n';
        os << "N          = " << a.N << '\n';
        if (with_bound) {
            os << "d_prime    = " << g17(dp) << '\n';
            os << "bound      = " << g17(bound) << '\n';
        }
    }
    return 0;
}

struct ConvergeArgs {
    CommonArgs common;
    SweepArgs sweep;
    std::string out;
    std::string format = "csv";
};

int run_converge(const CLI::App* cmd, const ConvergeArgs& a) {
    const Built b = build_problem(a.common);
    const fpquad::Contour contour = fpquad::make_ellipse(a.common.rho);
    const std::vector<int> Ns = sweep_list(cmd, a.sweep);
    const fpquad::ConvergenceReport report =
        fpquad::run_convergence(b.problem, contour, Ns, b.reference, true);
    OutputTarget target(a.out);
    if (a.format == "csv") {
        fpquad::write_csv(target.data(), report);
    } else {
        std::ostream& os = target.data();
        os << "reference = " << g17(report.reference) << '\n';
        char buf[96];
        std::snprintf(buf, sizeof buf, "%6s  %-24s  %-12s  %-12s", "N", "value", "abs_error", "rel_error");
        os << buf << '\n';
        for (const fpquad::ConvergenceRow& row : report.rows) {
            std::snprintf(buf, sizeof buf, "%6d  %-24.17g  %-12.5e  %-12.5e", row.N, row.value,
                          row.abs_error, row.rel_error);
            os << buf << '\n';
        }
    }
    std::ostream& sm = target.summary();
    sm << "reference = " << g17(report.reference) << '\n';
    if (report.rate_determined)
        sm << "fitted rate = " << g17(report.fitted_rate) << " (error ~ rate^N)" << '\n';
    else
        sm << "fitted rate = indeterminate" << '\n';
    if (report.floor_N != 0) sm << "roundoff floor from N = " << report.floor_N << '\n';
    return 0;
}

struct BoundArgs {
    CommonArgs common;
    SweepArgs sweep;
    std::string dprime;
    std::string out;
    std::string format = "csv";
};

int run_bound(const CLI::App* cmd, const BoundArgs& a) {
    const Built b = build_problem(a.common);
    const fpquad::Contour contour = fpquad::make_ellipse(a.common.rho);
    const double dp = resolve_dprime(a.dprime, b.problem, contour);
    const std::vector<int> Ns = sweep_list(cmd, a.sweep);
    OutputTarget target(a.out);
    std::ostream& os = target.data();
    if (a.format == "csv") os << "N,bound,actual_error\n";
    for (int N : Ns) {
        const double bound = fpquad::error_bound(b.problem, contour, dp, N);
        const fpquad::QuadResult q = fpquad::fp_trapezoid_full(b.problem, contour, N);
        const double actual = std::abs(q.value - Cplx(b.reference, 0.0));
        if (a.format == "csv") {
            os << N << ',' << g17(bound) << ',' << g17(actual) << '\n';
        } else {
            char buf[80];
            std::snprintf(buf, sizeof buf, "%6d  %-12.5e  %-12.5e", N, bound, actual);
            os << buf << '\n';
        }
    }
    target.summary() << "d_prime = " << g17(dp) << '\n';
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hadamard finite-part integrals fp int_0^1 x^(alpha-1-n) f(x) dx "
                 "by trapezoidal quadrature on an elliptic contour"};
    app.require_subcommand(1);

    ComputeArgs ca;
    CLI::App* compute = app.add_subcommand("compute", "evaluate the integral at one node count");
    add_common(compute, ca.common);
    compute->add_option("--N", ca.N, "node count for the symmetric rule")->capture_default_str();
    compute->add_option("--dprime", ca.dprime, "strip half-width for the error bound (number or 'auto')");
    compute->add_option("--out", ca.out, "write output to this file instead of stdout");
    compute->add_option("--format", ca.format, "output format")
        ->check(CLI::IsMember({"csv", "pretty"}))
        ->capture_default_str();

    ConvergeArgs va;
    CLI::App* converge = app.add_subcommand("converge", "sweep node counts against the reference value");
    add_common(converge, va.common);
    add_sweep(converge, va.sweep);
    converge->add_option("--out", va.out, "write the table to this file instead of stdout");
    converge->add_option("--format", va.format, "output format")
        ->check(CLI::IsMember({"csv", "pretty"}))
        ->capture_default_str();

    BoundArgs ba;
    CLI::App* bound = app.add_subcommand("bound", "tabulate the a-priori error bound against actual error");
    add_common(bound, ba.common);
    add_sweep(bound, ba.sweep);
    bound->add_option("--dprime", ba.dprime, "strip half-width (number or 'auto')")->required();
    bound->add_option("--out", ba.out, "write the table to this file instead of stdout");
    bound->add_option("--format", ba.format, "output format")
        ->check(CLI::IsMember({"csv", "pretty"}))
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (compute->parsed()) return run_compute(ca);
        if (converge->parsed()) return run_converge(converge, va);
        return run_bound(bound, ba);
    } catch (const fpquad::PreconditionError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const fpquad::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
}
