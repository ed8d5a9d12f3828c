#include <cmath>
#include <cstdlib>
#include <cstring>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "doctest.h"

#include "fpquad/contour.hpp"
#include "fpquad/convergence.hpp"
#include "fpquad/errors.hpp"
#include "fpquad/integrand.hpp"
#include "fpquad/oracle.hpp"

namespace {

fpquad::FpProblem make_problem(double alpha, int n, fpquad::Integrand f) {
    fpquad::FpProblem p;
    p.alpha = alpha;
    p.n = n;
    p.f = std::move(f);
    return p;
}

std::vector<int> range(int lo, int hi, int step) {
    std::vector<int> out;
    for (int v = lo; v <= hi; v += step) out.push_back(v);
    return out;
}

} // namespace

TEST_CASE("fit_rate recovers a synthetic geometric decay") {
    std::vector<std::pair<int, double>> pts;
    for (int N = 4; N <= 20; ++N) pts.emplace_back(N, 7.0 * std::pow(0.5, N));
    CHECK(fpquad::fit_rate(pts) == doctest::Approx(0.5).epsilon(1e-6));
}

TEST_CASE("fit_rate needs two positive errors") {
    CHECK(std::isnan(fpquad::fit_rate({})));
    CHECK(std::isnan(fpquad::fit_rate({{4, 1e-3}})));
    CHECK(std::isnan(fpquad::fit_rate({{4, 1e-3}, {8, 0.0}})));
}

TEST_CASE("convergence study on the exp benchmark") {
    const auto p = make_problem(0.1, 1, fpquad::integrand_exp());
    const fpquad::ConvergenceReport rep = fpquad::run_convergence(
        p, fpquad::make_ellipse(10.0), range(4, 24, 1), fpquad::reference_exp(0.1, 1));
    REQUIRE(rep.rows.size() == 21);
    CHECK(rep.rate_determined);
    CHECK(rep.fitted_rate > 0.01);
    CHECK(rep.fitted_rate < 0.06);
    CHECK(rep.floor_N != 0);  // machine precision is reached inside this sweep
    double min_rel = 1.0;
    for (const auto& row : rep.rows) min_rel = std::min(min_rel, row.rel_error);
    CHECK(min_rel <= 1e-12);
}

TEST_CASE("convergence study on the rational benchmark") {
    const auto p = make_problem(0.1, 4, fpquad::integrand_rational1px2());
    const fpquad::ConvergenceReport rep = fpquad::run_convergence(
        p, fpquad::make_ellipse(2.0), range(8, 96, 4), fpquad::reference_rational(0.1, 4));
    CHECK(rep.rate_determined);
    CHECK(rep.fitted_rate > 0.20);
    CHECK(rep.fitted_rate < 0.45);
}

TEST_CASE("too few rows leaves the rate indeterminate") {
    const auto p = make_problem(0.1, 1, fpquad::integrand_exp());
    const fpquad::ConvergenceReport rep =
        fpquad::run_convergence(p, fpquad::make_ellipse(10.0), {8, 12}, fpquad::reference_exp(0.1, 1));
    CHECK(!rep.rate_determined);
    CHECK_THROWS_AS((void)fpquad::run_convergence(p, fpquad::make_ellipse(10.0), {},
                                                  fpquad::reference_exp(0.1, 1)),
                    fpquad::PreconditionError);
}

TEST_CASE("csv output round-trips every double bit for bit") {
    fpquad::ConvergenceReport rep;
    rep.reference = 9.4385815275268217;
    const double values[] = {0.1, 1.0 / 3.0, 9.4385815275268217, 1e-300, 0.0, -2.5e17};
    int N = 4;
    for (double v : values) {
        fpquad::ConvergenceRow row;
        row.N = N;
        row.value = v;
        row.abs_error = v / 7.0;
        row.rel_error = v / 13.0;
        rep.rows.push_back(row);
        N += 4;
    }
    std::ostringstream os;
    fpquad::write_csv(os, rep);
    const std::string text = os.str();
    CHECK(text.find('\r') == std::string::npos);
    CHECK(text.substr(0, text.find('\n')) == "N,value,abs_error,rel_error");

    std::istringstream is(text);
    std::string line;
    std::getline(is, line);  // header
    std::size_t idx = 0;
    while (std::getline(is, line)) {
        std::istringstream fields(line);
        std::string field;
        std::getline(fields, field, ',');
        CHECK(std::atoi(field.c_str()) == rep.rows[idx].N);
        const double want[] = {rep.rows[idx].value, rep.rows[idx].abs_error, rep.rows[idx].rel_error};
        for (double w : want) {
            std::getline(fields, field, ',');
            const double got = std::strtod(field.c_str(), nullptr);
            CHECK(std::memcmp(&got, &w, sizeof got) == 0);
        }
        ++idx;
    }
    CHECK(idx == rep.rows.size());
}

TEST_CASE("convergence runs are deterministic") {
    const auto p = make_problem(0.3, 2, fpquad::integrand_exp());
    const auto Ns = range(4, 32, 4);
    const double ref = fpquad::reference_exp(0.3, 2);
    std::ostringstream a, b;
    fpquad::write_csv(a, fpquad::run_convergence(p, fpquad::make_ellipse(6.0), Ns, ref));
    fpquad::write_csv(b, fpquad::run_convergence(p, fpquad::make_ellipse(6.0), Ns, ref));
    CHECK(a.str() == b.str());
}
