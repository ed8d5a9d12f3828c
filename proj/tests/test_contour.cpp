#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "doctest.h"

#include "fpquad/contour.hpp"
#include "fpquad/errors.hpp"

using fpquad::Cplx;

TEST_CASE("ellipse geometry: semi-axes, center, period") {
    const fpquad::Contour c = fpquad::make_ellipse(10.0);
    CHECK(c.period == doctest::Approx(2.0 * std::numbers::pi));
    CHECK(c.symmetric);
    const Cplx right = c.phi(Cplx(0.0, 0.0));
    const Cplx top = c.phi(Cplx(std::numbers::pi / 2.0, 0.0));
    CHECK(right.real() - 0.5 == doctest::Approx(2.525).epsilon(1e-12));
    CHECK(right.imag() == doctest::Approx(0.0));
    CHECK(top.real() == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(top.imag() == doctest::Approx(2.475).epsilon(1e-12));

    const fpquad::Contour c2 = fpquad::make_ellipse(2.0);
    CHECK(c2.phi(Cplx(0.0, 0.0)).real() - 0.5 == doctest::Approx(0.625).epsilon(1e-12));
    CHECK(c2.phi(Cplx(std::numbers::pi / 2.0, 0.0)).imag() == doctest::Approx(0.375).epsilon(1e-12));
}

TEST_CASE("degenerate ellipse parameters are rejected") {
    CHECK_THROWS_AS((void)fpquad::make_ellipse(1.0), fpquad::PreconditionError);
    CHECK_THROWS_AS((void)fpquad::make_ellipse(0.5), fpquad::PreconditionError);
    CHECK_THROWS_AS((void)fpquad::make_ellipse(-2.0), fpquad::PreconditionError);
}

TEST_CASE("parameter reflection mirrors the contour across the real axis") {
    for (double rho : {1.2, 3.0, 10.0}) {
        const fpquad::Contour c = fpquad::make_ellipse(rho);
        for (int j = 0; j < 64; ++j) {
            const double u = c.period * j / 64.0;
            const Cplx a = c.phi(Cplx(c.period - u, 0.0));
            const Cplx b = std::conj(c.phi(Cplx(u, 0.0)));
            CHECK(std::abs(a - b) <= 1e-13);
        }
    }
}

TEST_CASE("dphi matches a central difference") {
    const double h = 1e-5;
    for (double rho : {2.0, 10.0}) {
        const fpquad::Contour c = fpquad::make_ellipse(rho);
        for (int j = 0; j < 16; ++j) {
            const double u = c.period * j / 16.0;
            const Cplx fd = (c.phi(Cplx(u + h, 0.0)) - c.phi(Cplx(u - h, 0.0))) / (2.0 * h);
            CHECK(std::abs(c.dphi(Cplx(u, 0.0)) - fd) <= 1e-8);
        }
    }
}

TEST_CASE("winding number of the center is 1 across the rho range") {
    for (double rho : {1.051, 1.06, 1.1, 1.3, 2.0, 3.0, 5.0, 10.0}) {
        const fpquad::Contour c = fpquad::make_ellipse(rho);
        const fpquad::ValidationReport rep = fpquad::validate_contour(c, {});
        CHECK(rep.pass);
        CHECK(std::abs(rep.winding_center - 1.0) <= 1e-10);
        CHECK(rep.closure_residual <= 1e-12);
        CHECK(rep.min_distance_to_interval > 1e-6);
    }
}

TEST_CASE("winding number at 256 samples is already clean away from rho = 1") {
    for (double rho : {1.15, 1.5, 3.0, 10.0}) {
        const fpquad::Contour c = fpquad::make_ellipse(rho);
        CHECK(std::abs(fpquad::winding_number(c, Cplx(0.5, 0.0), 256) - 1.0) <= 1e-10);
    }
}

TEST_CASE("a nearly degenerate ellipse fails validation") {
    // rho = 1.01 hugs [0,1]: the sampled winding number cannot resolve it
    const fpquad::Contour c = fpquad::make_ellipse(1.01);
    const fpquad::ValidationReport rep = fpquad::validate_contour(c, {});
    CHECK(!rep.pass);
    CHECK(std::abs(rep.winding_center - 1.0) > 1e-10);
}

TEST_CASE("an enclosed integrand singularity fails validation") {
    const fpquad::Contour c = fpquad::make_ellipse(10.0);
    const std::vector<Cplx> poles{{0.0, 1.0}, {0.0, -1.0}};
    const fpquad::ValidationReport rep = fpquad::validate_contour(c, poles);
    CHECK(!rep.pass);
    REQUIRE(rep.singularity_windings.size() == 2);
    CHECK(rep.singularity_windings[0] == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(!rep.failures.empty());
}

TEST_CASE("the same singularities outside a smaller ellipse pass") {
    const fpquad::Contour c = fpquad::make_ellipse(2.0);
    const std::vector<Cplx> poles{{0.0, 1.0}, {0.0, -1.0}};
    const fpquad::ValidationReport rep = fpquad::validate_contour(c, poles);
    CHECK(rep.pass);
    CHECK(std::abs(rep.singularity_windings[0]) <= 1e-10);
}
