#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "hblab/potential.hpp"

using namespace hblab;
using namespace hblab::potential;

TEST_CASE("disc kernel spot values and domain checks") {
    CHECK(poisson_kernel_disc(0.5, PI / 2) == doctest::Approx(0.3));
    CHECK(poisson_kernel_disc(0.5, PI / 2, DiscKernelForm::standard) ==
          doctest::Approx(0.6));
    CHECK(poisson_kernel_disc(0.0, 1.234) == doctest::Approx(0.5));
    CHECK_THROWS_AS(poisson_kernel_disc(1.0, 0.3), std::domain_error);
    CHECK_THROWS_AS(poisson_kernel_disc(-0.1, 0.3), std::domain_error);
}

TEST_CASE("half-plane kernel has unit mass") {
    CHECK(halfplane_kernel_mass(1.0) == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(halfplane_kernel_mass(0.07) == doctest::Approx(1.0).epsilon(1e-8));
    CHECK_THROWS_AS(poisson_kernel_halfplane(cplx(0.3, 0.0)), std::domain_error);
}

TEST_CASE("disc integral reproduces harmonic extensions") {
    BoundaryFunction one;
    one.eval = [](double) { return cplx(1.0); };
    CHECK(poisson_integral_disc(one, cplx(0.0)).real() ==
          doctest::Approx(1.0).epsilon(1e-9));
    CHECK(poisson_integral_disc(one, cplx(0.7, -0.5)).real() ==
          doctest::Approx(1.0).epsilon(1e-9));

    BoundaryFunction cosine;
    cosine.eval = [](double phi) { return cplx(std::cos(phi)); };
    cplx z(0.62, -0.31);
    CHECK(poisson_integral_disc(cosine, z).real() ==
          doctest::Approx(z.real()).epsilon(1e-9));
    cplx w(-0.88, 0.3);
    CHECK(poisson_integral_disc(cosine, w).real() ==
          doctest::Approx(w.real()).epsilon(1e-9));
    CHECK_THROWS_AS(poisson_integral_disc(cosine, cplx(1.2, 0.0)), std::domain_error);
}

TEST_CASE("disc integral handles declared boundary blow-up") {
    // log|1 - e^{i phi}| extends harmonically to log|1 - z|.
    BoundaryFunction data;
    data.eval = [](double phi) {
        return cplx(std::log(std::abs(1.0 - std::polar(1.0, phi))));
    };
    data.singularities = {{0.0, 0.3}};
    for (cplx z : {cplx(0.3, 0.4), cplx(-0.5, 0.1), cplx(0.85, 0.02)}) {
        double expect = std::log(std::abs(1.0 - z));
        CHECK(poisson_integral_disc(data, z).real() ==
              doctest::Approx(expect).epsilon(1e-8));
    }
}

TEST_CASE("quadrant extension matches a closed form through the corner") {
    // Edge data 0 on the real axis and 1/t on the imaginary axis extend to
    // Im(z)/|z|^2, which blows up at the corner like |z|^-1.
    QuadrantBoundary data;
    data.real_edge = [](double) { return cplx(0.0); };
    data.imag_edge = [](double t) { return cplx(1.0 / t); };
    data.corner_exponent = 1.0;

    for (cplx z : {cplx(0.5, 0.5), cplx(2.0, 0.7), cplx(0.15, 0.4)}) {
        double expect = z.imag() / std::norm(z);
        CHECK(poisson_integral_quadrant(data, z).real() ==
              doctest::Approx(expect).epsilon(1e-7));
    }
    CHECK_THROWS_AS(poisson_integral_quadrant(data, cplx(-1.0, 1.0)),
                    std::domain_error);
}

TEST_CASE("quadrant extension with smooth decaying data") {
    // Oracle through the half-plane picture: u(z) = U(z^2) with U the
    // half-plane Poisson integral of the folded edge data.
    QuadrantBoundary data;
    data.real_edge = [](double t) { return cplx(1.0 / (1.0 + t * t * t * t)); };
    data.imag_edge = [](double t) { return cplx(1.0 / (2.0 + t * t * t * t)); };

    cplx z(0.8 * std::cos(PI / 5), 0.8 * std::sin(PI / 5));
    cplx w = z * z;
    auto integrand = [&](double x) {
        double g = x >= 0.0 ? 1.0 / (1.0 + x * x) : 1.0 / (2.0 + x * x);
        return poisson_kernel_halfplane(cplx(w.real() - x, w.imag())) * g;
    };
    double oracle = quad::integrate_real_line(integrand, 60.0, 1e-10);
    CHECK(poisson_integral_quadrant(data, z).real() ==
          doctest::Approx(oracle).epsilon(1e-7));
}

TEST_CASE("rectangle solver matches separable solutions") {
    auto rect = geometry::Region::rectangle(0.0, 1.0, 0.0, 1.0);

    SideData bottom;
    bottom.eval = [](double s) { return std::sin(PI * s); };
    RectangleDirichlet solver(rect, Side::bottom, bottom, 32);
    CHECK(solver.coefficient(1) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(solver.coefficient(2) == doctest::Approx(0.0).epsilon(1e-10));

    auto expect_bottom = [](double x, double y) {
        return std::sin(PI * x) * std::sinh(PI * (1.0 - y)) / std::sinh(PI);
    };
    CHECK(solver.eval(cplx(0.5, 0.5)) ==
          doctest::Approx(expect_bottom(0.5, 0.5)).epsilon(1e-10));
    CHECK(solver.eval(cplx(0.21, 0.83)) ==
          doctest::Approx(expect_bottom(0.21, 0.83)).epsilon(1e-10));
    CHECK(solver.eval(cplx(0.5, 0.0)) == doctest::Approx(1.0).epsilon(1e-10));

    SideData left;
    left.eval = [](double s) { return std::sin(PI * s); };
    RectangleDirichlet lsolver(rect, Side::left, left, 32);
    CHECK(lsolver.eval(cplx(0.3, 0.6)) ==
          doctest::Approx(std::sin(0.6 * PI) * std::sinh(0.7 * PI) / std::sinh(PI))
              .epsilon(1e-10));

    SideData top;
    top.eval = [](double s) { return std::sin(PI * s); };
    RectangleDirichlet tsolver(rect, Side::top, top, 32);
    CHECK(tsolver.eval(cplx(0.25, 0.8)) ==
          doctest::Approx(std::sin(0.25 * PI) * std::sinh(0.8 * PI) / std::sinh(PI))
              .epsilon(1e-10));
}

TEST_CASE("four constant sides sum to one inside the square") {
    auto rect = geometry::Region::rectangle(0.0, 1.0, 0.0, 1.0);
    SideData one;
    one.eval = [](double) { return 1.0; };
    std::array<SideData, 4> sides = {one, one, one, one};
    CHECK(dirichlet_rectangle(rect, sides, cplx(0.5, 0.5), 64) ==
          doctest::Approx(1.0).epsilon(1e-8));
    CHECK(dirichlet_rectangle(rect, sides, cplx(0.3, 0.7), 64) ==
          doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("rectangle solver reports unresolvable tails") {
    auto rect = geometry::Region::rectangle(0.0, 1.0, 0.0, 1.0);
    SideData bottom;
    bottom.eval = [](double s) { return s < 0.5 ? 1.0 : 0.0; };
    bottom.singularities = {{0.5, 0.0}};
    RectangleDirichlet solver(rect, Side::bottom, bottom, 8);
    CHECK_THROWS_AS(solver.eval(cplx(0.4, 0.005), 1e-8), TruncationError);
    CHECK_NOTHROW(solver.eval(cplx(0.4, 0.9), 1e-8));
    CHECK_THROWS_AS(solver.eval(cplx(1.4, 0.5)), std::domain_error);
}

TEST_CASE("area transform of a constant is conj(z)/2") {
    auto dom = disc_chart(1.0);
    auto one = [](cplx) { return cplx(1.0); };
    for (cplx z : {cplx(0.3, 0.2), cplx(-0.45, 0.1), cplx(0.0, 0.0)}) {
        cplx got = cauchy_area_transform(one, dom, z);
        CHECK(got.real() == doctest::Approx(0.5 * z.real()).epsilon(5e-5));
        CHECK(got.imag() == doctest::Approx(-0.5 * z.imag()).epsilon(5e-5));
    }
}

TEST_CASE("area transform inverts dbar with factor one half") {
    auto dom = disc_chart(1.0);
    auto F = [](cplx zeta) {
        return std::exp(-std::norm(zeta)) * (zeta + cplx(0.2, -0.1));
    };
    AreaQuadSpec spec;
    spec.n1 = 96;
    spec.n2 = 96;

    cplx z0(0.25, -0.15);
    double h = 5e-3;
    auto T = [&](cplx z) { return cauchy_area_transform(F, dom, z, spec); };
    cplx dx = (T(z0 + h) - T(z0 - h)) / (2.0 * h);
    cplx dy = (T(z0 + cplx(0.0, h)) - T(z0 - cplx(0.0, h))) / (2.0 * h);
    cplx dbar = 0.5 * (dx + cplx(0.0, 1.0) * dy);
    cplx expect = 0.5 * F(z0);
    CHECK(std::abs(dbar - expect) < 5e-3 * std::abs(expect));
}

TEST_CASE("singularity expansion recovers planted coefficients") {
    SUBCASE("pure logarithm") {
        auto u = [](cplx z) { return std::log(std::abs(z)); };
        auto c = singularity_expansion(u, 0.4, 0.9, 2);
        CHECK(c.log_coefficient == doctest::Approx(1.0).epsilon(1e-10));
        CHECK(c.constant_term == doctest::Approx(0.0).epsilon(1e-10));
        CHECK(std::abs(c.a_neg[0]) < 1e-10);
        CHECK(std::abs(c.b_neg[1]) < 1e-10);
        CHECK(c.remainder_sup < 1e-10);
    }

    SUBCASE("simple pole real part") {
        auto u = [](cplx z) { return (1.0 / z).real(); };
        auto c = singularity_expansion(u, 0.4, 0.9, 1);
        CHECK(c.a_neg[0] == doctest::Approx(1.0).epsilon(1e-10));
        CHECK(std::abs(c.b_neg[0]) < 1e-10);
        CHECK(std::abs(c.log_coefficient) < 1e-10);
    }

    SUBCASE("order three mix with a bounded tail") {
        // Signed-index data: a_{-1} = 2, b_{-1} = 0.7, a_{-3} = -0.4,
        // plus 0.3 + 0.5 Re(z^2) as the bounded part.
        auto u = [](cplx z) {
            double r = std::abs(z), phi = std::arg(z);
            double val = -1.5 * std::log(r);
            val += (2.0 * std::cos(phi) - 0.7 * std::sin(phi)) / r;
            val += -0.4 * std::cos(3.0 * phi) / (r * r * r);
            val += 0.3 + 0.5 * (z * z).real();
            return val;
        };
        auto c = singularity_expansion(u, 0.5, 0.9, 3);
        CHECK(c.log_coefficient == doctest::Approx(-1.5).epsilon(1e-9));
        CHECK(c.constant_term == doctest::Approx(0.3).epsilon(1e-9));
        CHECK(c.a_neg[0] == doctest::Approx(2.0).epsilon(1e-9));
        CHECK(c.b_neg[0] == doctest::Approx(0.7).epsilon(1e-9));
        CHECK(c.a_neg[2] == doctest::Approx(-0.4).epsilon(1e-9));
        CHECK(std::abs(c.b_neg[2]) < 1e-9);
        // Remainder is the bounded part on the inner circle.
        CHECK(c.remainder_sup ==
              doctest::Approx(0.3 + 0.5 * 0.25).epsilon(1e-6));
    }
}

TEST_CASE("singularity expansion rejects bad sampling setups") {
    auto u = [](cplx z) { return std::log(std::abs(z)); };
    CHECK_THROWS_AS(singularity_expansion(u, 0.9, 0.91, 1), std::invalid_argument);
    CHECK_THROWS_AS(singularity_expansion(u, 0.9, 0.4, 1), std::invalid_argument);
    ExpansionOpts opts;
    opts.n_angles = 16;
    CHECK_THROWS_AS(singularity_expansion(u, 0.4, 0.9, 5, opts), std::invalid_argument);
}
