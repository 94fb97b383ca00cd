#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "hblab/quadrature.hpp"

using namespace hblab;
using namespace hblab::quad;

TEST_CASE("adaptive rule on smooth integrands") {
    auto v = integrate_real([](double t) { return std::sin(t); }, 0.0, PI, 1e-12);
    CHECK(std::abs(v - 2.0) < 1e-11);

    auto w = integrate([](double t) { return std::exp(cplx(0.0, t)); }, 0.0, 1.0, 1e-12);
    CHECK(std::abs(w - cplx(std::sin(1.0), 1.0 - std::cos(1.0))) < 1e-11);
}

TEST_CASE("adaptive rule resolves a narrow peak") {
    const double eps = 1e-4;
    auto v = integrate_real([eps](double t) { return eps / (t * t + eps * eps); },
                            -1.0, 1.0, 1e-10);
    CHECK(std::abs(v - 2.0 * std::atan(1.0 / eps)) < 1e-9);
}

TEST_CASE("declared endpoint singularity is integrated by substitution") {
    // int_0^1 t^(-1/2) dt = 2
    auto v = integrate_singular([](double t) { return cplx(1.0 / std::sqrt(t), 0.0); },
                                0.0, 1.0, {{0.0, 0.5}}, 1e-10);
    CHECK(std::abs(v.real() - 2.0) < 1e-9);

    // interior singularity: int_0^2 |t-1|^(-1/3) dt = 3
    auto w = integrate_singular(
        [](double t) { return cplx(std::pow(std::abs(t - 1.0), -1.0 / 3.0), 0.0); },
        0.0, 2.0, {{1.0, 1.0 / 3.0}}, 1e-10);
    CHECK(std::abs(w.real() - 3.0) < 1e-8);
}

TEST_CASE("non-integrable exponent is rejected") {
    CHECK_THROWS_AS(integrate_singular([](double) { return cplx(1.0); }, 0.0, 1.0,
                                       {{0.0, 1.2}}, 1e-8),
                    std::domain_error);
}

TEST_CASE("real line integral with slow tails") {
    // int exp(-t^2) = sqrt(pi)
    auto g = integrate_real_line([](double t) { return std::exp(-t * t); }, 10.0, 1e-10);
    CHECK(std::abs(g - std::sqrt(PI)) < 1e-9);

    // Lorentzian with unit mass, wide scale relative to the core window.
    const double b = 7.0;
    auto l = integrate_real_line(
        [b](double t) { return b / (PI * (t * t + b * b)); }, 100.0 * b, 1e-9);
    CHECK(std::abs(l - 1.0) < 1e-8);
}

TEST_CASE("chart quadrature integrates over the unit disc") {
    ChartDomain disc{
        [](double s, double t) {
            return cplx(s * std::cos(2.0 * PI * t), s * std::sin(2.0 * PI * t));
        },
        [](double s, double) { return 2.0 * PI * s; }};
    ChartQuadSpec spec;
    spec.n1 = 96;
    spec.n2 = 96;
    // area
    auto a = integrate_chart([](cplx) { return cplx(1.0); }, disc, spec);
    CHECK(std::abs(a.real() - PI) < 1e-8);
    // int |z|^2 over D = pi/2
    auto m = integrate_chart([](cplx z) { return cplx(std::norm(z)); }, disc, spec);
    CHECK(std::abs(m.real() - 0.5 * PI) < 1e-6);
}

TEST_CASE("smoothstep5 is a C2 ramp") {
    CHECK(smoothstep5(-1.0) == 0.0);
    CHECK(smoothstep5(2.0) == 1.0);
    CHECK(smoothstep5(0.5) == doctest::Approx(0.5));
    const double h = 1e-6;
    // derivative vanishes at both ends
    CHECK(std::abs(smoothstep5(h) - smoothstep5(0.0)) / h < 1e-5);
    CHECK(std::abs(smoothstep5(1.0) - smoothstep5(1.0 - h)) / h < 1e-5);
}
