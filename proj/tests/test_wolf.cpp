#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <complex>

#include "doctest.h"
#include "hblab/wolf.hpp"

using namespace hblab;
using hblab::cplx;
using doctest::Approx;

namespace {

const wolf::WolfField& default_field() {
    static const wolf::WolfField W = [] {
        wolf::WolfParams p;
        p.K = wolf::wolf_choose_K(p);
        return wolf::wolf_assemble(p);
    }();
    return W;
}

const wolf::WolfField& tuned_field() {
    static const wolf::WolfField W = [] {
        wolf::WolfParams p;
        p.epsilon = 1.0;
        p.A = 4;
        p.K = wolf::wolf_choose_K(p);
        return wolf::wolf_assemble(p);
    }();
    return W;
}

}  // namespace

TEST_CASE("ray shift matches the closed form") {
    wolf::WolfParams p;
    CHECK(wolf::wolf_choose_K(p) ==
          Approx(-p.epsilon / std::tan(p.theta)).epsilon(1e-12));

    p.theta = 0.35 * PI;
    p.epsilon = 0.2;
    CHECK(wolf::wolf_choose_K(p) ==
          Approx(-p.epsilon / std::tan(p.theta)).epsilon(1e-12));
}

TEST_CASE("ray shift survives a nearly vanishing epsilon") {
    wolf::WolfParams p;
    p.epsilon = 1e-8;
    double K = wolf::wolf_choose_K(p);
    CHECK(std::isfinite(K));
    CHECK(K == Approx(-1e-8 / std::tan(0.3 * PI)).epsilon(1e-10));
}

TEST_CASE("parameter validation") {
    wolf::WolfParams p;
    p.A = 5;
    CHECK_THROWS_AS(wolf::validate(p), std::invalid_argument);
    p.A = 2;
    CHECK_THROWS_AS(wolf::validate(p), std::invalid_argument);

    p = {};
    p.beta = p.theta / 3.0;
    CHECK_THROWS_AS(wolf::validate(p), std::invalid_argument);

    p = {};
    p.theta = 1.6;
    CHECK_THROWS_AS(wolf::validate(p), std::invalid_argument);

    p = {};
    p.epsilon = 0.0;
    CHECK_THROWS_AS(wolf::validate(p), std::invalid_argument);

    // Assembling without choosing K first must fail loudly.
    p = {};
    CHECK_THROWS_AS(wolf::wolf_assemble(p), std::invalid_argument);
}

TEST_CASE("h vanishes off the wedge") {
    const auto& W = default_field();
    for (cplx z : {cplx(0.0, 0.0), cplx(-0.5, 0.3), cplx(0.0, 0.9),
                   cplx(0.52, 0.81)}) {
        CHECK(W.h(z) == cplx(0.0));
    }
}

TEST_CASE("h is real on the plateau arc") {
    const auto& W = default_field();
    REQUIRE(W.plateau_im_h.size() == 64);
    for (double im : W.plateau_im_h) CHECK(std::fabs(im) <= 1e-12);
}

TEST_CASE("w vanishes on the off-band boundary grid") {
    const auto& W = default_field();
    REQUIRE(W.boundary_w.size() >= 30);
    for (double x : W.boundary_w) CHECK(std::fabs(x) <= 1e-4);
}

TEST_CASE("the correction cancels dbar h inside the band") {
    const auto& W = default_field();
    REQUIRE(W.dbar_residual.size() == 2);
    for (size_t i = 0; i < W.dbar_residual.size(); ++i) {
        CHECK(W.dbar_h_probe[i] > 0.1);  // probes sit where the defect is real
        CHECK(W.dbar_residual[i] <= 1e-2 * W.dbar_h_probe[i]);
    }
}

TEST_CASE("H stays analytic away from the band") {
    const auto& W = default_field();
    cplx z(0.3, 0.2);
    double fd = 1e-4;
    auto H = [&](cplx zz) { return W.H(zz); };
    cplx dx = (H(z + fd) - H(z - fd)) / (2.0 * fd);
    cplx dy = (H(z + cplx(0.0, fd)) - H(z - cplx(0.0, fd))) / (2.0 * fd);
    CHECK(std::abs(0.5 * (dx + cplx(0.0, 1.0) * dy)) <= 5e-3);
}

TEST_CASE("w is v plus Im H") {
    const auto& W = default_field();
    for (cplx z : {cplx(0.3, 0.2), cplx(-0.5, -0.4), cplx(0.7, -0.55)}) {
        double direct = W.v(z) + (W.h(z) - W.h1(z)).imag();
        CHECK(W.w(z) == direct);
        CHECK(std::fabs(W.w(z)) <= 1e-4);  // far from the wedge w is tiny
    }
}

TEST_CASE("w decays into the corner along Stolz rays") {
    const auto& W = default_field();
    for (double ang : {0.0, 0.5}) {
        double prev = 1e300;
        for (double s : {0.2, 0.1, 0.05, 0.02, 0.01}) {
            double val = std::fabs(W.w(1.0 - s * std::polar(1.0, ang)));
            CHECK(val < prev);
            prev = val;
        }
        CHECK(prev <= 5e-8);
    }
}

TEST_CASE("default parameters cannot resolve the growth exponent") {
    const auto& W = default_field();
    CHECK(W.growth_regime_warning);
}

TEST_CASE("the tuned field shows the exponential growth regime") {
    const auto& W = tuned_field();
    CHECK_FALSE(W.growth_regime_warning);

    double prev = -1e300;
    for (auto& [r, s] : W.growth_samples) {
        CHECK(s > prev);
        prev = s;
    }
    CHECK(prev > 400.0);  // |w| near e^403 at r = 0.98, far past double overflow territory

    for (double x : W.boundary_w) CHECK(std::fabs(x) <= 1e-4);
}

TEST_CASE("log |w| stays finite where w itself overflows") {
    const auto& W = tuned_field();
    double lw = W.log_abs_w(std::polar(0.995, 2.0 * PI - 0.005));
    CHECK(std::isfinite(lw));
    CHECK(lw > 500.0);

    // Below the overflow threshold the two evaluations agree by definition.
    cplx z = std::polar(0.9, 2.0 * PI - 0.3);
    CHECK(W.log_abs_w(z) == std::log(std::fabs(W.w(z))));
}

TEST_CASE("field adapters") {
    const auto& W = default_field();
    auto u = W.as_field();
    CHECK(u.name == "wolf");
    CHECK(u.region.kind == geometry::Region::Kind::unit_disc);
    cplx z(0.2, -0.3);
    CHECK(u.real_value(z) == W.w(z));

    auto lg = tuned_field().as_log_field();
    CHECK(lg.name == "wolf_log");
    CHECK(lg.real_value(z) == tuned_field().log_abs_w(z));
}
