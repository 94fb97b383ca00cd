#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "hblab/exemplars.hpp"

using namespace hblab;
using namespace hblab::exemplars;

TEST_CASE("u0 spot values") {
    CHECK(u0_eval(0.5, PI / 2) == doctest::Approx(-0.24).epsilon(1e-14));
    CHECK(u0_eval(0.5, PI / 2, U0Mode::series, 40) ==
          doctest::Approx(-0.24).epsilon(1e-9));
    CHECK(u0_eval(0.77, 0.0) == 0.0);
    CHECK(u0_eval(0.3, 0.0, U0Mode::series, 64) == 0.0);
    CHECK(u0_eval(0.4, PI) == doctest::Approx(0.0));
    CHECK_THROWS_AS(u0_eval(1.0, 0.3), std::domain_error);
    CHECK_THROWS_AS(u0_eval(-0.2, 0.3), std::domain_error);
    CHECK_THROWS_AS(u0_eval(0.5, 0.3, U0Mode::series, 8), std::invalid_argument);
}

TEST_CASE("u0 closed form agrees with the truncated series") {
    // The N=200 tail bound stays below 1e-10 only through r ~ 0.85; the
    // acceptance suite probes the larger radii separately.
    for (double r : {0.1, 0.3, 0.5, 0.7, 0.85}) {
        double tail = u0_series_tail(200, r);
        CHECK(tail < 1e-10);
        for (int j = 0; j < 256; ++j) {
            double phi = 2.0 * PI * j / 256;
            double closed = u0_eval(r, phi);
            double series = u0_eval(r, phi, U0Mode::series, 200);
            REQUIRE(std::abs(closed - series) <= 1e-10);
        }
    }
}

TEST_CASE("u0 oddness in the angle") {
    for (double r : {0.2, 0.6, 0.9}) {
        for (double phi : {0.3, 1.1, 2.9}) {
            CHECK(u0_eval(r, -phi) == doctest::Approx(-u0_eval(r, phi)).epsilon(1e-14));
        }
    }
}

TEST_CASE("u0 passes a discrete-Laplacian harmonicity check") {
    // The two directional second differences must cancel; the comparison
    // scale is their own magnitude, which is what the cancellation is
    // measured against.
    auto field = u0_field();
    double h = 1e-3;
    for (cplx z : {cplx(0.1, 0.2), cplx(-0.4, 0.5), cplx(0.7, -0.1), cplx(0.0, -0.6),
                   cplx(0.55, 0.55)}) {
        double c = field.real_value(z);
        double dxx =
            (field.real_value(z + h) - 2.0 * c + field.real_value(z - h)) / (h * h);
        double dyy = (field.real_value(z + cplx(0, h)) - 2.0 * c +
                      field.real_value(z - cplx(0, h))) /
                     (h * h);
        double scale = 1.0 + std::abs(dxx) + std::abs(dyy);
        CHECK(std::abs(dxx + dyy) <= 1e-4 * scale);
    }
}

TEST_CASE("series field declares its truncation") {
    auto f = u0_series_field(200);
    CHECK(f.metadata == Metadata::series);
    CHECK(f.series_terms == 200);
    CHECK(std::isfinite(f.series_tail));
    CHECK(f.series_tail > 1.0);  // the N=200 tail at r=0.99 is genuinely large
    CHECK_THROWS_AS(u0_series_field(8), std::invalid_argument);

    HarmonicField bad;
    bad.name = "bad";
    bad.metadata = Metadata::series;
    bad.series_terms = 32;
    bad.series_tail = std::numeric_limits<double>::infinity();
    bad.eval = [](cplx) { return cplx(0.0); };
    CHECK_THROWS_AS(validate(bad), std::invalid_argument);
}

TEST_CASE("catalog functions") {
    CHECK(catalog_eval(CatalogFunction::rational_pole, cplx(0.0)).real() ==
          doctest::Approx(-0.5));
    CHECK(catalog_eval(CatalogFunction::boundary_jump, cplx(0.0, 0.1)).real() ==
          doctest::Approx(1.0));
    CHECK(catalog_eval(CatalogFunction::boundary_jump, cplx(0.0, -0.1)).real() ==
          doctest::Approx(0.0));
    CHECK_THROWS_AS(catalog_eval(CatalogFunction::boundary_jump, cplx(0.3, 0.0)),
                    std::domain_error);

    // Cut outside the square: real evaluations inside are fine.
    CHECK(catalog_eval(CatalogFunction::principal_log, cplx(0.0)).real() ==
          doctest::Approx(std::log(1.5)));
    CHECK_NOTHROW(catalog_eval(CatalogFunction::principal_log, cplx(-0.9, 0.0)));

    // Cut through the square: throws left of 0.5 on the axis, fine right of it.
    CHECK(catalog_eval(CatalogFunction::principal_log_cut, cplx(0.7, 0.0)).real() ==
          doctest::Approx(std::log(0.2)));
    CHECK_THROWS_AS(catalog_eval(CatalogFunction::principal_log_cut, cplx(0.3, 0.0)),
                    std::domain_error);

    // Schwarz reflection symmetry off the cut.
    cplx z(0.2, 0.35);
    cplx up = catalog_eval(CatalogFunction::principal_log_cut, z);
    cplx dn = catalog_eval(CatalogFunction::principal_log_cut, std::conj(z));
    CHECK(up.real() == doctest::Approx(dn.real()).epsilon(1e-14));
    CHECK(up.imag() == doctest::Approx(-dn.imag()).epsilon(1e-14));

    // The jump across the interior cut is the full branch discontinuity.
    cplx above = catalog_eval(CatalogFunction::principal_log_cut, cplx(0.0, 1e-9));
    cplx below = catalog_eval(CatalogFunction::principal_log_cut, cplx(0.0, -1e-9));
    CHECK(std::abs(above - below) == doctest::Approx(2.0 * PI).epsilon(1e-6));
}

TEST_CASE("field registry resolves every advertised name") {
    for (const auto& name : field_names()) {
        if (name == "growth:<m>") continue;  // placeholder row in the listing
        auto f = make_field(name);
        CHECK(f.name == name);
        CHECK(bool(f.eval));
    }
    CHECK_THROWS_AS(make_field("u9"), std::invalid_argument);
    CHECK_THROWS_AS(make_field("growth:abc"), std::invalid_argument);
}

TEST_CASE("registry field behaviour spot checks") {
    auto growth = make_field("growth:2");
    CHECK(growth.real_value(cplx(0.9, 0.0)) == doctest::Approx(100.0));

    auto re_inv = make_field("re_inv");
    CHECK(re_inv.real_value(cplx(0.5, 0.0)) == doctest::Approx(2.0));
    CHECK(re_inv.regularity == Regularity::harmonic);

    auto abs_re_inv = make_field("abs_re_inv");
    CHECK(abs_re_inv.real_value(cplx(-0.5, 0.0)) == doctest::Approx(2.0));
    CHECK(abs_re_inv.regularity == Regularity::subharmonic_nonneg);

    auto invsqrt = make_field("re_invsqrt");
    CHECK(invsqrt.real_value(cplx(0.25, 0.0)) == doctest::Approx(2.0));
    CHECK(invsqrt.region.kind == geometry::Region::Kind::finite_sector);

    auto u0s = make_field("u0_series");
    CHECK(u0s.real_value(cplx(0.0, 0.5)) ==
          doctest::Approx(u0_eval(0.5, PI / 2)).epsilon(1e-9));

    auto inv_im = make_field("inv_im");
    CHECK(inv_im.real_value(cplx(0.3, 0.5)) == doctest::Approx(2.0));
    CHECK(!std::isfinite(inv_im.real_value(cplx(0.3, 0.0))));
}
