#include "hblab/exemplars.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace hblab::exemplars {

void validate(const HarmonicField& field) {
    if (!field.eval)
        throw std::invalid_argument("field '" + field.name + "' has no evaluator");
    if (field.metadata == Metadata::series) {
        if (field.series_terms < 16)
            throw std::invalid_argument("field '" + field.name +
                                        "' declares a series truncated below 16 terms");
        if (!std::isfinite(field.series_tail))
            throw std::invalid_argument("field '" + field.name +
                                        "' declares a non-finite series tail bound");
    }
}

double u0_eval(double r, double phi, U0Mode mode, int terms) {
    if (r < 0.0 || r >= 1.0) throw std::domain_error("u0_eval: need 0 <= r < 1");
    if (mode == U0Mode::closed) {
        double denom = 1.0 - 2.0 * r * std::cos(phi) + r * r;
        return -r * (1.0 - r * r) * std::sin(phi) / (denom * denom);
    }
    if (terms < 16) throw std::invalid_argument("u0_eval: series needs at least 16 terms");
    double sum = 0.0;
    double rn = 1.0;
    for (int n = 1; n <= terms; ++n) {
        rn *= r;
        sum += n * rn * std::sin(n * phi);
    }
    return -sum;
}

double u0_series_tail(int terms, double r) {
    if (r < 0.0 || r >= 1.0) throw std::domain_error("u0_series_tail: need 0 <= r < 1");
    double N = terms;
    return std::pow(r, N + 1.0) * ((N + 1.0) - N * r) / ((1.0 - r) * (1.0 - r));
}

HarmonicField u0_field() {
    HarmonicField f;
    f.name = "u0";
    f.region = geometry::Region::unit_disc();
    f.metadata = Metadata::closed_form;
    f.regularity = Regularity::harmonic;
    f.eval = [](cplx z) { return cplx(u0_eval(std::abs(z), std::arg(z))); };
    return f;
}

HarmonicField u0_series_field(int terms) {
    HarmonicField f;
    f.name = "u0_series";
    f.region = geometry::Region::unit_disc();
    f.metadata = Metadata::series;
    f.regularity = Regularity::harmonic;
    f.series_terms = terms;
    // Declared at the working radius the acceptance grid tops out at.
    f.series_tail = u0_series_tail(terms, 0.99);
    f.eval = [terms](cplx z) {
        return cplx(u0_eval(std::abs(z), std::arg(z), U0Mode::series, terms));
    };
    validate(f);
    return f;
}

cplx catalog_eval(CatalogFunction which, cplx z) {
    switch (which) {
        case CatalogFunction::rational_pole:
            if (z == cplx(2.0, 0.0))
                throw std::domain_error("rational_pole: evaluation at the pole");
            return 1.0 / (z - 2.0);
        case CatalogFunction::boundary_jump:
            if (z.imag() == 0.0)
                throw std::domain_error("boundary_jump: evaluation on the jump line");
            return z.imag() > 0.0 ? cplx(1.0) : cplx(0.0);
        case CatalogFunction::principal_log:
            if (z.imag() == 0.0 && z.real() <= -1.5)
                throw std::domain_error("principal_log: evaluation on the branch cut");
            return std::log(z + 1.5);
        case CatalogFunction::principal_log_cut:
            if (z.imag() == 0.0 && z.real() <= 0.5)
                throw std::domain_error("principal_log_cut: evaluation on the branch cut");
            return std::log(z - 0.5);
    }
    throw std::invalid_argument("catalog_eval: unknown function");
}

HarmonicField synthetic_growth(double m) {
    HarmonicField f;
    f.name = "growth:" + std::to_string(m);
    f.region = geometry::Region::unit_disc();
    f.metadata = Metadata::closed_form;
    f.regularity = Regularity::subharmonic_nonneg;
    f.eval = [m](cplx z) { return cplx(std::pow(1.0 - std::abs(z), -m)); };
    return f;
}

namespace {

HarmonicField constant_field(const std::string& name, double c, geometry::Region region) {
    HarmonicField f;
    f.name = name;
    f.region = region;
    f.metadata = Metadata::closed_form;
    f.regularity = Regularity::subharmonic_nonneg;
    f.eval = [c](cplx) { return cplx(c); };
    return f;
}

HarmonicField catalog_field(const std::string& name, CatalogFunction which) {
    HarmonicField f;
    f.name = name;
    f.region = geometry::Region::rectangle(-1.0, 1.0, -1.0, 1.0);
    f.metadata = Metadata::closed_form;
    f.regularity = Regularity::analytic_off_reals;
    f.eval = [which](cplx z) { return catalog_eval(which, z); };
    return f;
}

}  // namespace

const std::vector<std::string>& field_names() {
    static const std::vector<std::string> names = {
        "u0",
        "u0_series",
        "abs_u0",
        "zero",
        "one",
        "one_rect",
        "height",
        "re_inv",
        "abs_re_inv",
        "inv_im",
        "re_invsqrt",
        "catalog:rational_pole",
        "catalog:boundary_jump",
        "catalog:principal_log",
        "catalog:principal_log_cut",
        "growth:<m>",
    };
    return names;
}

HarmonicField make_field(const std::string& name) {
    if (name == "u0") return u0_field();
    if (name == "u0_series") return u0_series_field(200);
    if (name == "abs_u0") {
        HarmonicField f = u0_field();
        f.name = "abs_u0";
        f.metadata = Metadata::composite;
        f.regularity = Regularity::subharmonic_nonneg;
        f.eval = [](cplx z) { return cplx(std::abs(u0_eval(std::abs(z), std::arg(z)))); };
        return f;
    }
    if (name == "zero") return constant_field("zero", 0.0, geometry::Region::unit_disc());
    if (name == "one") return constant_field("one", 1.0, geometry::Region::unit_disc());
    if (name == "one_rect")
        return constant_field("one_rect", 1.0, geometry::Region::rectangle(-1, 1, 0, 1));
    if (name == "height") {
        HarmonicField f;
        f.name = "height";
        f.region = geometry::Region::rectangle(-1, 1, 0, 1);
        f.metadata = Metadata::closed_form;
        f.regularity = Regularity::subharmonic_nonneg;
        f.eval = [](cplx z) { return cplx(z.imag()); };
        return f;
    }
    if (name == "re_inv") {
        HarmonicField f;
        f.name = "re_inv";
        f.region = geometry::Region::punctured_disc(1.0);
        f.metadata = Metadata::closed_form;
        f.regularity = Regularity::harmonic;
        f.eval = [](cplx z) { return cplx((1.0 / z).real()); };
        return f;
    }
    if (name == "abs_re_inv") {
        HarmonicField f;
        f.name = "abs_re_inv";
        f.region = geometry::Region::punctured_disc(1.0);
        f.metadata = Metadata::composite;
        f.regularity = Regularity::subharmonic_nonneg;
        f.eval = [](cplx z) { return cplx(std::abs((1.0 / z).real())); };
        return f;
    }
    if (name == "inv_im") {
        // Reflection-symmetric 1/|Im z|: claims subharmonicity but is not
        // subharmonic across the axis, the Domar check's negative control.
        HarmonicField f;
        f.name = "inv_im";
        f.region = geometry::Region::punctured_disc(1.0);
        f.metadata = Metadata::composite;
        f.regularity = Regularity::subharmonic_nonneg;
        f.eval = [](cplx z) {
            double y = std::abs(z.imag());
            if (y == 0.0) return cplx(std::numeric_limits<double>::infinity());
            return cplx(1.0 / y);
        };
        return f;
    }
    if (name == "re_invsqrt") {
        HarmonicField f;
        f.name = "re_invsqrt";
        f.region = geometry::Region::finite_sector(PI / 2, 1.0);
        f.metadata = Metadata::closed_form;
        f.regularity = Regularity::harmonic;
        f.eval = [](cplx z) {
            if (z == cplx(0.0)) throw std::domain_error("re_invsqrt: pole at 0");
            return cplx(std::exp(-0.5 * std::log(z)).real());
        };
        return f;
    }
    if (name == "catalog:rational_pole")
        return catalog_field(name, CatalogFunction::rational_pole);
    if (name == "catalog:boundary_jump")
        return catalog_field(name, CatalogFunction::boundary_jump);
    if (name == "catalog:principal_log")
        return catalog_field(name, CatalogFunction::principal_log);
    if (name == "catalog:principal_log_cut")
        return catalog_field(name, CatalogFunction::principal_log_cut);
    if (name.rfind("growth:", 0) == 0) {
        double m = 0.0;
        try {
            m = std::stod(name.substr(7));
        } catch (const std::exception&) {
            throw std::invalid_argument("make_field: bad growth exponent in '" + name + "'");
        }
        HarmonicField f = synthetic_growth(m);
        f.name = name;
        return f;
    }
    throw std::invalid_argument("make_field: unknown field '" + name + "'");
}

}  // namespace hblab::exemplars
