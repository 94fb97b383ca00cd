#include "hblab/audits.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "hblab/geometry.hpp"

namespace hblab::audits {

namespace {

using boundary::Approach;
using boundary::GrowthFit;
using boundary::GrowthFitOpts;
using boundary::LimitEstimate;
using boundary::LimitOpts;
using boundary::Profile;
using exemplars::HarmonicField;
using exemplars::Regularity;

std::vector<double> dyadic_radii(int k_lo, int k_hi) {
    std::vector<double> s;
    for (int k = k_lo; k <= k_hi; ++k) s.push_back(1.0 - std::pow(2.0, -k));
    return s;
}

AuditConfig filled(AuditConfig cfg, bool rectangle_shape) {
    if (cfg.limit_schedule.empty()) cfg.limit_schedule = dyadic_radii(3, 20);
    if (cfg.growth_schedule.empty()) {
        if (rectangle_shape) {
            cfg.growth_schedule = {0.2, 0.1, 0.05, 0.025, 0.0125, 0.00625};
        } else {
            cfg.growth_schedule = {0.9, 0.95, 0.975, 0.99, 0.995, 0.9975, 0.999};
        }
    }
    return cfg;
}

double fit_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
    size_t n = xs.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (size_t i = 0; i < n; ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

HarmonicField abs_field(const HarmonicField& src) {
    HarmonicField a = src;
    a.eval = [e = src.eval](cplx z) { return cplx(std::abs(e(z))); };
    return a;
}

std::string point_str(cplx z) {
    std::ostringstream os;
    os << "(" << z.real() << ", " << z.imag() << ")";
    return os.str();
}

// Extrapolated limits at every point of a boundary grid; the record carries
// the worst estimate, or the first offender on failure.
HypothesisRecord limits_record(const HarmonicField& u, const std::vector<Approach>& approaches,
                               const std::vector<std::string>& labels, const AuditConfig& cfg,
                               const std::string& name) {
    HypothesisRecord rec;
    rec.name = name;
    LimitOpts opts{cfg.limit_tolerance};
    LimitEstimate worst;
    double worst_size = -1.0;
    for (size_t i = 0; i < approaches.size(); ++i) {
        LimitEstimate est = boundary::directional_limit(u, approaches[i], cfg.limit_schedule, opts);
        bool ok = est.converged && std::fabs(est.limit) <= cfg.limit_tolerance;
        if (!ok) {
            rec.outcome = Outcome::fail;
            rec.evidence = est;
            rec.note = (est.converged ? "nonzero limit at " : "no limit at ") + labels[i];
            return rec;
        }
        if (std::fabs(est.limit) > worst_size) {
            worst_size = std::fabs(est.limit);
            worst = est;
        }
    }
    rec.outcome = Outcome::pass;
    rec.evidence = worst;
    return rec;
}

// Power-law growth hypothesis: fitted exponent must not exceed the
// threshold.  A field that vanishes identically on the profiles passes
// trivially.
HypothesisRecord growth_record(const HarmonicField& u, double threshold, Profile::Kind kind,
                               const AuditConfig& cfg) {
    HypothesisRecord rec;
    rec.name = "growth_bound";
    GrowthFitOpts opts;
    opts.profile = kind;
    opts.n = cfg.sup_n;
    opts.x_lo = -0.999;
    opts.x_hi = 0.999;
    GrowthFit fit;
    try {
        fit = boundary::growth_fit(abs_field(u), cfg.growth_schedule, GrowthFit::Kind::power,
                                   opts);
    } catch (const std::domain_error&) {
        rec.outcome = Outcome::pass;
        rec.evidence = 0.0;
        rec.note = "field vanishes on the growth profiles";
        return rec;
    }
    rec.evidence = fit;
    std::ostringstream os;
    os << "fitted exponent " << fit.exponent << " vs threshold " << threshold;
    rec.note = os.str();
    if (fit.weak_fit) {
        rec.outcome = Outcome::indeterminate;
        rec.note += " (weak fit)";
    } else {
        rec.outcome = fit.exponent <= threshold ? Outcome::pass : Outcome::fail;
    }
    return rec;
}

// The for-every-epsilon envelope: fit the coefficient of the exponential
// growth gauge and compare it against a shrinking epsilon schedule.  The
// schedule is finite, so a holding trend is reported as indeterminate
// support, never as a pass.
HypothesisRecord wolf_growth_record(const HarmonicField& u, double theta,
                                    const AuditConfig& cfg) {
    HypothesisRecord rec;
    rec.name = "growth_bound";
    double gamma = PI / (2.0 * theta);

    std::vector<double> taus, logs;
    if (cfg.log_scale) {
        GrowthFitOpts opts;
        opts.n = cfg.sup_n;
        opts.log_values = true;
        GrowthFit fit = boundary::growth_fit(u, cfg.growth_schedule, GrowthFit::Kind::exp_power,
                                             opts);
        for (size_t i = 0; i < cfg.growth_schedule.size(); ++i) {
            taus.push_back(std::pow(1.0 - cfg.growth_schedule[i], -gamma));
            logs.push_back(fit.sup_values[i]);
        }
    } else {
        for (double r : cfg.growth_schedule) {
            double m = boundary::sup_profile(u, Profile::circle(r), cfg.sup_n);
            if (m <= 0.0) continue;
            taus.push_back(std::pow(1.0 - r, -gamma));
            logs.push_back(std::log(m));
        }
    }
    if (taus.size() < 3) {
        rec.outcome = Outcome::pass;
        rec.evidence = 0.0;
        rec.note = "field vanishes on the growth profiles";
        return rec;
    }

    double c = fit_slope(taus, logs);
    rec.evidence = c;
    for (int k = 0; k <= 6; ++k) {
        double eps = cfg.wolf_eps0 * std::pow(0.8, k);
        if (c >= eps) {
            rec.outcome = Outcome::fail;
            std::ostringstream os;
            os << "envelope coefficient " << c << " exceeds epsilon " << eps
               << " from the shrinking schedule";
            rec.note = os.str();
            return rec;
        }
    }
    rec.outcome = Outcome::indeterminate;
    std::ostringstream os;
    os << "indeterminate-supported: coefficient " << c
       << " stays below every epsilon in the finite schedule";
    rec.note = os.str();
    return rec;
}

double scale_gauge(const HarmonicField& u, bool rectangle_shape, const AuditConfig&) {
    Profile p = rectangle_shape ? Profile::hline(0.5, -0.999, 0.999) : Profile::circle(0.5);
    return boundary::sup_profile(u, p, 128);
}

ConclusionRecord interior_vanishing(const HarmonicField& u, const AuditConfig& cfg) {
    ConclusionRecord rec;
    rec.checked = true;
    double scale = scale_gauge(u, false, cfg);
    geometry::GridSpec grid;
    grid.schedule = {0.15, 0.3, 0.45, 0.6, 0.75, 0.9, 0.95};
    grid.n = cfg.grid_n;
    double sup = 0.0;
    for (cplx z : geometry::sample_grid(u.region, grid))
        sup = std::max(sup, std::abs(u.value(z)));
    rec.evidence = sup;
    double gate = cfg.tolerance * (1.0 + scale);
    rec.outcome = sup <= gate ? Outcome::pass : Outcome::fail;
    std::ostringstream os;
    os << "interior sup " << sup << " vs gate " << gate;
    rec.note = os.str();
    return rec;
}

// u tends to 0 on the distinguished boundary: extrapolated limits of |u| on
// the boundary grid, gated by the conclusion tolerance.
ConclusionRecord boundary_vanishing(const HarmonicField& u, bool rectangle_shape, double theta,
                                    const AuditConfig& cfg) {
    ConclusionRecord rec;
    rec.checked = true;
    HarmonicField au = abs_field(u);
    double scale = scale_gauge(u, rectangle_shape, cfg);
    double gate = std::max(cfg.tolerance * (1.0 + scale), cfg.limit_tolerance);
    double worst = 0.0;
    for (int j = 0; j < cfg.boundary_points; ++j) {
        Approach a;
        std::string label;
        if (rectangle_shape) {
            double alpha = -1.0 + 2.0 * (j + 0.5) / cfg.boundary_points;
            a = Approach::sector(geometry::SectorSpec::upper(alpha, theta));
            label = "alpha=" + std::to_string(alpha);
        } else {
            double phi = 2.0 * PI * j / cfg.boundary_points;
            a = Approach::radial(phi);
            label = "phi=" + std::to_string(phi);
        }
        LimitEstimate est =
            boundary::directional_limit(au, a, cfg.limit_schedule, LimitOpts{cfg.limit_tolerance});
        if (!est.converged || std::fabs(est.limit) > gate) {
            rec.outcome = Outcome::fail;
            rec.evidence = est.converged ? std::fabs(est.limit) : est.values.back();
            rec.note = (est.converged ? "nonzero boundary limit at " : "no boundary limit at ") +
                       label;
            return rec;
        }
        worst = std::max(worst, std::fabs(est.limit));
    }
    rec.outcome = Outcome::pass;
    rec.evidence = worst;
    std::ostringstream os;
    os << "worst boundary limit " << worst << " vs gate " << gate;
    rec.note = os.str();
    return rec;
}

struct WeightedSup {
    double value = 0.0;
    double refined = 0.0;
    bool stable = false;
    cplx witness;
};

// Sup of weight(z)|u(z)| along a ray into the vertex, with a deeper and
// denser rescan; divergence into the puncture shows up as an unstable
// refinement.
WeightedSup ray_scan(const std::function<double(cplx)>& w, double angle, double rho,
                     const AuditConfig& cfg) {
    WeightedSup out;
    auto scan = [&](double h, int depth, double* best, cplx* arg) {
        *best = 0.0;
        for (int j = 1; j <= depth; ++j) {
            cplx z = std::polar(rho * std::pow(h, j), angle);
            double v = w(z);
            if (!std::isfinite(v)) throw std::runtime_error("audit_phragmen: non-finite sample");
            if (v > *best) {
                *best = v;
                *arg = z;
            }
        }
    };
    cplx arg1, arg2;
    scan(0.8, 60, &out.value, &arg1);
    scan(std::sqrt(0.8), 160, &out.refined, &arg2);
    out.stable = out.refined <= out.value + cfg.stability_tol * (1.0 + out.value);
    out.witness = out.stable ? arg1 : arg2;
    return out;
}

WeightedSup interior_scan(const HarmonicField& u, const std::function<double(cplx)>& w,
                          const AuditConfig& cfg) {
    double rho = u.region.rho;
    auto scan = [&](int depth, int n, double* best, cplx* arg) {
        geometry::GridSpec grid;
        for (int j = 1; j <= depth; ++j) grid.schedule.push_back(rho * std::pow(0.8, j));
        grid.n = n;
        *best = 0.0;
        for (cplx z : geometry::sample_grid(u.region, grid)) {
            double v = w(z);
            if (!std::isfinite(v)) throw std::runtime_error("audit_phragmen: non-finite sample");
            if (v > *best) {
                *best = v;
                *arg = z;
            }
        }
    };
    WeightedSup out;
    cplx arg1, arg2;
    scan(25, cfg.grid_n, &out.value, &arg1);
    scan(35, 2 * cfg.grid_n, &out.refined, &arg2);
    out.stable = out.refined <= out.value + cfg.stability_tol * (1.0 + out.value);
    out.witness = out.stable ? arg1 : arg2;
    return out;
}

AuditVerdict factorized_engine(const HarmonicField& u, const HarmonicField& f,
                               const HarmonicField& g, FactorizedRegion region, double theta,
                               double m, const AuditConfig& raw_cfg, const std::string& id) {
    bool rect = region == FactorizedRegion::rectangle;
    AuditConfig cfg = filled(raw_cfg, rect);

    auto shape_ok = [&](const HarmonicField& h) {
        return rect ? h.region.kind == geometry::Region::Kind::rectangle
                    : h.region.kind == geometry::Region::Kind::unit_disc;
    };
    if (!shape_ok(u) || !shape_ok(f) || !shape_ok(g))
        throw std::invalid_argument("audit_factorized: field regions do not match the variant");

    bool subharmonic = u.regularity == Regularity::subharmonic_nonneg;
    if (!subharmonic && u.regularity != Regularity::harmonic)
        throw std::invalid_argument("audit_factorized: field must claim harmonic or "
                                    "nonnegative subharmonic regularity");
    if (m < 0.0) throw std::invalid_argument("audit_factorized: need m >= 0");
    if (subharmonic && m >= PI / theta)
        throw std::invalid_argument("audit_factorized: the subharmonic variant needs m < pi/theta");

    AuditVerdict verdict;
    verdict.theorem = id;
    verdict.notes.push_back(
        "declared only: f is taken as lower semicontinuous; samples cannot certify that");

    {
        HypothesisRecord rec;
        rec.name = "pointwise_bound";
        rec.outcome = Outcome::pass;
        geometry::GridSpec grid;
        grid.schedule = rect ? std::vector<double>{0.4, 0.2, 0.1, 0.05, 0.02}
                             : std::vector<double>{0.3, 0.5, 0.7, 0.85, 0.95};
        grid.n = cfg.grid_n;
        double worst_ratio = 0.0;
        for (cplx z : geometry::sample_grid(u.region, grid)) {
            double uv = std::abs(u.value(z));
            if (subharmonic && u.value(z).real() < -1e-9 * (1.0 + uv))
                throw std::domain_error(
                    "audit_factorized: negative sample in the subharmonic variant at " +
                    point_str(z));
            double bound = f.real_value(z) * g.real_value(z);
            worst_ratio = std::max(worst_ratio, uv / (bound + 1e-300));
            if (uv > bound * (1.0 + cfg.tolerance) + cfg.tolerance) {
                rec.outcome = Outcome::fail;
                rec.note = "bound violated at " + point_str(z);
                break;
            }
        }
        rec.evidence = worst_ratio;
        verdict.hypotheses.push_back(rec);
    }

    {
        std::vector<Approach> approaches;
        std::vector<std::string> labels;
        for (int j = 0; j < cfg.boundary_points; ++j) {
            if (rect) {
                double alpha = -1.0 + 2.0 * (j + 0.5) / cfg.boundary_points;
                approaches.push_back(Approach::sector(geometry::SectorSpec::upper(alpha, theta)));
                labels.push_back("alpha=" + std::to_string(alpha));
            } else {
                double phi = 2.0 * PI * j / cfg.boundary_points;
                approaches.push_back(Approach::sector(geometry::SectorSpec::stolz(phi, theta)));
                labels.push_back("phi=" + std::to_string(phi));
            }
        }
        verdict.hypotheses.push_back(limits_record(f, approaches, labels, cfg, "factor_decay"));
    }

    {
        HypothesisRecord rec;
        rec.name = "factor_line_mass";
        boundary::L1Profile prof = boundary::l1_bound_profile(
            g, rect ? Profile::Kind::hline : Profile::Kind::circle, cfg.growth_schedule);
        rec.evidence = prof.sup;
        if (prof.divergent || prof.unbounded_trend) {
            rec.outcome = Outcome::fail;
            rec.note = prof.divergent ? "line mass not resolved at the last level"
                                      : "line masses still climbing at the end of the schedule";
        } else {
            rec.outcome = Outcome::pass;
        }
        verdict.hypotheses.push_back(rec);
    }

    verdict.hypotheses.push_back(growth_record(
        u, m + cfg.margin, rect ? Profile::Kind::hline : Profile::Kind::circle, cfg));

    verdict.conclusion = boundary_vanishing(u, rect, theta, cfg);
    verdict.consistency = combine(verdict.hypotheses, verdict.conclusion);
    return verdict;
}

}  // namespace

const char* to_cstring(Outcome o) {
    switch (o) {
        case Outcome::pass: return "pass";
        case Outcome::fail: return "fail";
        case Outcome::indeterminate: return "indeterminate";
    }
    return "?";
}

const char* to_cstring(Consistency c) {
    switch (c) {
        case Consistency::consistent: return "consistent";
        case Consistency::sharpness_witness: return "sharpness_witness";
        case Consistency::contradiction: return "contradiction";
    }
    return "?";
}

Consistency combine(const std::vector<HypothesisRecord>& hypotheses,
                    const ConclusionRecord& conclusion) {
    if (!conclusion.checked || conclusion.outcome != Outcome::fail)
        return Consistency::consistent;
    bool all_pass = !hypotheses.empty();
    bool any_fail = false;
    for (const auto& h : hypotheses) {
        if (h.outcome != Outcome::pass) all_pass = false;
        if (h.outcome == Outcome::fail) any_fail = true;
    }
    if (all_pass) return Consistency::contradiction;
    if (any_fail) return Consistency::sharpness_witness;
    return Consistency::consistent;
}

AuditVerdict audit_classical(const HarmonicField& u, ClassicalTheorem theorem, double theta,
                             const AuditConfig& raw_cfg) {
    AuditConfig cfg = filled(raw_cfg, false);
    if (u.region.kind != geometry::Region::Kind::unit_disc)
        throw std::invalid_argument("audit_classical: field must live on the unit disc");

    bool needs_theta = theorem != ClassicalTheorem::dahlberg;
    if (needs_theta && !(theta > 0.0 && theta < PI / 2))
        throw std::invalid_argument("audit_classical: need theta in (0, pi/2)");

    if (theorem == ClassicalTheorem::wolf) {
        if (u.regularity != Regularity::harmonic)
            throw std::invalid_argument("audit_classical: the exponential-envelope variant "
                                        "requires a harmonic field");
    } else if (u.regularity != Regularity::harmonic &&
               u.regularity != Regularity::subharmonic_nonneg) {
        throw std::invalid_argument("audit_classical: field must claim harmonic or "
                                    "nonnegative subharmonic regularity");
    }

    AuditVerdict verdict;
    switch (theorem) {
        case ClassicalTheorem::dahlberg: verdict.theorem = "dahlberg"; break;
        case ClassicalTheorem::berman_cohn: verdict.theorem = "berman_cohn"; break;
        case ClassicalTheorem::wolf: verdict.theorem = "wolf"; break;
    }

    {
        std::vector<Approach> approaches;
        std::vector<std::string> labels;
        for (int j = 0; j < cfg.boundary_points; ++j) {
            double phi = 2.0 * PI * j / cfg.boundary_points;
            if (theorem == ClassicalTheorem::dahlberg) {
                approaches.push_back(Approach::radial(phi));
            } else {
                approaches.push_back(Approach::sector(geometry::SectorSpec::stolz(phi, theta)));
            }
            labels.push_back("phi=" + std::to_string(phi));
        }
        verdict.hypotheses.push_back(limits_record(u, approaches, labels, cfg, "boundary_limits"));
    }

    if (theorem == ClassicalTheorem::wolf) {
        verdict.hypotheses.push_back(wolf_growth_record(u, theta, cfg));
    } else {
        double bound = theorem == ClassicalTheorem::dahlberg ? 2.0 : PI / theta;
        verdict.hypotheses.push_back(
            growth_record(u, bound - cfg.margin, Profile::Kind::circle, cfg));
    }

    verdict.conclusion = interior_vanishing(u, cfg);
    verdict.consistency = combine(verdict.hypotheses, verdict.conclusion);
    return verdict;
}

AuditVerdict audit_factorized(const HarmonicField& u, const HarmonicField& f,
                              const HarmonicField& g, FactorizedRegion region, double theta,
                              double m, const AuditConfig& cfg) {
    return factorized_engine(u, f, g, region, theta, m, cfg,
                             region == FactorizedRegion::rectangle ? "factorized_rectangle"
                                                                   : "factorized_disc");
}

AuditVerdict audit_phragmen(const HarmonicField& u, double l, double theta, double m,
                            const AuditConfig& raw_cfg) {
    AuditConfig cfg = filled(raw_cfg, false);
    if (u.region.kind != geometry::Region::Kind::finite_sector)
        throw std::invalid_argument("audit_phragmen: field must live on a finite sector");
    double opening = u.region.theta;
    double rho = u.region.rho;

    bool subharmonic = u.regularity == Regularity::subharmonic_nonneg;
    AuditVerdict verdict;
    std::vector<double> ray_angles;

    if (subharmonic) {
        verdict.theorem = "phragmen_classical_sector";
        if (!(l >= 0.0 && l <= m && m < PI / opening))
            throw std::invalid_argument(
                "audit_phragmen: need 0 <= l <= m < pi/opening for the subharmonic variant");
        ray_angles = {0.0, opening};
    } else if (u.regularity == Regularity::harmonic) {
        verdict.theorem = "phragmen_quadrant_rays";
        if (std::fabs(opening - PI / 2) > 1e-9)
            throw std::invalid_argument("audit_phragmen: the harmonic variant runs on the quadrant");
        if (!(l >= 0.0 && l < 2.0))
            throw std::invalid_argument("audit_phragmen: need l in [0,2)");
        if (!(theta > 0.0 && theta < PI / 2))
            throw std::invalid_argument("audit_phragmen: need an interior ray theta in (0, pi/2)");
        if (m < 0.0) throw std::invalid_argument("audit_phragmen: need m >= 0");
        ray_angles = {0.0, theta, PI / 2};

        std::ostringstream os;
        int top = std::max(1, static_cast<int>(std::ceil(m)));
        double worst = 1.0;
        for (int n = 1; n <= top; ++n)
            worst = std::min(worst, std::min(std::fabs(std::cos(n * theta)),
                                             std::fabs(std::sin(n * theta))));
        os << "declared only: theta/pi irrationality is not machine checkable; "
           << "min of |cos n theta|, |sin n theta| over n <= " << top << " is " << worst;
        verdict.notes.push_back(os.str());
    } else {
        throw std::invalid_argument("audit_phragmen: field must claim harmonic or "
                                    "nonnegative subharmonic regularity");
    }

    auto sample = [&](cplx z) {
        cplx v = u.value(z);
        if (subharmonic && v.real() < -1e-9 * (1.0 + std::abs(v)))
            throw std::domain_error("audit_phragmen: negative sample at " + point_str(z));
        return std::abs(v);
    };

    {
        HypothesisRecord rec;
        rec.name = "ray_bounds";
        rec.outcome = Outcome::pass;
        double worst = 0.0;
        for (double a : ray_angles) {
            auto weighted = [&](cplx z) { return std::pow(std::abs(z), l) * sample(z); };
            WeightedSup s = ray_scan(weighted, a, rho, cfg);
            worst = std::max(worst, s.refined);
            if (!s.stable) {
                rec.outcome = Outcome::fail;
                rec.note = "ray bound diverges toward the vertex, witness " + point_str(s.witness);
                rec.evidence = s.refined;
                verdict.hypotheses.push_back(rec);
                goto rays_done;
            }
        }
        rec.evidence = worst;
        verdict.hypotheses.push_back(rec);
    }
rays_done:

    {
        HypothesisRecord rec;
        rec.name = "interior_bound";
        auto weighted = [&](cplx z) {
            double w = subharmonic ? std::pow(std::abs(z), m) : std::pow(std::fabs(z.imag()), m);
            return w * sample(z);
        };
        WeightedSup s = interior_scan(u, weighted, cfg);
        rec.evidence = s.refined;
        if (s.stable) {
            rec.outcome = Outcome::pass;
        } else {
            rec.outcome = Outcome::fail;
            rec.note = "interior bound diverges, witness " + point_str(s.witness);
        }
        verdict.hypotheses.push_back(rec);
    }

    {
        ConclusionRecord rec;
        rec.checked = true;
        auto weighted = [&](cplx z) { return std::pow(std::abs(z), l) * sample(z); };
        WeightedSup s = interior_scan(u, weighted, cfg);
        rec.evidence = s.refined;
        if (s.stable) {
            rec.outcome = Outcome::pass;
            rec.note = "weighted interior sup " + std::to_string(s.refined) + " is stable";
        } else {
            rec.outcome = Outcome::fail;
            rec.note = "weighted interior sup diverges, witness " + point_str(s.witness);
        }
        verdict.conclusion = rec;
    }

    verdict.consistency = combine(verdict.hypotheses, verdict.conclusion);
    return verdict;
}

HarmonicField jump_profile(const HarmonicField& u) {
    HarmonicField f;
    f.name = "jump(" + u.name + ")";
    f.region = geometry::Region::rectangle(u.region.x_lo, u.region.x_hi, 0.0, u.region.y_hi);
    f.metadata = exemplars::Metadata::composite;
    f.regularity = Regularity::subharmonic_nonneg;
    f.eval = [e = u.eval](cplx z) { return cplx(std::abs(e(z) - e(std::conj(z)))); };
    return f;
}

EdgeOfWedgeReport audit_edge_of_wedge(const HarmonicField& u, const HarmonicField& f,
                                      const HarmonicField& g, double theta, double m,
                                      const AuditConfig& raw_cfg) {
    AuditConfig cfg = filled(raw_cfg, true);
    if (u.region.kind != geometry::Region::Kind::rectangle || !(u.region.y_lo < 0.0))
        throw std::invalid_argument(
            "audit_edge_of_wedge: field must live on a rectangle straddling the reals");

    HarmonicField U;
    U.name = "odd_part(" + u.name + ")";
    U.region = geometry::Region::rectangle(u.region.x_lo, u.region.x_hi, 0.0, u.region.y_hi);
    U.metadata = exemplars::Metadata::composite;
    U.regularity = Regularity::harmonic;
    U.eval = [e = u.eval](cplx z) { return 0.5 * (e(z) - e(std::conj(z))); };

    EdgeOfWedgeReport report;
    report.verdict =
        factorized_engine(U, f, g, FactorizedRegion::rectangle, theta, m, cfg, "edge_of_wedge");

    bool all_pass = true;
    for (const auto& h : report.verdict.hypotheses)
        if (h.outcome != Outcome::pass) all_pass = false;

    if (all_pass && u.metadata == exemplars::Metadata::closed_form) {
        std::vector<double> deltas;
        for (int k = 3; k <= 10; ++k) deltas.push_back(std::pow(2.0, -k));
        size_t n = deltas.size();
        for (int j = 0; j <= 100; ++j) {
            double alpha = -0.99 + 1.98 * j / 100.0;
            std::vector<cplx> means;
            for (double d : deltas)
                means.push_back(0.5 * (u.value(cplx(alpha, d)) + u.value(cplx(alpha, -d))));
            // Richardson step on the last three two-sided means.
            cplx v2 = means[n - 2], v3 = means[n - 1];
            double d2 = deltas[n - 2], d3 = deltas[n - 1];
            cplx value = v3 - d3 * (v2 - v3) / (d2 - d3);
            report.alphas.push_back(alpha);
            report.continuation.push_back(value);
            report.mismatch = std::max(report.mismatch, std::abs(value - u.value(cplx(alpha, 0))));
        }
        report.continued = true;
    }
    return report;
}

}  // namespace hblab::audits
