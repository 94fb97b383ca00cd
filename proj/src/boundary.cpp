#include "hblab/boundary.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace hblab::boundary {

namespace {

struct LineFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 1.0;
};

LineFit linear_fit(const std::vector<double>& xs, const std::vector<double>& ys) {
    size_t n = xs.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (size_t i = 0; i < n; ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    LineFit fit;
    double det = n * sxx - sx * sx;
    fit.slope = (n * sxy - sx * sy) / det;
    fit.intercept = (sy - fit.slope * sx) / n;

    double ss_res = 0, ss_tot = 0;
    double mean = sy / n;
    for (size_t i = 0; i < n; ++i) {
        double pred = fit.intercept + fit.slope * xs[i];
        ss_res += (ys[i] - pred) * (ys[i] - pred);
        ss_tot += (ys[i] - mean) * (ys[i] - mean);
    }
    fit.r_squared = ss_tot < 1e-30 ? 1.0 : 1.0 - ss_res / ss_tot;
    return fit;
}

void require_finite(double v, const char* who) {
    if (!std::isfinite(v))
        throw std::runtime_error(std::string(who) + ": non-finite sample value");
}

double golden_max(const std::function<double(double)>& f, double a, double b,
                  double seed) {
    const double inv_phi = 0.6180339887498949;
    double best = seed;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    for (int it = 0; it < 60; ++it) {
        best = std::max(best, std::max(f1, f2));
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = f(x1);
        }
    }
    return std::max(best, std::max(f1, f2));
}

// Shared by sup_profile and the growth fits; log-scale fields are maximized
// without the absolute value.
double profile_max(const exemplars::HarmonicField& u, const Profile& p, int n,
                   bool use_abs) {
    if (n < 64) throw std::invalid_argument("sup_profile: need n >= 64");

    auto val = [&](double s) {
        cplx z = p.kind == Profile::Kind::circle ? std::polar(p.level, s)
                                                 : cplx(s, p.level);
        double v = u.real_value(z);
        require_finite(v, "sup_profile");
        return use_abs ? std::fabs(v) : v;
    };

    double lo, hi;
    bool periodic = false;
    std::vector<double> grid(n);
    if (p.kind == Profile::Kind::circle) {
        lo = p.phi_lo;
        hi = p.phi_hi;
        periodic = std::fabs((hi - lo) - 2.0 * PI) < 1e-12;
        for (int j = 0; j < n; ++j) grid[j] = lo + (hi - lo) * (j + 0.5) / n;
    } else {
        lo = p.x_lo;
        hi = p.x_hi;
        for (int j = 0; j < n; ++j) grid[j] = lo + (hi - lo) * j / (n - 1.0);
    }

    {
        cplx probe = p.kind == Profile::Kind::circle ? std::polar(p.level, grid[0])
                                                     : cplx(grid[0], p.level);
        cplx probe2 = p.kind == Profile::Kind::circle
                          ? std::polar(p.level, grid[n / 2])
                          : cplx(grid[n / 2], p.level);
        if (!u.region.contains(probe) || !u.region.contains(probe2))
            throw std::invalid_argument("sup_profile: level is not interior to the region");
    }

    double best = -std::numeric_limits<double>::infinity();
    int best_j = 0;
    for (int j = 0; j < n; ++j) {
        double v = val(grid[j]);
        if (v > best) {
            best = v;
            best_j = j;
        }
    }

    double step = p.kind == Profile::Kind::circle ? (hi - lo) / n
                                                  : (hi - lo) / (n - 1.0);
    double a = grid[best_j] - step;
    double b = grid[best_j] + step;
    if (!periodic) {
        a = std::max(a, lo);
        b = std::min(b, hi);
    }
    return golden_max(val, a, b, best);
}

double schedule_abscissa(Profile::Kind kind, double level) {
    return kind == Profile::Kind::circle ? std::log(1.0 / (1.0 - level))
                                         : std::log(1.0 / level);
}

void check_schedule(Profile::Kind kind, const std::vector<double>& schedule,
                    const char* who) {
    if (schedule.size() < 2)
        throw std::invalid_argument(std::string(who) + ": schedule too short");
    for (size_t i = 0; i < schedule.size(); ++i) {
        double s = schedule[i];
        if (kind == Profile::Kind::circle) {
            if (!(s > 0.0 && s < 1.0))
                throw std::invalid_argument(std::string(who) + ": radii must lie in (0,1)");
            if (i > 0 && !(s > schedule[i - 1]))
                throw std::invalid_argument(std::string(who) +
                                            ": radii must increase toward the boundary");
        } else {
            if (!(s > 0.0))
                throw std::invalid_argument(std::string(who) + ": heights must be positive");
            if (i > 0 && !(s < schedule[i - 1]))
                throw std::invalid_argument(std::string(who) +
                                            ": heights must decrease toward the boundary");
        }
    }
}

}  // namespace

Approach Approach::radial(double phi) {
    Approach a;
    a.kind = Kind::radial;
    a.phi = phi;
    return a;
}

Approach Approach::sector(const geometry::SectorSpec& s) {
    Approach a;
    a.kind = Kind::sector;
    a.spec = s;
    return a;
}

Profile Profile::circle(double r) {
    Profile p;
    p.kind = Kind::circle;
    p.level = r;
    return p;
}

Profile Profile::arc(double r, double phi_lo, double phi_hi) {
    Profile p;
    p.kind = Kind::circle;
    p.level = r;
    p.phi_lo = phi_lo;
    p.phi_hi = phi_hi;
    return p;
}

Profile Profile::hline(double beta, double x_lo, double x_hi) {
    Profile p;
    p.kind = Kind::hline;
    p.level = beta;
    p.x_lo = x_lo;
    p.x_hi = x_hi;
    return p;
}

LimitEstimate directional_limit(const exemplars::HarmonicField& u, const Approach& approach,
                                const std::vector<double>& schedule,
                                const LimitOpts& opts) {
    if (schedule.size() < 3)
        throw std::invalid_argument("directional_limit: need at least three schedule radii");
    for (size_t i = 0; i < schedule.size(); ++i) {
        if (!(schedule[i] > 0.0 && schedule[i] < 1.0))
            throw std::invalid_argument("directional_limit: radii must lie in (0,1)");
        if (i > 0 && !(schedule[i] > schedule[i - 1]))
            throw std::invalid_argument(
                "directional_limit: schedule must approach the base point strictly");
    }

    LimitEstimate est;
    for (double r : schedule) {
        double v;
        if (approach.kind == Approach::Kind::radial) {
            v = u.real_value(std::polar(r, approach.phi));
        } else {
            // Sup of |u| over a 32-angle cross-section at distance 1-r.
            double d = 1.0 - r;
            double sup = 0.0;
            for (int j = 0; j < 32; ++j) {
                cplx z;
                if (approach.spec.kind == geometry::SectorSpec::Kind::stolz) {
                    double half = PI / 2 - approach.spec.theta;
                    double chi = -half + 2.0 * half * j / 31.0;
                    z = std::polar(1.0, approach.spec.phi) *
                        (1.0 - d * std::polar(1.0, chi));
                } else {
                    double chi = approach.spec.theta +
                                 (PI - 2.0 * approach.spec.theta) * (j + 0.5) / 32.0;
                    z = approach.spec.alpha + d * std::polar(1.0, chi);
                }
                sup = std::max(sup, std::fabs(u.real_value(z)));
            }
            v = sup;
        }
        require_finite(v, "directional_limit");
        est.values.push_back(v);
    }

    size_t n = est.values.size();
    double v1 = est.values[n - 3];
    double d2 = 1.0 - schedule[n - 2], v2 = est.values[n - 2];
    double d3 = 1.0 - schedule[n - 1], v3 = est.values[n - 1];
    est.limit = v3 - d3 * (v2 - v3) / (d2 - d3);
    est.converged = std::fabs(v1 - est.limit) <= opts.tolerance &&
                    std::fabs(v2 - est.limit) <= opts.tolerance &&
                    std::fabs(v3 - est.limit) <= opts.tolerance;

    std::vector<double> xs, ys;
    for (size_t i = 0; i < n; ++i) {
        double mag = std::fabs(est.values[i]);
        if (mag > 0.0) {
            xs.push_back(std::log(1.0 - schedule[i]));
            ys.push_back(std::log(mag));
        }
    }
    if (xs.size() >= 3) {
        LineFit fit = linear_fit(xs, ys);
        est.decay_fit = DecayFit{fit.slope, fit.r_squared};
    }
    return est;
}

double sup_profile(const exemplars::HarmonicField& u, const Profile& p, int n) {
    return profile_max(u, p, n, true);
}

GrowthFit growth_fit(const exemplars::HarmonicField& u, const std::vector<double>& schedule,
                     GrowthFit::Kind kind, const GrowthFitOpts& opts) {
    if (schedule.size() < 6)
        throw std::invalid_argument("growth_fit: need at least six schedule points");
    check_schedule(opts.profile, schedule, "growth_fit");

    GrowthFit out;
    out.kind = kind;
    out.schedule = schedule;
    out.inner_exponent = opts.inner_exponent;

    std::vector<double> xs, ys;
    for (double level : schedule) {
        Profile p;
        if (opts.profile == Profile::Kind::circle) {
            p = Profile::arc(level, opts.phi_lo, opts.phi_hi);
        } else {
            p = Profile::hline(level, opts.x_lo, opts.x_hi);
        }
        double m = profile_max(u, p, opts.n, !opts.log_values);
        require_finite(m, "growth_fit");
        out.sup_values.push_back(m);

        double y;
        if (opts.log_values) {
            y = m;
        } else {
            if (!(m > 0.0))
                throw std::domain_error("growth_fit: nonpositive sup value, log fit undefined");
            y = std::log(m);
        }
        xs.push_back(schedule_abscissa(opts.profile, level));
        ys.push_back(y);
    }

    if (kind == GrowthFit::Kind::exp_power) {
        // Estimate the inner exponent: slope of log log M against the
        // abscissa.  Levels still below log M = 0 carry no growth signal.
        std::vector<double> xs2, ys2;
        for (size_t i = 0; i < xs.size(); ++i) {
            if (ys[i] > 0.0) {
                xs2.push_back(xs[i]);
                ys2.push_back(std::log(ys[i]));
            }
        }
        if (xs2.size() < 3) {
            out.weak_fit = true;
            return out;
        }
        xs = std::move(xs2);
        ys = std::move(ys2);
    }

    LineFit fit = linear_fit(xs, ys);
    out.exponent = fit.slope;
    out.r_squared = fit.r_squared;
    out.weak_fit = fit.r_squared < 0.9;
    return out;
}

double mean_value_check(const exemplars::HarmonicField& u, double p, cplx z, double r,
                        int n) {
    if (!(p > 0.0)) throw std::invalid_argument("mean_value_check: need p > 0");
    if (!(r > 0.0)) throw std::invalid_argument("mean_value_check: need r > 0");
    if (n < 16) throw std::invalid_argument("mean_value_check: need n >= 16");
    if (!u.region.contains(z))
        throw std::invalid_argument("mean_value_check: center outside the region");
    for (int j = 0; j < 16; ++j) {
        if (!u.region.contains(z + std::polar(r, 2.0 * PI * j / 16.0)))
            throw std::invalid_argument("mean_value_check: ball reaches outside the region");
    }

    auto sample = [&](cplx zz) {
        double v = u.real_value(zz);
        require_finite(v, "mean_value_check");
        if (v < -1e-12 * (1.0 + std::fabs(v)))
            throw std::domain_error("mean_value_check: negative sample, field is not >= 0");
        return std::max(v, 0.0);
    };

    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
        double rho = r * (i + 0.5) / n;
        for (int j = 0; j < n; ++j) {
            double th = 2.0 * PI * (j + 0.5) / n;
            sum += std::pow(sample(z + std::polar(rho, th)), p) * rho;
        }
    }
    double avg = sum * (r / n) * (2.0 * PI / n) / (PI * r * r);
    double center = std::pow(sample(z), p);
    if (avg == 0.0) return 0.0;
    return center / avg;
}

double mean_value_max_ratio(const exemplars::HarmonicField& u, double p,
                            const std::vector<cplx>& centers, double r, int n) {
    double best = 0.0;
    for (cplx z : centers) best = std::max(best, mean_value_check(u, p, z, r, n));
    return best;
}

DomarReport domar_transfer_check(const exemplars::HarmonicField& u, double m, double C,
                                 const geometry::GridSpec& grid) {
    if (u.regularity != exemplars::Regularity::subharmonic_nonneg &&
        u.regularity != exemplars::Regularity::harmonic)
        throw std::invalid_argument("domar_transfer_check: field does not claim the "
                                    "required regularity");

    // Spot check of the claim: a five-point Laplacian straddling the real
    // axis.  Reflected axis blow-ups produce a large negative stencil here.
    {
        double h = 1e-3;
        for (double x : {-0.6, -0.3, 0.45, 0.6}) {
            cplx z(x, h / 2);
            double c = u.real_value(z);
            double lap = (u.real_value(z + h) + u.real_value(z - h) +
                          u.real_value(z + cplx(0, h)) + u.real_value(z - cplx(0, h)) -
                          4.0 * c) /
                         (h * h);
            if (!(lap >= -0.01 * (1.0 + std::fabs(c)) / h))
                throw std::domain_error(
                    "domar_transfer_check: discrete Laplacian is negative near (" +
                    std::to_string(x) + ", " + std::to_string(h / 2) +
                    "), field is not subharmonic across the axis");
        }
    }

    auto scan = [&](const geometry::GridSpec& g) {
        double c_prime = 0.0;
        double margin = 0.0;
        for (cplx z : geometry::sample_grid(u.region, g)) {
            double v = u.real_value(z);
            require_finite(v, "domar_transfer_check");
            if (v < -1e-12)
                throw std::domain_error("domar_transfer_check: negative sample at (" +
                                        std::to_string(z.real()) + ", " +
                                        std::to_string(z.imag()) + ")");
            double bound = C * std::pow(std::fabs(z.imag()), -m);
            if (v > bound * (1.0 + 1e-9))
                throw std::domain_error(
                    "domar_transfer_check: axis hypothesis fails at witness (" +
                    std::to_string(z.real()) + ", " + std::to_string(z.imag()) +
                    "): u = " + std::to_string(v) + " > " + std::to_string(bound));
            c_prime = std::max(c_prime, v * std::pow(std::abs(z), m));
            if (std::isfinite(bound) && bound > 0.0)
                margin = std::max(margin, v / bound);
        }
        return std::pair<double, double>{c_prime, margin};
    };

    DomarReport rep;
    auto [c1, margin] = scan(grid);
    geometry::GridSpec fine = grid;
    fine.n *= 2;
    auto [c2, margin2] = scan(fine);
    rep.c_prime = c1;
    rep.c_prime_refined = c2;
    rep.hypothesis_margin = std::max(margin, margin2);
    rep.stable = std::fabs(c2 - c1) <= 1e-3 * (1.0 + std::max(c1, c2));
    rep.grid_points = static_cast<int>(grid.schedule.size()) * grid.n;
    return rep;
}

L1Profile l1_bound_profile(const exemplars::HarmonicField& g, Profile::Kind kind,
                           const std::vector<double>& schedule, const L1Opts& opts) {
    check_schedule(kind, schedule, "l1_bound_profile");
    if (opts.n < 64) throw std::invalid_argument("l1_bound_profile: need n >= 64");

    auto level_integral = [&](double level, int n) {
        double sum = 0.0;
        for (int j = 0; j < n; ++j) {
            cplx z;
            double weight;
            if (kind == Profile::Kind::circle) {
                z = std::polar(level, 2.0 * PI * (j + 0.5) / n);
                weight = 2.0 * PI / n;
            } else {
                z = cplx(opts.x_lo + (opts.x_hi - opts.x_lo) * (j + 0.5) / n, level);
                weight = (opts.x_hi - opts.x_lo) / n;
            }
            double v = g.real_value(z);
            require_finite(v, "l1_bound_profile");
            if (v < -1e-12)
                throw std::domain_error("l1_bound_profile: negative sample, majorant must be >= 0");
            sum += std::max(v, 0.0) * weight;
        }
        return sum;
    };

    L1Profile out;
    out.schedule = schedule;
    for (double level : schedule) out.integrals.push_back(level_integral(level, opts.n));

    double coarse = out.integrals.back();
    double fine = level_integral(schedule.back(), 2 * opts.n);
    out.integrals.back() = fine;
    out.divergent = fine - coarse > 0.1 * std::max(coarse, 1e-12);

    out.sup = *std::max_element(out.integrals.begin(), out.integrals.end());

    size_t n = out.integrals.size();
    if (n >= 3) {
        bool rising = out.integrals[n - 1] > out.integrals[n - 2] &&
                      out.integrals[n - 2] > out.integrals[n - 3];
        out.unbounded_trend = rising && out.integrals[n - 1] > 2.0 * out.integrals[0];
    }
    return out;
}

}  // namespace hblab::boundary
