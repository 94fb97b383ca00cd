#include "hblab/wolf.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <stdexcept>
#include <string>

#include "hblab/potential.hpp"
#include "hblab/quadrature.hpp"

namespace hblab::wolf {

namespace {

double arg_upper(cplx w) {
    // Branch with the cut on the positive real axis, continuous across the
    // negative reals.  The band image stays near R-, the plateau image near
    // R+ is only ever approached from Im >= 0.  Rounding noise in Im w must
    // not flip a real w across the cut, so near-axis values snap to the axis.
    if (std::abs(w.imag()) <= 1e-12 * std::abs(w))
        return w.real() >= 0.0 ? 0.0 : PI;
    double a = std::arg(w);
    return a < 0.0 ? a + 2.0 * PI : a;
}

cplx ipow(cplx z, int n) {
    cplx out = 1.0;
    cplx base = z;
    for (int k = n; k > 0; k >>= 1) {
        if (k & 1) out *= base;
        base *= base;
    }
    return out;
}

// Shared geometry and closures of one assembled field.
struct Assembly {
    WolfParams p;
    double gamma;    // pi / (2 theta)
    double psi_lo;   // transition band in psi = arg(1-z)
    double psi_hi;

    double psi_of(cplx z) const { return std::arg(1.0 - z); }

    double gtilde(double psi) const {
        return quad::smoothstep5((psi - psi_lo) / (psi_hi - psi_lo));
    }

    double gtilde_prime(double psi) const {
        double x = (psi - psi_lo) / (psi_hi - psi_lo);
        if (x <= 0.0 || x >= 1.0) return 0.0;
        double y = x * (1.0 - x);
        return 30.0 * y * y / (psi_hi - psi_lo);
    }

    cplx omega(cplx z) const {
        return p.K + cplx(0.0, p.epsilon) * (1.0 + z) / (1.0 - z);
    }

    cplx pow_gamma(cplx w) const {
        double m = std::abs(w);
        if (m == 0.0) return 0.0;
        return std::polar(std::pow(m, gamma), gamma * arg_upper(w));
    }

    cplx f(cplx z) const {
        cplx ratio = (1.0 - z) / (1.0 + z);
        return ipow(ratio, p.A) * std::exp(pow_gamma(omega(z)));
    }

    // Closed forms for the growth regime, finite where f itself overflows.
    double log_abs_f(cplx z) const {
        cplx w = omega(z);
        double m = std::abs(w);
        double re_pow = m == 0.0 ? 0.0 : std::pow(m, gamma) * std::cos(gamma * arg_upper(w));
        return p.A * std::log(std::abs((1.0 - z) / (1.0 + z))) + re_pow;
    }

    double arg_f(cplx z) const {
        cplx w = omega(z);
        double m = std::abs(w);
        double im_pow = m == 0.0 ? 0.0 : std::pow(m, gamma) * std::sin(gamma * arg_upper(w));
        return p.A * std::arg((1.0 - z) / (1.0 + z)) + im_pow;
    }

    cplx h(cplx z) const {
        double g = gtilde(psi_of(z));
        if (g == 0.0) return 0.0;
        return g * f(z);
    }

    cplx dbar_h(cplx z) const {
        double gp = gtilde_prime(psi_of(z));
        if (gp == 0.0) return 0.0;
        // dbar arg(1-z) = -i / (2 (1 - conj z))
        return f(z) * gp * cplx(0.0, -0.5) / (1.0 - std::conj(z));
    }

    // Band chart in (psi, t): z = 1 - t e^{i psi}, area element t dt dpsi.
    // The t range [0, t_max] crosses the unit circle at t = 2 cos psi and
    // continues into the tube, whose width beta/10 is measured normal to the
    // circle, hence the 1/cos psi in the chart coordinate.
    double t_cross(double psi) const { return 2.0 * std::cos(psi); }
    double t_max(double psi) const {
        return t_cross(psi) + p.tube_width() / std::cos(psi);
    }

    cplx band_point(double psi, double t) const {
        return 1.0 - t * std::polar(1.0, psi);
    }

    quad::ChartDomain band_chart() const {
        double lo = psi_lo, hi = psi_hi;
        auto self = *this;
        return {
            [self, lo, hi](double u, double v) {
                double psi = lo + u * (hi - lo);
                return self.band_point(psi, v * self.t_max(psi));
            },
            [self, lo, hi](double u, double v) {
                double psi = lo + u * (hi - lo);
                double tm = self.t_max(psi);
                return v * tm * (hi - lo) * tm;
            },
        };
    }

    quad::ChartDomain inner_chart() const {
        double lo = psi_lo, hi = psi_hi;
        auto self = *this;
        return {
            [self, lo, hi](double u, double v) {
                double psi = lo + u * (hi - lo);
                return self.band_point(psi, v * self.t_cross(psi));
            },
            [self, lo, hi](double u, double v) {
                double psi = lo + u * (hi - lo);
                double tc = self.t_cross(psi);
                return v * tc * (hi - lo) * tc;
            },
        };
    }

    quad::ChartDomain tube_chart() const {
        double lo = psi_lo, hi = psi_hi;
        auto self = *this;
        return {
            [self, lo, hi](double u, double v) {
                double psi = lo + u * (hi - lo);
                double tc = self.t_cross(psi);
                return self.band_point(psi, tc + v * (self.t_max(psi) - tc));
            },
            [self, lo, hi](double u, double v) {
                double psi = lo + u * (hi - lo);
                double tc = self.t_cross(psi);
                double wid = self.t_max(psi) - tc;
                return (tc + v * wid) * (hi - lo) * wid;
            },
        };
    }

    // Ball radius for the pole subtraction when z sits inside the dbar
    // support: half the distance to the nearest chart edge, capped.
    double subtract_radius(cplx z) const {
        double psi = psi_of(z);
        if (gtilde_prime(psi) == 0.0) return 0.0;
        double t = std::abs(1.0 - z);
        double edge = std::min(std::min((psi - psi_lo) * t, (psi_hi - psi) * t),
                               std::min(t, t_max(psi) - t));
        return std::clamp(0.5 * edge, 0.0, 0.03);
    }

    cplx h1(cplx z) const {
        potential::AreaQuadSpec spec;
        spec.n1 = p.n_psi;
        spec.n2 = p.n_t;
        spec.subtract_radius = subtract_radius(z);
        // The band is only a few thousandths wide across, so the pole ball is
        // small and the refined subcells must resolve it.
        if (spec.subtract_radius > 0.0) spec.refine_factor = 12;
        spec.refine_within = std::max(0.05, 3.0 * spec.subtract_radius);
        auto self = *this;
        return potential::cauchy_area_transform(
            [self](cplx zeta) { return 2.0 * self.dbar_h(zeta); }, band_chart(), z,
            spec);
    }

    // Harmonic extension of the boundary restriction of Im h1.  Swapping the
    // Poisson integral with the solid Cauchy integral replaces the boundary
    // kernel by the harmonic-in-z extension of zeta -> 1/(xi - zeta): that is
    // conj(z)/(1 - zeta conj z) for |zeta| < 1 and 1/(z - zeta) for
    // |zeta| > 1.  Both are smooth in zeta on their own side of the circle,
    // so the band is integrated as the in-disc piece plus the tube piece.
    double v(cplx z) const {
        quad::ChartQuadSpec inner_spec;
        inner_spec.n1 = p.n_psi;
        inner_spec.n2 = p.n_t;
        quad::ChartQuadSpec tube_spec;
        tube_spec.n1 = p.n_psi;
        tube_spec.n2 = std::max(8, p.n_t / 8);

        cplx zb = std::conj(z);
        auto self = *this;
        cplx in = quad::integrate_chart(
            [self, zb](cplx zeta) {
                return 2.0 * self.dbar_h(zeta) * zb / (1.0 - zeta * zb);
            },
            inner_chart(), inner_spec);
        cplx out = quad::integrate_chart(
            [self, z](cplx zeta) { return 2.0 * self.dbar_h(zeta) / (z - zeta); },
            tube_chart(), tube_spec);
        return ((in + out) / (2.0 * PI)).imag();
    }

    double w(cplx z) const { return v(z) + (h(z) - h1(z)).imag(); }

    double log_abs_w(cplx z) const {
        double g = gtilde(psi_of(z));
        double lf = g > 0.0 ? log_abs_f(z) : 0.0;
        if (g > 0.0 && lf > 600.0) {
            // |v| and |Im h1| are bounded by the dbar mass, hundreds of
            // e-folds below e^600; w is Im h to machine accuracy here.
            double s = std::max(std::abs(std::sin(arg_f(z))), 1e-300);
            return lf + std::log(g * s);
        }
        return std::log(std::abs(w(z)));
    }
};

// Growth probe angles: a fixed spread across the wedge arc plus approach
// rays toward 1 whose opening scales with 1 - r, where the exponential
// regime concentrates.
std::vector<double> growth_angles(const Assembly& a, double r) {
    std::vector<double> phis;
    double arc = 2.0 * (a.p.theta + a.p.beta / 3.0);
    for (int k = 0; k < 16; ++k)
        phis.push_back(2.0 * PI - arc * (k + 0.5) / 16.0);
    for (int k = 0; k < 16; ++k) {
        double chi = 0.5 * PI * (k + 0.5) / 16.0;
        double dphi = (1.0 - r) * std::tan(chi);
        if (dphi < arc) phis.push_back(2.0 * PI - dphi);
    }
    return phis;
}

}  // namespace

void validate(const WolfParams& p) {
    if (!(p.theta > 0.0 && p.theta < PI / 2))
        throw std::invalid_argument("wolf: theta must lie in (0, pi/2)");
    if (!(p.beta > 0.0 && p.beta < p.theta / 4.0))
        throw std::invalid_argument("wolf: beta must lie in (0, theta/4)");
    if (!(p.epsilon > 0.0))
        throw std::invalid_argument("wolf: epsilon must be positive");
    if (p.A < 4 || p.A % 2 != 0)
        throw std::invalid_argument("wolf: A must be an even integer >= 4");
    if (p.n_psi < 8 || p.n_t < 16)
        throw std::invalid_argument("wolf: correction grid too coarse");
}

double wolf_choose_K(const WolfParams& p) {
    validate(p);
    auto q = [&](double s) {
        cplx z = 1.0 - std::polar(s, PI / 2 - p.theta);
        return cplx(0.0, p.epsilon) * (1.0 + z) / (1.0 - z);
    };
    cplx q1 = q(0.3), q2 = q(0.6);
    cplx d = q2 - q1;
    if (std::abs(d) == 0.0)
        throw std::runtime_error("wolf_choose_K: ray image degenerated to a point");
    cplx dir = d / std::abs(d);
    cplx ray = std::polar(1.0, p.theta);
    if (std::min(std::abs(dir - ray), std::abs(dir + ray)) > 1e-6)
        throw std::runtime_error("wolf_choose_K: ray image direction is off e^{i theta}");

    // Slide the line q1 + t d through the origin with a real shift.
    double t0 = -q1.imag() / d.imag();
    double K = -(q1.real() + t0 * d.real());

    double resid = std::abs(((cplx(K, 0.0) + q(0.45)) * std::polar(1.0, -p.theta)).imag());
    if (resid > 1e-8 * std::max(1.0, p.epsilon))
        throw std::runtime_error("wolf_choose_K: third sample missed the ray by " +
                                 std::to_string(resid));
    return K;
}

exemplars::HarmonicField WolfField::as_field() const {
    exemplars::HarmonicField out;
    out.name = "wolf";
    out.region = geometry::Region::unit_disc();
    out.metadata = exemplars::Metadata::composite;
    out.regularity = exemplars::Regularity::harmonic;
    auto eval = w;
    out.eval = [eval](cplx z) { return cplx(eval(z), 0.0); };
    return out;
}

exemplars::HarmonicField WolfField::as_log_field() const {
    exemplars::HarmonicField out;
    out.name = "wolf_log";
    out.region = geometry::Region::unit_disc();
    out.metadata = exemplars::Metadata::composite;
    out.regularity = exemplars::Regularity::harmonic;
    auto eval = log_abs_w;
    out.eval = [eval](cplx z) { return cplx(eval(z), 0.0); };
    return out;
}

WolfField wolf_assemble(const WolfParams& p) {
    validate(p);
    {
        // K must already place omega on the wedge ray.
        cplx z = 1.0 - std::polar(0.5, PI / 2 - p.theta);
        cplx om = p.K + cplx(0.0, p.epsilon) * (1.0 + z) / (1.0 - z);
        if (std::abs((om * std::polar(1.0, -p.theta)).imag()) > 1e-6 * std::max(1.0, p.epsilon))
            throw std::invalid_argument("wolf_assemble: K does not place omega on the ray");
    }

    auto a = std::make_shared<Assembly>();
    a->p = p;
    a->gamma = PI / (2.0 * p.theta);
    a->psi_lo = p.band_lo();
    a->psi_hi = p.band_hi();

    WolfField out;
    out.params = p;
    out.h = [a](cplx z) { return a->h(z); };
    out.h1 = [a](cplx z) { return a->h1(z); };
    out.H = [a](cplx z) { return a->h(z) - a->h1(z); };
    out.v = [a](cplx z) { return a->v(z); };
    out.w = [a](cplx z) { return a->w(z); };
    out.log_abs_w = [a](cplx z) { return a->log_abs_w(z); };

    // Plateau arc with omega >= 0: psi >= pi/2 - theta, where f is real on
    // the circle (even power of the purely imaginary (1-z)/(1+z) times the
    // exponential of a nonnegative real power).
    for (int k = 0; k < 64; ++k) {
        double phi = 2.0 * PI - 2.0 * p.theta * (k + 0.5) / 64.0;
        out.plateau_angles.push_back(phi);
        out.plateau_im_h.push_back(a->h(std::polar(1.0, phi)).imag());
    }

    // Off-band boundary grid: everything at least one tube width of arc away
    // from the transition band, where w should vanish up to quadrature error.
    {
        double band_arc_lo = 2.0 * PI - 2.0 * (p.theta + 2.0 * p.beta / 3.0);
        double band_arc_hi = 2.0 * PI - 2.0 * (p.theta + p.beta / 3.0);
        double margin = p.tube_width();
        for (int k = 1; k < 40; ++k) {
            double phi = 2.0 * PI * k / 40.0;
            if (phi > band_arc_lo - margin && phi < band_arc_hi + margin) continue;
            cplx xi = std::polar(1.0, phi);
            out.boundary_angles.push_back(phi);
            out.boundary_w.push_back(a->w(xi) / (1.0 + std::abs(a->h(xi))));
        }
    }

    // dbar H should cancel to quadrature accuracy inside the band.  Centered
    // differences of H give dbar = (d/dx + i d/dy)/2.
    {
        double psi_mid = 0.5 * (a->psi_lo + a->psi_hi);
        double fd = 1e-4;
        for (double t : {0.8, 1.2}) {
            cplx z = a->band_point(psi_mid, t);
            auto H = [&](cplx zz) { return a->h(zz) - a->h1(zz); };
            cplx dx = (H(z + fd) - H(z - fd)) / (2.0 * fd);
            cplx dy = (H(z + cplx(0.0, fd)) - H(z - cplx(0.0, fd))) / (2.0 * fd);
            out.dbar_h_probe.push_back(std::abs(a->dbar_h(z)));
            out.dbar_residual.push_back(std::abs(0.5 * (dx + cplx(0.0, 1.0) * dy)));
        }
    }

    for (double r : {0.80, 0.85, 0.90, 0.93, 0.96, 0.98}) {
        double best = -1e300;
        for (double phi : growth_angles(*a, r))
            best = std::max(best, a->log_abs_w(std::polar(r, phi)));
        out.growth_samples.emplace_back(r, best);
    }

    // Least squares of log M_r against c0 + c1 (1-r)^(-gamma): if the
    // exponential term moves the samples by less than five e-folds, the
    // prefactor dominates the whole schedule and fits of the growth exponent
    // are meaningless at these parameters.
    {
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        int n = static_cast<int>(out.growth_samples.size());
        for (auto& [r, s] : out.growth_samples) {
            double tau = std::pow(1.0 - r, -a->gamma);
            sx += tau;
            sy += s;
            sxx += tau * tau;
            sxy += tau * s;
        }
        double c1 = (n * sxy - sx * sy) / (n * sxx - sx * sx);
        double tau_first = std::pow(1.0 - out.growth_samples.front().first, -a->gamma);
        double tau_last = std::pow(1.0 - out.growth_samples.back().first, -a->gamma);
        out.growth_regime_warning = c1 * (tau_last - tau_first) < 5.0;
    }

    return out;
}

}  // namespace hblab::wolf
