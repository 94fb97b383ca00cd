#include "hblab/potential.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hblab::potential {

namespace {

double wrap_angle(double phi) {
    double w = std::fmod(phi, 2.0 * PI);
    if (w < 0.0) w += 2.0 * PI;
    return w;
}

}  // namespace

double poisson_kernel_disc(double r, double phi, DiscKernelForm form) {
    if (r < 0.0 || r >= 1.0)
        throw std::domain_error("poisson_kernel_disc: need 0 <= r < 1");
    double denom = 1.0 - 2.0 * r * std::cos(phi) + r * r;
    double value = (1.0 - r * r) / denom;
    return form == DiscKernelForm::half_sum ? 0.5 * value : value;
}

double poisson_kernel_halfplane(cplx z) {
    if (z.imag() <= 0.0)
        throw std::domain_error("poisson_kernel_halfplane: need Im z > 0");
    return z.imag() / (PI * std::norm(z));
}

double halfplane_kernel_mass(double beta, double abs_tol) {
    auto kernel = [beta](double alpha) {
        return poisson_kernel_halfplane(cplx(alpha, beta));
    };
    return quad::integrate_real_line(kernel, 50.0 * beta, abs_tol);
}

cplx poisson_integral_disc(const BoundaryFunction& h, cplx z, const PoissonOpts& opts) {
    double r = std::abs(z);
    if (r >= 1.0)
        throw std::domain_error("poisson_integral_disc: z must be interior");

    // The window starts at the first declared singular angle, so each
    // blow-up sits on a marked split instead of wrapping into a plain panel.
    // The kernel peak gets a zero-exponent mark, a bare panel break.
    std::vector<quad::IntervalSingularity> marks;
    for (const auto& s : h.singularities)
        marks.push_back({wrap_angle(s.location), s.exponent});
    std::sort(marks.begin(), marks.end(),
              [](const auto& x, const auto& y) { return x.location < y.location; });
    double base = 0.0;
    if (!marks.empty()) {
        base = marks.front().location;
        marks.push_back({base + 2.0 * PI, marks.front().exponent});
    }
    if (r > 0.5) {
        double peak = wrap_angle(std::arg(z));
        if (peak < base) peak += 2.0 * PI;
        marks.push_back({peak, 0.0});
    }

    double nz = std::norm(z);
    auto integrand = [&](double phi) {
        cplx xi(std::cos(phi), std::sin(phi));
        double kernel = (1.0 - nz) / std::norm(z - xi);
        return h.eval(phi >= 2.0 * PI ? phi - 2.0 * PI : phi) * kernel;
    };
    cplx total =
        quad::integrate_singular(integrand, base, base + 2.0 * PI, marks, opts.abs_tol);
    return total / (2.0 * PI);
}

cplx poisson_integral_quadrant(const QuadrantBoundary& h, cplx z, const PoissonOpts& opts) {
    if (z.real() <= 0.0 || z.imag() <= 0.0)
        throw std::domain_error("poisson_integral_quadrant: z must be in the open quadrant");

    if (h.corner_exponent < 0.0 || h.corner_exponent >= 2.0)
        throw std::invalid_argument(
            "poisson_integral_quadrant: corner exponent must lie in [0, 2)");

    // z |-> (z^2 - i)/(z^2 + i) sends the quadrant onto the disc.  On the
    // circle, s = -cot(phi/2) recovers the squared edge variable: phi in
    // (0,pi) covers the imaginary edge, phi in (pi,2pi) the real one, and
    // phi = pi is the corner.  The edge variable behaves like a square root
    // of the angle near the corner and infinity images, so both angles get
    // at least an exponent-1/2 substitution even for bounded data.
    BoundaryFunction pulled;
    pulled.eval = [&h](double phi) -> cplx {
        double c = -1.0 / std::tan(0.5 * phi);
        if (phi < PI) return h.imag_edge(std::sqrt(-c));
        return h.real_edge(std::sqrt(c));
    };
    pulled.singularities.push_back({PI, std::max(0.5 * h.corner_exponent, 0.5)});
    pulled.singularities.push_back({0.0, 0.5});

    return poisson_integral_disc(pulled, geometry::quadrant_to_disc(z), opts);
}

namespace {

// sinh(a)/sinh(b) for 0 <= a <= b without overflow.
double sinh_ratio(double a, double b) {
    return std::exp(a - b) * (1.0 - std::exp(-2.0 * a)) / (1.0 - std::exp(-2.0 * b));
}

}  // namespace

RectangleDirichlet::RectangleDirichlet(const geometry::Region& rect, Side side,
                                       SideData data, int terms) {
    if (rect.kind != geometry::Region::Kind::rectangle)
        throw std::invalid_argument("RectangleDirichlet: region must be a rectangle");
    if (terms < 1)
        throw std::invalid_argument("RectangleDirichlet: need at least one term");

    x_lo_ = rect.x_lo;
    x_hi_ = rect.x_hi;
    y_lo_ = rect.y_lo;
    y_hi_ = rect.y_hi;
    side_ = side;

    bool horizontal = (side == Side::bottom || side == Side::top);
    tan_len_ = horizontal ? x_hi_ - x_lo_ : y_hi_ - y_lo_;
    trans_len_ = horizontal ? y_hi_ - y_lo_ : x_hi_ - x_lo_;

    coef_.resize(terms);
    double L = tan_len_;
    for (int n = 1; n <= terms; ++n) {
        auto integrand = [&data, n, L](double s) {
            return data.eval(s) * std::sin(n * PI * s / L);
        };
        cplx c = quad::integrate_singular(integrand, 0.0, L, data.singularities, 1e-12);
        coef_[n - 1] = 2.0 / L * c.real();
    }
    coef_scale_ = 0.0;
    for (double c : coef_) coef_scale_ = std::max(coef_scale_, std::abs(c));
}

void RectangleDirichlet::local_coords(cplx z, double& s, double& d) const {
    switch (side_) {
        case Side::bottom: s = z.real() - x_lo_; d = z.imag() - y_lo_; break;
        case Side::top:    s = z.real() - x_lo_; d = y_hi_ - z.imag(); break;
        case Side::left:   s = z.imag() - y_lo_; d = z.real() - x_lo_; break;
        case Side::right:  s = z.imag() - y_lo_; d = x_hi_ - z.real(); break;
    }
}

double RectangleDirichlet::coefficient(int n) const {
    if (n < 1 || n > static_cast<int>(coef_.size()))
        throw std::out_of_range("RectangleDirichlet::coefficient");
    return coef_[n - 1];
}

double RectangleDirichlet::eval(cplx z, double tolerance) const {
    double s = 0.0, d = 0.0;
    local_coords(z, s, d);
    if (s < 0.0 || s > tan_len_ || d < 0.0 || d > trans_len_)
        throw std::domain_error("RectangleDirichlet::eval: point outside the rectangle");

    int N = static_cast<int>(coef_.size());
    double q = PI * d / tan_len_;
    if (d > 0.0) {
        double decay = std::exp(-q);
        double tail = coef_scale_ * std::pow(decay, N + 1) / (1.0 - decay);
        if (tail > tolerance)
            throw TruncationError("RectangleDirichlet::eval: series tail " +
                                  std::to_string(tail) + " exceeds tolerance at depth " +
                                  std::to_string(d));
    }

    double total = 0.0;
    for (int n = N; n >= 1; --n) {
        double a = n * PI * (trans_len_ - d) / tan_len_;
        double b = n * PI * trans_len_ / tan_len_;
        total += coef_[n - 1] * std::sin(n * PI * s / tan_len_) * sinh_ratio(a, b);
    }
    return total;
}

double dirichlet_rectangle(const geometry::Region& rect,
                           const std::array<SideData, 4>& sides, cplx z, int terms,
                           double tolerance) {
    static const Side order[4] = {Side::bottom, Side::right, Side::top, Side::left};
    double total = 0.0;
    for (int k = 0; k < 4; ++k) {
        if (!sides[k].eval) continue;
        RectangleDirichlet solver(rect, order[k], sides[k], terms);
        total += solver.eval(z, tolerance);
    }
    return total;
}

quad::ChartDomain disc_chart(double radius) {
    quad::ChartDomain dom;
    dom.map = [radius](double s, double t) {
        double ang = 2.0 * PI * t;
        return radius * s * cplx(std::cos(ang), std::sin(ang));
    };
    dom.jac = [radius](double s, double) { return 2.0 * PI * radius * radius * s; };
    return dom;
}

cplx cauchy_area_transform(const std::function<cplx(cplx)>& F,
                           const quad::ChartDomain& dom, cplx z,
                           const AreaQuadSpec& spec) {
    double delta = spec.subtract_radius;
    cplx Fz = delta > 0.0 ? F(z) : cplx(0.0);

    auto G = [&](cplx zeta) -> cplx {
        cplx diff = z - zeta;
        double dist = std::abs(diff);
        if (dist < 1e-14) return cplx(0.0);
        cplx val = F(zeta);
        if (delta > 0.0 && dist < delta)
            val -= Fz * (1.0 - quad::smoothstep5(dist / delta));
        return val / diff;
    };

    quad::ChartQuadSpec qs;
    qs.n1 = spec.n1;
    qs.n2 = spec.n2;
    qs.refine_near = z;
    qs.refine_within = spec.refine_within > 0.0 ? spec.refine_within : 3.0 * delta;
    qs.refine_factor = spec.refine_factor;
    return quad::integrate_chart(G, dom, qs) / (2.0 * PI);
}

ExpansionCoefficients singularity_expansion(const std::function<double(cplx)>& u,
                                            double rho1, double rho2, int m,
                                            const ExpansionOpts& opts) {
    if (!(0.0 < rho1 && rho1 < rho2))
        throw std::invalid_argument("singularity_expansion: need 0 < rho1 < rho2");
    if (rho1 / rho2 > 0.95)
        throw std::invalid_argument(
            "singularity_expansion: sample circles too close, radial solve ill-conditioned");
    if (m < 0) throw std::invalid_argument("singularity_expansion: negative order");
    int N = opts.n_angles;
    if (m > 0 && N < 4 * m)
        throw std::invalid_argument(
            "singularity_expansion: n_angles must be at least 4x the order to avoid aliasing");
    if (N < 8) throw std::invalid_argument("singularity_expansion: n_angles too small");

    // Fourier modes on each circle.
    std::array<double, 2> radii = {rho1, rho2};
    std::array<std::vector<double>, 2> cosm, sinm;
    std::array<double, 2> mean = {0.0, 0.0};
    std::array<std::vector<double>, 2> samples;
    for (int c = 0; c < 2; ++c) {
        cosm[c].assign(m + 1, 0.0);
        sinm[c].assign(m + 1, 0.0);
        samples[c].resize(N);
        double r = radii[c];
        for (int j = 0; j < N; ++j) {
            double phi = 2.0 * PI * j / N;
            double val = u(r * cplx(std::cos(phi), std::sin(phi)));
            samples[c][j] = val;
            mean[c] += val;
            for (int k = 1; k <= m; ++k) {
                cosm[c][k] += val * std::cos(k * phi);
                sinm[c][k] += val * std::sin(k * phi);
            }
        }
        mean[c] /= N;
        for (int k = 1; k <= m; ++k) {
            cosm[c][k] *= 2.0 / N;
            sinm[c][k] *= 2.0 / N;
        }
    }

    ExpansionCoefficients out;

    // Mean channel: mu(r) = constant + a log r.
    double dl = std::log(rho2) - std::log(rho1);
    out.log_coefficient = (mean[1] - mean[0]) / dl;
    out.constant_term = mean[0] - out.log_coefficient * std::log(rho1);

    // Each oscillatory mode splits as c+ r^k + c- r^-k; the r^-k part is the
    // singular one.  Solving the 2x2 against the larger radius first keeps
    // the arithmetic scale tame.
    out.a_neg.resize(m);
    out.b_neg.resize(m);
    for (int k = 1; k <= m; ++k) {
        double p1 = std::pow(rho1, k), q1 = std::pow(rho1, -k);
        double p2 = std::pow(rho2, k), q2 = std::pow(rho2, -k);
        double det = p1 * q2 - q1 * p2;
        double cneg = (p1 * cosm[1][k] - p2 * cosm[0][k]) / det;
        double dneg = (p1 * sinm[1][k] - p2 * sinm[0][k]) / det;
        // u's r^-k cos(k phi) content equals a_{-k}; its r^-k sin(k phi)
        // content equals -b_{-k} in the signed-index convention.
        out.a_neg[k - 1] = cneg;
        out.b_neg[k - 1] = -dneg;
    }

    // Remainder on the inner circle, singular part subtracted.
    double sup = 0.0;
    for (int j = 0; j < N; ++j) {
        double phi = 2.0 * PI * j / N;
        double sing = out.log_coefficient * std::log(rho1);
        for (int k = 1; k <= m; ++k) {
            double rk = std::pow(rho1, -k);
            sing += rk * (out.a_neg[k - 1] * std::cos(k * phi) -
                          out.b_neg[k - 1] * std::sin(k * phi));
        }
        sup = std::max(sup, std::abs(samples[0][j] - sing));
    }
    out.remainder_sup = sup;
    return out;
}

}  // namespace hblab::potential
