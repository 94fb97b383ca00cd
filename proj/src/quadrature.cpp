#include "hblab/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace hblab::quad {

namespace {

/*
 * Gauss(7)/Kronrod(15) node and weight table on [-1, 1].  Nodes are the
 * positive abscissae; the rule is symmetric.  Odd-index nodes coincide with
 * the embedded 7-point Gauss rule.
 */
const double XGK[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.000000000000000};
const double WGK[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
const double WG[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469};

struct PanelResult {
    cplx value;
    double error;
};

PanelResult gk15(const std::function<cplx(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    cplx kron = WGK[7] * f(c);
    cplx gauss = WG[3] * f(c);
    for (int i = 0; i < 7; ++i) {
        const cplx lo = f(c - h * XGK[i]);
        const cplx hi = f(c + h * XGK[i]);
        kron += WGK[i] * (lo + hi);
        if (i % 2 == 1) gauss += WG[i / 2] * (lo + hi);
    }
    kron *= h;
    gauss *= h;
    return {kron, std::abs(kron - gauss)};
}

struct Panel {
    double a, b;
    cplx value;
    double error;
};

struct PanelLess {
    bool operator()(const Panel& x, const Panel& y) const { return x.error < y.error; }
};

}  // namespace

/*
 * Globally adaptive rule: always bisect the panel with the worst error
 * estimate, so graded meshes form around cusps without over-resolving the
 * smooth remainder.  Panels narrower than (b-a)/2^max_depth freeze at their
 * current estimate; the final check is on the summed error.
 */
cplx integrate(const std::function<cplx(double)>& f, double a, double b,
               double abs_tol, int max_depth) {
    if (a == b) return 0.0;
    const double min_width = std::abs(b - a) * std::ldexp(1.0, -max_depth);

    std::vector<Panel> active, frozen;
    double err_total = 0.0;
    auto push = [&](double lo, double hi) {
        const PanelResult r = gk15(f, lo, hi);
        active.push_back({lo, hi, r.value, r.error});
        std::push_heap(active.begin(), active.end(), PanelLess{});
        err_total += r.error;
    };
    push(a, b);

    int splits = 0;
    while (err_total > abs_tol && !active.empty() && splits < 60000) {
        std::pop_heap(active.begin(), active.end(), PanelLess{});
        const Panel worst = active.back();
        active.pop_back();
        if (!(worst.b - worst.a > min_width)) {
            frozen.push_back(worst);
            continue;
        }
        err_total -= worst.error;
        const double mid = 0.5 * (worst.a + worst.b);
        push(worst.a, mid);
        push(mid, worst.b);
        ++splits;
    }

    if (!(err_total <= 10.0 * abs_tol))
        throw QuadratureError("adaptive quadrature: estimated error " +
                              std::to_string(err_total) + " exceeds tolerance " +
                              std::to_string(abs_tol));
    cplx total = 0.0;
    for (const auto& p : frozen) total += p.value;
    for (const auto& p : active) total += p.value;
    return total;
}

double integrate_real(const std::function<double(double)>& f, double a, double b,
                      double abs_tol, int max_depth) {
    return integrate([&f](double t) { return cplx(f(t), 0.0); }, a, b, abs_tol,
                     max_depth)
        .real();
}

namespace {

// One panel [a, b] whose only blow-up sits at the endpoint `sing_at` with
// exponent beta in [0, 1).  Substituting distance = s^(1/(1-beta)) makes the
// integrand bounded; the rule never evaluates at s = 0.
cplx weakened_panel(const std::function<cplx(double)>& f, double a, double b,
                    double sing_at, double beta, double abs_tol) {
    if (beta <= 0.0) return integrate(f, a, b, abs_tol);
    const double len = b - a;
    if (len <= 0.0) return 0.0;
    const double p = 1.0 / (1.0 - beta);
    const double smax = std::pow(len, 1.0 - beta);
    const double sign = (sing_at <= a) ? 1.0 : -1.0;
    const double origin = (sing_at <= a) ? a : b;
    // Keep evaluation points a few ulps clear of the singular abscissa, or
    // rounding can land exactly on the pole.
    const double min_dist =
        4.0 * std::abs(origin) * std::numeric_limits<double>::epsilon();
    auto g = [&](double s) {
        const double dist = std::max(std::pow(s, p), min_dist);
        return f(origin + sign * dist) * (p * std::pow(s, p - 1.0));
    };
    return integrate(g, 0.0, smax, abs_tol);
}

}  // namespace

cplx integrate_singular(const std::function<cplx(double)>& f, double a, double b,
                        const std::vector<IntervalSingularity>& singularities,
                        double abs_tol) {
    std::vector<IntervalSingularity> sing;
    for (const auto& s : singularities) {
        if (s.exponent >= 1.0)
            throw std::domain_error("integrate_singular: non-integrable exponent");
        if (s.location >= a - 1e-14 && s.location <= b + 1e-14) sing.push_back(s);
    }
    if (sing.empty()) return integrate(f, a, b, abs_tol);
    std::sort(sing.begin(), sing.end(),
              [](const auto& x, const auto& y) { return x.location < y.location; });

    // Coincident split points (a declared singularity doubling as a panel
    // break) must collapse to one entry, keeping the stronger exponent.
    const double merge_eps = 1e-12 * (b - a);
    std::vector<IntervalSingularity> merged;
    for (const auto& s : sing) {
        if (!merged.empty() && s.location - merged.back().location < merge_eps)
            merged.back().exponent = std::max(merged.back().exponent, s.exponent);
        else
            merged.push_back(s);
    }
    sing.swap(merged);

    const double share = abs_tol / static_cast<double>(2 * sing.size() + 1);
    cplx total = 0.0;
    double left = a;
    for (const auto& s : sing) {
        const double c = std::clamp(s.location, a, b);
        if (c > left) {
            // Panel ending at the singular point.
            const double mid = std::max(left, c - 0.5 * (c - left));
            total += integrate(f, left, mid, share);
            total += weakened_panel(f, mid, c, c, s.exponent, share);
        }
        // Panel starting at the singular point, up to the next split.
        double right = b;
        for (const auto& t : sing)
            if (t.location > c) { right = std::min(right, 0.5 * (c + t.location)); break; }
        if (right > c) {
            const double mid = std::min(right, c + 0.5 * (right - c));
            total += weakened_panel(f, c, mid, c, s.exponent, share);
            left = mid;
        } else {
            left = c;
        }
    }
    if (b > left) total += integrate(f, left, b, share);
    return total;
}

double integrate_real_line(const std::function<double(double)>& f,
                           double halfwidth, double abs_tol) {
    const double A = std::max(halfwidth, 1e-8);
    const double share = abs_tol / 3.0;
    double total = integrate_real(f, -A, A, share);
    auto tail = [&f](double s) {
        const double t = 1.0 / s;
        return (f(t) + f(-t)) * t * t;
    };
    total += integrate_real(tail, 0.0, 1.0 / A, share);
    return total;
}

namespace {

const double GL2 = 0.28867513459481287;  // 1/(2*sqrt(3))

cplx cell_gauss(const std::function<cplx(cplx)>& G, const ChartDomain& dom,
                double u0, double v0, double h1, double h2) {
    cplx acc = 0.0;
    for (int a = 0; a < 2; ++a) {
        const double u = u0 + h1 * (0.5 + (a == 0 ? -GL2 : GL2));
        for (int b = 0; b < 2; ++b) {
            const double v = v0 + h2 * (0.5 + (b == 0 ? -GL2 : GL2));
            acc += G(dom.map(u, v)) * dom.jac(u, v);
        }
    }
    return acc * (0.25 * h1 * h2);
}

}  // namespace

cplx integrate_chart(const std::function<cplx(cplx)>& G, const ChartDomain& dom,
                     const ChartQuadSpec& spec) {
    const double h1 = 1.0 / spec.n1;
    const double h2 = 1.0 / spec.n2;
    cplx total = 0.0;
    for (int i = 0; i < spec.n1; ++i) {
        const double u0 = i * h1;
        for (int j = 0; j < spec.n2; ++j) {
            const double v0 = j * h2;
            bool refine = false;
            if (spec.refine_within > 0.0) {
                const cplx center = dom.map(u0 + 0.5 * h1, v0 + 0.5 * h2);
                const cplx corner = dom.map(u0, v0);
                const double reach = spec.refine_within + 2.0 * std::abs(center - corner);
                refine = std::abs(center - spec.refine_near) < reach;
            }
            if (!refine) {
                total += cell_gauss(G, dom, u0, v0, h1, h2);
            } else {
                const int m = std::max(2, spec.refine_factor);
                const double g1 = h1 / m;
                const double g2 = h2 / m;
                for (int p = 0; p < m; ++p)
                    for (int q = 0; q < m; ++q)
                        total += cell_gauss(G, dom, u0 + p * g1, v0 + q * g2, g1, g2);
            }
        }
    }
    return total;
}

double smoothstep5(double x) {
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    return x * x * x * (10.0 + x * (-15.0 + 6.0 * x));
}

}  // namespace hblab::quad
