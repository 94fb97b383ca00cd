#include "hblab/geometry.hpp"

#include <cmath>
#include <random>

namespace hblab::geometry {

Region Region::unit_disc() {
    Region r;
    r.kind = Kind::unit_disc;
    return r;
}

Region Region::rectangle(double x_lo, double x_hi, double y_lo, double y_hi) {
    if (!(x_lo < x_hi) || !(y_lo < y_hi))
        throw std::invalid_argument("Region::rectangle: degenerate extents");
    Region r;
    r.kind = Kind::rectangle;
    r.x_lo = x_lo;
    r.x_hi = x_hi;
    r.y_lo = y_lo;
    r.y_hi = y_hi;
    return r;
}

Region Region::quadrant() {
    Region r;
    r.kind = Kind::quadrant;
    return r;
}

Region Region::finite_sector(double theta, double rho) {
    if (!(theta > 0.0) || !(theta < 2.0 * PI) || !(rho > 0.0))
        throw std::invalid_argument("Region::finite_sector: need 0 < theta < 2 pi, rho > 0");
    Region r;
    r.kind = Kind::finite_sector;
    r.theta = theta;
    r.rho = rho;
    return r;
}

Region Region::punctured_disc(double rho) {
    if (!(rho > 0.0))
        throw std::invalid_argument("Region::punctured_disc: need rho > 0");
    Region r;
    r.kind = Kind::punctured_disc;
    r.rho = rho;
    return r;
}

bool Region::contains(cplx z) const {
    switch (kind) {
        case Kind::unit_disc:
            return std::abs(z) < 1.0;
        case Kind::rectangle:
            return z.real() > x_lo && z.real() < x_hi && z.imag() > y_lo && z.imag() < y_hi;
        case Kind::quadrant:
            return z.real() > 0.0 && z.imag() > 0.0;
        case Kind::finite_sector: {
            const double a = std::arg(z);
            return std::abs(z) > 0.0 && std::abs(z) < rho && a > 0.0 && a < theta;
        }
        case Kind::punctured_disc:
            return std::abs(z) > 0.0 && std::abs(z) < rho;
    }
    return false;
}

SectorSpec SectorSpec::stolz(double phi, double theta) {
    if (!(theta > 0.0) || !(theta < 0.5 * PI))
        throw std::invalid_argument("SectorSpec::stolz: need theta in (0, pi/2)");
    SectorSpec s;
    s.kind = Kind::stolz;
    s.phi = phi;
    s.theta = theta;
    return s;
}

SectorSpec SectorSpec::upper(double alpha, double theta) {
    if (!(theta > 0.0) || !(theta < 0.5 * PI))
        throw std::invalid_argument("SectorSpec::upper: need theta in (0, pi/2)");
    SectorSpec s;
    s.kind = Kind::upper;
    s.alpha = alpha;
    s.theta = theta;
    return s;
}

bool in_sector(cplx z, const SectorSpec& s) {
    if (s.kind == SectorSpec::Kind::stolz) {
        if (std::abs(z) >= 1.0) return false;
        const cplx w = 1.0 - std::exp(cplx(0.0, -s.phi)) * z;
        return std::abs(std::arg(w)) <= 0.5 * PI - s.theta;
    }
    const double a = std::arg(z - s.alpha);
    return a > s.theta && a < PI - s.theta;
}

namespace {

void validate_grid(const Region& r, const GridSpec& g) {
    if (g.schedule.empty())
        throw std::invalid_argument("sample_grid: empty schedule");
    if (g.n < 8)
        throw std::invalid_argument("sample_grid: need n >= 8");
    for (double v : g.schedule) {
        bool ok = false;
        switch (r.kind) {
            case Region::Kind::unit_disc: ok = v > 0.0 && v < 1.0; break;
            case Region::Kind::rectangle: ok = v > r.y_lo && v < r.y_hi; break;
            case Region::Kind::quadrant: ok = v > 0.0; break;
            case Region::Kind::finite_sector: ok = v > 0.0 && v < r.rho; break;
            case Region::Kind::punctured_disc: ok = v > 0.0 && v < r.rho; break;
        }
        if (!ok)
            throw std::invalid_argument("sample_grid: schedule value outside the region");
    }
}

}  // namespace

std::vector<cplx> sample_grid(const Region& r, const GridSpec& g) {
    validate_grid(r, g);
    std::mt19937 rng(g.jitter_seed.value_or(0));
    std::uniform_real_distribution<double> unit(-0.3, 0.3);
    const bool jitter = g.jitter_seed.has_value();

    std::vector<cplx> pts;
    pts.reserve(g.schedule.size() * g.n);
    for (double level : g.schedule) {
        for (int k = 0; k < g.n; ++k) {
            switch (r.kind) {
                case Region::Kind::unit_disc:
                case Region::Kind::punctured_disc: {
                    double phi = 2.0 * PI * k / g.n;
                    if (jitter) phi += unit(rng) * (2.0 * PI / g.n);
                    pts.push_back(level * std::exp(cplx(0.0, phi)));
                    break;
                }
                case Region::Kind::rectangle: {
                    const double step = (r.x_hi - r.x_lo) / (g.n + 1);
                    double x = r.x_lo + (k + 1) * step;
                    if (jitter) x += unit(rng) * step;
                    pts.push_back(cplx(x, level));
                    break;
                }
                case Region::Kind::quadrant:
                case Region::Kind::finite_sector: {
                    const double opening = (r.kind == Region::Kind::quadrant) ? 0.5 * PI : r.theta;
                    const double step = opening / (g.n + 1);
                    double phi = (k + 1) * step;
                    if (jitter) phi += unit(rng) * step;
                    pts.push_back(level * std::exp(cplx(0.0, phi)));
                    break;
                }
            }
        }
    }
    return pts;
}

cplx strip_exp_map(cplx z, double theta) {
    return std::exp(cplx(0.0, 2.0 * PI) * (z + theta));
}

cplx quadrant_to_disc(cplx z) {
    if (z.real() < 0.0 || z.imag() < 0.0)
        throw std::domain_error("quadrant_to_disc: point outside the closed quadrant");
    const cplx z2 = z * z;
    return (z2 - cplx(0.0, 1.0)) / (z2 + cplx(0.0, 1.0));
}

}  // namespace hblab::geometry
