#ifndef HBLAB_GEOMETRY_HPP
#define HBLAB_GEOMETRY_HPP

#include <optional>
#include <vector>

#include "hblab/types.hpp"

namespace hblab::geometry {

// Planar domains the analyzers run on.  Angles are radians; the quadrant is
// {Re z > 0, Im z > 0}; finite_sector is {0 < arg z < theta, |z| < rho};
// punctured_disc is {0 < |z| < rho}.
struct Region {
    enum class Kind { unit_disc, rectangle, quadrant, finite_sector, punctured_disc };

    Kind kind = Kind::unit_disc;
    double x_lo = 0, x_hi = 0, y_lo = 0, y_hi = 0;  // rectangle only
    double theta = 0;                               // finite_sector only
    double rho = 0;                                 // finite_sector, punctured_disc

    static Region unit_disc();
    static Region rectangle(double x_lo, double x_hi, double y_lo, double y_hi);
    static Region quadrant();
    static Region finite_sector(double theta, double rho);
    static Region punctured_disc(double rho);

    // Open-set membership.
    bool contains(cplx z) const;
};

// Approach sector for boundary limits.
//  stolz(phi, theta):  {z in D : |arg(1 - exp(-i phi) z)| <= pi/2 - theta},
//                      endpoints included.
//  upper(alpha, theta): {z : theta < arg(z - alpha) < pi - theta}, strict.
struct SectorSpec {
    enum class Kind { stolz, upper };
    Kind kind;
    double phi = 0;    // stolz: boundary angle of the vertex exp(i phi)
    double alpha = 0;  // upper: base point on the real axis
    double theta = 0;  // aperture parameter in (0, pi/2)

    static SectorSpec stolz(double phi, double theta);
    static SectorSpec upper(double alpha, double theta);
};

bool in_sector(cplx z, const SectorSpec& s);

// Deterministic sampling lattice.  The schedule carries the approach
// parameter (radii for circular regions, Im z levels for rectangles); n points
// are placed per schedule level.  With jitter_seed set, points are perturbed
// tangentially inside their own cell, so each point stays on its level and
// strictly inside the region.
struct GridSpec {
    std::vector<double> schedule;
    int n = 64;
    std::optional<unsigned> jitter_seed;
};

std::vector<cplx> sample_grid(const Region& r, const GridSpec& g);

// exp(2 pi i (z + theta)): takes the rectangle (-1,1)x(0,1) onto an annulus
// with a slit, the standard periodizing map for strip problems.
cplx strip_exp_map(cplx z, double theta);

// (z^2 - i)/(z^2 + i): conformal from the open quadrant onto the unit disc.
// Accepts the closed quadrant (boundary maps to the unit circle); anything
// else is a domain error.
cplx quadrant_to_disc(cplx z);

}  // namespace hblab::geometry

#endif
