#ifndef HBLAB_BOUNDARY_HPP
#define HBLAB_BOUNDARY_HPP

#include <optional>
#include <vector>

#include "hblab/exemplars.hpp"
#include "hblab/geometry.hpp"
#include "hblab/types.hpp"

namespace hblab::boundary {

struct DecayFit {
    double exponent = 0.0;
    double r_squared = 0.0;
};

struct LimitEstimate {
    std::vector<double> values;  // one per schedule level
    double limit = 0.0;          // Richardson extrapolation from the last three
    bool converged = false;      // last three values within tolerance of limit
    std::optional<DecayFit> decay_fit;  // log-log fit of |value| vs distance
};

// How the base boundary point is approached: straight along the radius of
// e^{i phi}, or through a sector, sampling the sup of |u| over a 32-angle
// cross-section at each approach distance.
struct Approach {
    enum class Kind { radial, sector };
    Kind kind = Kind::radial;
    double phi = 0.0;            // radial: boundary angle
    geometry::SectorSpec spec{};  // sector kind only

    static Approach radial(double phi);
    static Approach sector(const geometry::SectorSpec& s);
};

struct LimitOpts {
    double tolerance = 1e-5;
};

// Schedule entries are radii r in (0,1) increasing strictly toward 1; the
// sector approach reads them as distances 1-r from the vertex.
LimitEstimate directional_limit(const exemplars::HarmonicField& u, const Approach& approach,
                                const std::vector<double>& schedule,
                                const LimitOpts& opts = {});

// Level set along which a supremum or an integral is taken.
struct Profile {
    enum class Kind { circle, hline };
    Kind kind = Kind::circle;
    double level = 0.0;                    // r, or the height beta
    double x_lo = -1.0, x_hi = 1.0;        // hline span
    double phi_lo = 0.0, phi_hi = 2.0 * PI;  // circle arc

    static Profile circle(double r);
    static Profile arc(double r, double phi_lo, double phi_hi);
    static Profile hline(double beta, double x_lo, double x_hi);
};

// Grid maximum of |u| along the profile, sharpened by three golden-section
// passes around the best grid cell.  n >= 64.
double sup_profile(const exemplars::HarmonicField& u, const Profile& p, int n);

struct GrowthFit {
    enum class Kind { power, exp_power };
    Kind kind = Kind::power;
    std::vector<double> schedule;
    std::vector<double> sup_values;  // log-scale when fitted as exp_power over a log field
    double exponent = 0.0;           // fitted m-hat
    double r_squared = 0.0;
    bool weak_fit = false;           // R^2 < 0.9, reported but not fatal
    double inner_exponent = 0.0;     // exp_power: the declared inner power
};

struct GrowthFitOpts {
    Profile::Kind profile = Profile::Kind::circle;
    double x_lo = -1.0, x_hi = 1.0;          // hline profiles
    double phi_lo = 0.0, phi_hi = 2.0 * PI;  // circle profiles
    int n = 256;                             // sup_profile grid
    double inner_exponent = 0.0;             // exp_power reference power
    // The field already evaluates log |u|; sup values are then maxima of the
    // raw values and enter the fits without another log.
    bool log_values = false;
};

/*
 * Power kind: least-squares slope of log M vs log 1/(1-r) (circles) or
 * log 1/beta (hlines).  exp_power kind: slope of log log M against the same
 * abscissa, the finite-sample estimate of the inner exponent in bounds of
 * the shape exp(c (1-r)^{-gamma}); levels with log M <= 0 are outside the
 * asymptotic regime and are dropped from that fit.
 */
GrowthFit growth_fit(const exemplars::HarmonicField& u, const std::vector<double>& schedule,
                     GrowthFit::Kind kind, const GrowthFitOpts& opts = {});

// u(z)^p divided by the area average of u^p over B(z, r), the finite-sample
// surrogate for the sub-mean-value constant.  Midpoint rule on an n x n
// polar grid.  u must be nonnegative on the samples and the closed ball must
// lie inside the field's region.
double mean_value_check(const exemplars::HarmonicField& u, double p, cplx z, double r,
                        int n);

double mean_value_max_ratio(const exemplars::HarmonicField& u, double p,
                            const std::vector<cplx>& centers, double r, int n);

struct DomarReport {
    double c_prime = 0.0;          // max over the grid of u(z) |z|^m
    double c_prime_refined = 0.0;  // same at doubled grid density
    double hypothesis_margin = 0.0;  // max of u(z) |Im z|^m / C, <= 1 when hypothesis holds
    bool stable = false;           // refinement moved c_prime by <= 0.1% of scale
    int grid_points = 0;
};

/*
 * Transfer of an axis bound u <= C |Im z|^{-m} to the radial bound
 * u <= C' |z|^{-m} for nonnegative subharmonic u around a puncture.  The
 * claimed regularity is spot-checked by a discrete Laplacian near the real
 * axis before anything else runs; fields that are merely reflections of an
 * axis blow-up fail that stencil and are rejected.
 */
DomarReport domar_transfer_check(const exemplars::HarmonicField& u, double m, double C,
                                 const geometry::GridSpec& grid);

struct L1Profile {
    std::vector<double> schedule;
    std::vector<double> integrals;
    double sup = 0.0;
    bool divergent = false;        // halving the step at the last level moved it > 10%
    bool unbounded_trend = false;  // integrals still climbing at the end of the schedule
};

struct L1Opts {
    double x_lo = -1.0, x_hi = 1.0;  // hline span
    int n = 1024;                    // midpoint cells per level
};

// sup over the schedule of the line integral of g along circles (d phi) or
// horizontal lines (d alpha).  g must be nonnegative on the samples.
L1Profile l1_bound_profile(const exemplars::HarmonicField& g, Profile::Kind kind,
                           const std::vector<double>& schedule, const L1Opts& opts = {});

}  // namespace hblab::boundary

#endif
