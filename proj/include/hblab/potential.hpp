#ifndef HBLAB_POTENTIAL_HPP
#define HBLAB_POTENTIAL_HPP

#include <array>
#include <functional>
#include <vector>

#include "hblab/geometry.hpp"
#include "hblab/quadrature.hpp"
#include "hblab/types.hpp"

namespace hblab::potential {

// Boundary data on the unit circle, parameterized by angle.  Declared
// singular angles are integrated by substitution instead of brute force.
struct BoundaryFunction {
    std::function<cplx(double)> eval;
    std::vector<quad::IntervalSingularity> singularities;
};

// Boundary data on the quadrant edges.  real_edge(t) is the value at z = t,
// imag_edge(t) the value at z = i t, t > 0.  corner_exponent declares a
// |z|^(-beta) blow-up at the corner; data must decay toward infinity.
struct QuadrantBoundary {
    std::function<cplx(double)> real_edge;
    std::function<cplx(double)> imag_edge;
    double corner_exponent = 0.0;
};

// half_sum is (1/2)(1-r^2)/(1-2r cos phi+r^2), the form whose angular
// derivative the sliding-kernel exemplar uses; standard drops the 1/2.
enum class DiscKernelForm { half_sum, standard };

double poisson_kernel_disc(double r, double phi,
                           DiscKernelForm form = DiscKernelForm::half_sum);

// beta/(pi (alpha^2+beta^2)) at z = alpha + i beta, beta > 0.  Unit mass on
// the real line.
double poisson_kernel_halfplane(cplx z);

// Quadrature check of that unit mass, done entirely by adaptive rules (core
// window plus inverted tails), no closed-form shortcuts.
double halfplane_kernel_mass(double beta, double abs_tol = 1e-9);

struct PoissonOpts {
    double abs_tol = 1e-9;
};

// (1/2pi) int h(e^{i phi}) (1-|z|^2)/|z - e^{i phi}|^2 dphi, |z| < 1.
cplx poisson_integral_disc(const BoundaryFunction& h, cplx z,
                           const PoissonOpts& opts = {});

// Harmonic extension on the quadrant via the conformal pull-back to the
// disc; the declared corner exponent halves under the pull-back (the corner
// opening is pi/2).
cplx poisson_integral_quadrant(const QuadrantBoundary& h, cplx z,
                               const PoissonOpts& opts = {});

// Rectangle Dirichlet problem, one data side at a time.  The solution is the
// sine series in the tangential coordinate with sinh-ratio transverse
// factors; no conformal mapping is involved.
enum class Side { bottom, right, top, left };

struct SideData {
    std::function<double(double)> eval;  // tangential coordinate from the side's low corner
    std::vector<quad::IntervalSingularity> singularities;
};

class RectangleDirichlet {
  public:
    RectangleDirichlet(const geometry::Region& rect, Side side, SideData data, int terms);

    // Value at an interior point.  Throws TruncationError when the series
    // tail bound at z exceeds `tolerance`.
    double eval(cplx z, double tolerance = 1e-8) const;

    double coefficient(int n) const;  // 1-based sine coefficient
    int terms() const { return static_cast<int>(coef_.size()); }

  private:
    double x_lo_, x_hi_, y_lo_, y_hi_;
    Side side_;
    double tan_len_, trans_len_;
    std::vector<double> coef_;
    double coef_scale_;

    void local_coords(cplx z, double& s, double& d) const;
};

double dirichlet_rectangle(const geometry::Region& rect,
                           const std::array<SideData, 4>& sides, cplx z, int terms,
                           double tolerance = 1e-8);

/*
 * Solid Cauchy transform  (1/2pi) iint F(zeta)/(z - zeta) dm2(zeta)  over a
 * chart-described bounded domain.  With this constant the transform inverts
 * d/d(zbar) up to a factor 1/2: differentiating the result returns F/2.  The
 * factor is validated by a finite-difference property test; callers that
 * need an exact dbar-primitive must feed 2F.
 *
 * The Cauchy pole at zeta = z is removed by subtracting
 * F(z) * bump(|zeta - z|/delta) / (z - zeta), whose exact integral vanishes
 * by radial symmetry whenever the delta-ball around z lies inside the
 * domain; callers with z near the domain edge must shrink subtract_radius
 * accordingly.
 */
struct AreaQuadSpec {
    int n1 = 128;
    int n2 = 128;
    double subtract_radius = 0.03;
    double refine_within = 0.0;  // 0 selects 3 * subtract_radius
    int refine_factor = 4;
};

cplx cauchy_area_transform(const std::function<cplx(cplx)>& F,
                           const quad::ChartDomain& dom, cplx z,
                           const AreaQuadSpec& spec = {});

quad::ChartDomain disc_chart(double radius);

/*
 * Fit of the blow-up part of a function harmonic in an annulus around an
 * isolated singularity at 0:
 *
 *   u = a log r + sum_{k=1..m} r^-k (A_k cos k phi + B_k sin k phi) + w0,
 *
 * where w0 is bounded.  In the signed-index convention used by callers the
 * series reads sum_{n=-m}^{-1} (a_n r^n cos n phi + b_n r^n sin n phi), so
 * a_{-k} = A_k and b_{-k} = -B_k; accessors return the signed-index values.
 * Modes are separated on two sample circles and matched by per-mode 2x2
 * solves ((1, log r) for the mean).
 */
struct ExpansionCoefficients {
    double log_coefficient = 0.0;  // a
    double constant_term = 0.0;    // bounded-part mean
    std::vector<double> a_neg;     // a_neg[k-1] = a_{-k}
    std::vector<double> b_neg;     // b_neg[k-1] = b_{-k}
    double remainder_sup = 0.0;    // sup of |u - singular part| on r = rho1
};

struct ExpansionOpts {
    int n_angles = 256;
};

ExpansionCoefficients singularity_expansion(const std::function<double(cplx)>& u,
                                            double rho1, double rho2, int m,
                                            const ExpansionOpts& opts = {});

}  // namespace hblab::potential

#endif
