#ifndef HBLAB_QUADRATURE_HPP
#define HBLAB_QUADRATURE_HPP

#include <functional>
#include <vector>

#include "hblab/types.hpp"

namespace hblab::quad {

// Integrable endpoint/interior blow-up of the form |t - location|^(-exponent),
// 0 <= exponent < 1.  Declared singularities are removed by the power
// substitution t = location +/- s^(1/(1-exponent)) before the adaptive rule
// sees the integrand.
struct IntervalSingularity {
    double location;
    double exponent;
};

// Adaptive Gauss(7)/Kronrod(15) on [a, b] to absolute tolerance abs_tol.
// Integrand may be complex valued.  Evaluation points are always interior,
// so endpoint blow-ups milder than the declared kind do not crash the rule,
// but convergence is only guaranteed for bounded integrands.
cplx integrate(const std::function<cplx(double)>& f, double a, double b,
               double abs_tol, int max_depth = 48);

double integrate_real(const std::function<double(double)>& f, double a, double b,
                      double abs_tol, int max_depth = 48);

// Same rule after splitting [a, b] at each declared singular location and
// weakening the flanking panels by the power substitution.
cplx integrate_singular(const std::function<cplx(double)>& f, double a, double b,
                        const std::vector<IntervalSingularity>& singularities,
                        double abs_tol);

// Integral over the whole real line: adaptive core on [-halfwidth, halfwidth]
// plus the s = 1/t substitution on both tails.  The integrand must decay at
// least like 1/t^2.
double integrate_real_line(const std::function<double(double)>& f,
                           double halfwidth, double abs_tol);

// Curvilinear quadrature patch: map takes (s1, s2) in [0,1]^2 into the plane,
// jac is the area element of the map at (s1, s2).
struct ChartDomain {
    std::function<cplx(double, double)> map;
    std::function<double(double, double)> jac;
};

struct ChartQuadSpec {
    int n1 = 128;
    int n2 = 128;
    // Cells whose mapped center lies within refine_within of refine_near are
    // subdivided refine_factor x refine_factor before the per-cell 2x2
    // Gauss rule is applied.  refine_within <= 0 disables refinement.
    cplx refine_near = 0.0;
    double refine_within = 0.0;
    int refine_factor = 4;
};

// Tensor-product quadrature of G over the chart image.  Cells are traversed
// row major and accumulated in that fixed order, so results do not depend on
// any threading decisions made by callers.
cplx integrate_chart(const std::function<cplx(cplx)>& G, const ChartDomain& dom,
                     const ChartQuadSpec& spec);

// Quintic smoothstep: 0 for x <= 0, 1 for x >= 1, C^2 monotone between.
double smoothstep5(double x);

}  // namespace hblab::quad

#endif
