#ifndef HBLAB_WOLF_HPP
#define HBLAB_WOLF_HPP

#include <functional>
#include <utility>
#include <vector>

#include "hblab/exemplars.hpp"
#include "hblab/types.hpp"

namespace hblab::wolf {

/*
 * Parameters of the boundary-vanishing harmonic field with the doubly
 * exponential radial growth.  The construction lives on the wedge
 * Delta = {arg(1-z) > pi/2 - theta - beta} near the boundary point 1:
 *
 *   f(z) = ((1-z)/(1+z))^A * exp(omega^(pi/(2 theta))),
 *   omega = K + i epsilon (1+z)/(1-z),
 *
 * cut off by a C^2 ridge g in arg(1-z) across the transition band
 * [pi/2-theta-2beta/3, pi/2-theta-beta/3].  K places omega on the ray
 * e^{i theta} R+ along the wedge edge.  The dbar defect of h = f g is
 * removed by a solid Cauchy transform over the band, thickened past the
 * unit circle by a tube of width beta/10 so the correction also covers the
 * band's boundary arc.
 */
struct WolfParams {
    double theta = 0.3 * PI;
    double beta = 0.05;
    double epsilon = 0.05;
    int A = 8;
    double K = 0.0;  // see wolf_choose_K

    // Quadrature cells across the transition band (psi direction) and along
    // the ray direction toward 1 (t direction).
    int n_psi = 24;
    int n_t = 64;

    double tube_width() const { return beta / 10.0; }
    double band_lo() const { return PI / 2 - theta - 2.0 * beta / 3.0; }
    double band_hi() const { return PI / 2 - theta - beta / 3.0; }
};

void validate(const WolfParams& p);

/*
 * The real shift K: samples i epsilon (1+z)/(1-z) at two points of the ray
 * arg(1-z) = pi/2 - theta inside the disc (their images span a line of
 * direction e^{i theta}), shifts the line through the origin, and verifies
 * with a third sample to 1e-8.  The closed-form answer is -epsilon cot
 * theta; the sampling construction is kept as a cross-check of the ray
 * geometry and fails loudly if the direction degenerates.
 */
double wolf_choose_K(const WolfParams& p);

struct WolfField {
    WolfParams params;

    std::function<cplx(cplx)> h;    // f g, zero off the wedge
    std::function<cplx(cplx)> h1;   // solid Cauchy transform of 2 dbar h
    std::function<cplx(cplx)> H;    // h - h1, dbar-free
    std::function<double(cplx)> v;  // harmonic extension of Im h1 boundary values
    std::function<double(cplx)> w;  // v + Im H

    // log |w|, evaluable where |w| overflows double (the growth regime);
    // falls back to the dominant closed-form part of log |Im h| once that
    // part exceeds the correction scales by hundreds of e-folds.
    std::function<double(cplx)> log_abs_w;

    // Diagnostics recorded at assembly.
    std::vector<double> plateau_angles;     // boundary angles with omega >= 0
    std::vector<double> plateau_im_h;       // Im h there (analytically zero)
    std::vector<double> boundary_angles;    // off-band circle grid
    std::vector<double> boundary_w;         // w / (1 + |h|) there (should vanish)
    std::vector<double> dbar_h_probe;       // |dbar h| at the band probes
    std::vector<double> dbar_residual;      // |dbar H| at the same probes
    std::vector<std::pair<double, double>> growth_samples;  // (r, log max |w|)
    bool growth_regime_warning = false;

    exemplars::HarmonicField as_field() const;          // w as a named field
    exemplars::HarmonicField as_log_field() const;      // log|w|, log-scale flag
};

WolfField wolf_assemble(const WolfParams& p);

}  // namespace hblab::wolf

#endif
