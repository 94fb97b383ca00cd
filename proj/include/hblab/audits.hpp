#ifndef HBLAB_AUDITS_HPP
#define HBLAB_AUDITS_HPP

#include <string>
#include <variant>
#include <vector>

#include "hblab/boundary.hpp"
#include "hblab/exemplars.hpp"
#include "hblab/types.hpp"

namespace hblab::audits {

enum class Outcome { pass, fail, indeterminate };

// consistent: no logical tension (a failed conclusion is explained by a
// failed hypothesis, or everything holds).  sharpness_witness: at least one
// hypothesis fails and the conclusion fails, the shape of an optimality
// example.  contradiction: every hypothesis passes yet the conclusion
// fails; this must never happen on shipped inputs and is treated as a hard
// failure by the test suite.
enum class Consistency { consistent, sharpness_witness, contradiction };

const char* to_cstring(Outcome o);
const char* to_cstring(Consistency c);

struct HypothesisRecord {
    std::string name;
    Outcome outcome = Outcome::indeterminate;
    std::variant<double, boundary::LimitEstimate, boundary::GrowthFit> evidence;
    std::string note;
};

struct ConclusionRecord {
    bool checked = false;
    Outcome outcome = Outcome::indeterminate;
    double evidence = 0.0;
    std::string note;
};

struct AuditVerdict {
    std::string theorem;
    std::vector<HypothesisRecord> hypotheses;
    ConclusionRecord conclusion;
    Consistency consistency = Consistency::consistent;
    std::vector<std::string> notes;  // declared-only conditions, not measured
};

Consistency combine(const std::vector<HypothesisRecord>& hypotheses,
                    const ConclusionRecord& conclusion);

struct AuditConfig {
    double tolerance = 1e-6;        // conclusion gate, scaled by 1 + field scale
    double limit_tolerance = 1e-4;  // size gate for extrapolated boundary limits
    double margin = 0.1;            // safety margin on fitted growth exponents
    double stability_tol = 0.05;    // refinement-stability gate for sup checks
    int boundary_points = 16;       // boundary grid size for limit hypotheses
    int grid_n = 96;                // points per level on interior grids
    int sup_n = 256;                // profile grid for growth fits
    std::vector<double> limit_schedule;   // default: dyadic approach, 10 levels
    std::vector<double> growth_schedule;  // default per region shape
    double wolf_eps0 = 1.0;         // start of the shrinking epsilon schedule
    bool log_scale = false;         // field evaluates log |u| instead of u
};

// Radial-limit uniqueness (dahlberg), its sectorial sharpening (berman_cohn),
// and the harmonic variant allowing an exponential growth envelope for every
// positive coefficient (wolf).
enum class ClassicalTheorem { dahlberg, berman_cohn, wolf };

/*
 * Hypotheses: (boundary_limits) extrapolated limits vanish at every grid
 * angle, radially for dahlberg and through Stolz sectors of aperture theta
 * otherwise; (growth_bound) fitted sup-growth exponent stays below 2 for
 * dahlberg and pi/theta for berman_cohn, each minus the margin.  The wolf
 * variant instead fits the coefficient of the exponential envelope and
 * checks its trend along a shrinking epsilon schedule; a finite schedule can
 * support but never verify a for-every-epsilon condition, so that record is
 * at best indeterminate.  Conclusion: the field vanishes on a dense interior
 * grid.
 */
AuditVerdict audit_classical(const exemplars::HarmonicField& u, ClassicalTheorem theorem,
                             double theta, const AuditConfig& cfg = {});

enum class FactorizedRegion { disc, rectangle };

/*
 * Factorized-bound uniqueness: |u| <= f g pointwise (pointwise_bound), f has
 * sectorial limit 0 at every boundary grid point (factor_decay), the line
 * masses of g stay bounded (factor_line_mass), and the sup growth of |u| is
 * within the declared exponent m (growth_bound).  The subharmonic variant is
 * selected by the field's claimed regularity and additionally requires
 * nonnegative samples and m < pi/theta.  Conclusion: u tends to 0 on the
 * distinguished boundary, the whole circle or the interval (-1,1).
 */
AuditVerdict audit_factorized(const exemplars::HarmonicField& u, const exemplars::HarmonicField& f,
                              const exemplars::HarmonicField& g, FactorizedRegion region,
                              double theta, double m, const AuditConfig& cfg = {});

/*
 * Growth transfer on a finite sector.  A field claiming nonnegative
 * subharmonicity is audited against the two boundary rays with weight |z|^l
 * and the interior with weight |z|^m, requiring l <= m < pi/opening.  A
 * harmonic field on the quadrant is audited against the rays {0, theta,
 * pi/2} with weight |z|^l, l in [0,2), and the interior with weight
 * |Im z|^m; the irrationality condition on theta/pi is recorded as declared
 * only.  Conclusion: sup of |z|^l |u| over the interior, stable under grid
 * refinement.
 */
AuditVerdict audit_phragmen(const exemplars::HarmonicField& u, double l, double theta,
                            double m, const AuditConfig& cfg = {});

struct EdgeOfWedgeReport {
    AuditVerdict verdict;
    std::vector<double> alphas;
    std::vector<cplx> continuation;
    bool continued = false;
    double mismatch = 0.0;  // max deviation from the declared closed form
};

// The odd part of a field across the real axis, |u(z) - u(conj z)| on the
// upper rectangle; the natural bound factor for the continuation audit.
exemplars::HarmonicField jump_profile(const exemplars::HarmonicField& u);

/*
 * Analytic continuation across the real segment: forms
 * U(z) = (u(z) - u(conj z))/2, runs the rectangle factorized audit on |U|
 * with the supplied f, g, theta, m, and, when every hypothesis passes and u
 * declares a closed form, extrapolates the two-sided means onto (-1,1) and
 * reports the worst mismatch against the closed form.
 */
EdgeOfWedgeReport audit_edge_of_wedge(const exemplars::HarmonicField& u,
                                      const exemplars::HarmonicField& f,
                                      const exemplars::HarmonicField& g, double theta,
                                      double m, const AuditConfig& cfg = {});

}  // namespace hblab::audits

#endif
