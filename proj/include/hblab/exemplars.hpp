#ifndef HBLAB_EXEMPLARS_HPP
#define HBLAB_EXEMPLARS_HPP

#include <functional>
#include <string>
#include <vector>

#include "hblab/geometry.hpp"
#include "hblab/types.hpp"

namespace hblab::exemplars {

enum class Metadata { closed_form, series, composite };

// What the field claims about itself.  Analyzers trust the claim for
// routing (which audits apply) and spot-check it where cheap.
enum class Regularity { harmonic, subharmonic_nonneg, analytic_off_reals };

struct HarmonicField {
    std::string name;
    geometry::Region region;
    Metadata metadata = Metadata::closed_form;
    Regularity regularity = Regularity::harmonic;
    int series_terms = 0;      // series metadata only
    double series_tail = 0.0;  // declared truncation bound, series only
    std::function<cplx(cplx)> eval;

    cplx value(cplx z) const { return eval(z); }
    double real_value(cplx z) const { return eval(z).real(); }
};

// Checks the declared metadata (series truncation ≥ 16, finite tail bound,
// evaluator present).  Throws std::invalid_argument.
void validate(const HarmonicField& field);

/*
 * The sliding-kernel derivative field: angular derivative of the
 * half-normalized Poisson kernel,
 *
 *   u0(r e^{i phi}) = -sum_{n>=1} n r^n sin(n phi)
 *                   = -r (1-r^2) sin(phi) / (1 - 2 r cos(phi) + r^2)^2.
 *
 * Harmonic on the disc, radial limit 0 at every boundary angle, yet growing
 * like (1-r)^{-2} in sup norm.
 */
enum class U0Mode { closed, series };

double u0_eval(double r, double phi, U0Mode mode = U0Mode::closed, int terms = 200);

HarmonicField u0_field();
HarmonicField u0_series_field(int terms);

// Tail bound of the truncated u0 series at radius r: sum_{n>N} n r^n.
double u0_series_tail(int terms, double r);

// Test inputs for the edge-of-the-wedge auditor on the square
// (-1,1) x (-1,1): a pole safely outside, a non-continuable step, and two
// principal logarithms, one with the branch cut outside the square and one
// with the cut crossing it.
enum class CatalogFunction { rational_pole, boundary_jump, principal_log, principal_log_cut };

cplx catalog_eval(CatalogFunction which, cplx z);

// Radial comparison field (1 - |z|)^{-m} with a planted growth exponent.
HarmonicField synthetic_growth(double m);

// Names resolvable by make_field, the set the CLI lists and accepts.
const std::vector<std::string>& field_names();
HarmonicField make_field(const std::string& name);

}  // namespace hblab::exemplars

#endif
