#pragma once

#include "triham/common.hpp"

namespace triham::hurwitz {

/// Algebraic reduction of F1(1/4; 3/4, 3/4; 1/2; x, y):
/// (1/sqrt(2)) (1 + 1/sqrt((1-x)(1-y))) sqrt(1/(sqrt(1-x)+sqrt(1-y))).
/// Principal branches; throws NearSingular within 1e-8 of x = 1 or y = 1.
cdouble appell_g(cdouble x, cdouble y);

/// Algebraic reduction of F1(5/4; 3/4, 3/4; 3/2; x, y):
/// (sqrt(sqrt(1-y)+sqrt(x-y)) - sqrt(sqrt(1-y)-sqrt(x-y)))
///   / sqrt((1-x)(1-y)(x-y)),
/// with a Taylor fallback in (x-y)/(1-y) near the removable x = y locus.
cdouble appell_f(cdouble x, cdouble y);

/// Elementary radicals underlying f and g, tracked individually so the pair
/// can be continued along paths. w = sqrt(1-x), v = sqrt(1-y), u = sqrt(x-y),
/// p = sqrt(v+u), q = sqrt(v-u), r = sqrt(1/(w+v)).
struct FgRadicals {
    cdouble w, v, u, p, q, r;

    static FgRadicals principal(cdouble x, cdouble y);
    /// Each radical continued by nearest-branch choice against prev.
    static FgRadicals continued(const FgRadicals& prev, cdouble x, cdouble y);
    /// Largest relative movement of a radical vs prev (step-size control).
    double movement(const FgRadicals& prev) const;
};

/// f and g from a fixed radical bundle; f switches to the series form when
/// |x - y| < 1e-4 (removable singularity of the printed closed form).
std::pair<cdouble, cdouble> fg_from_radicals(const FgRadicals& rad, cdouble x, cdouble y);

}  // namespace triham::hurwitz
