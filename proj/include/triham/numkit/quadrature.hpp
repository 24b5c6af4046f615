#pragma once

#include <functional>

#include "triham/common.hpp"

namespace triham::numkit {

/// Adaptive contour integral of f along a polyline, Gauss-Kronrod 7/15 with
/// bisection until the accumulated error estimate drops below tol.
/// Throws NoConvergence when the refinement budget is exhausted.
cdouble contour_quadrature(const std::function<cdouble(cdouble)>& f, const CPath& path,
                           double tol);

/// Same integrator over a parametrized integrand g(tau), tau in [0,1];
/// the caller supplies g already multiplied by dz/dtau. Used by integrands
/// that need the path parameter (branch guides).
cdouble quad_param01(const std::function<cdouble(double)>& g, double tol);

}  // namespace triham::numkit
