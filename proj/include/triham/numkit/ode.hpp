#pragma once

#include <functional>

#include "triham/common.hpp"

namespace triham::numkit {

using OdeRhs = std::function<CVector(cdouble z, const CVector& y)>;

/// Analytic continuation of y' = rhs(z, y) along a polyline in the z-plane.
///
/// Embedded Dormand-Prince 5(4) pair with error-per-unit-step control: each
/// accepted step keeps the local error estimate below tol * |dz|, so the
/// accumulated error over a path of length L stays near tol * L.
///
/// Throws StepUnderflow when the step shrinks below 1e-13 of the path length
/// (pole proximity) and NonFinite when the state stops being finite.
CVector ode_flow(const OdeRhs& rhs, const CPath& path, CVector y0, double tol);

/// Flow of a linear system y' = M(z) y for a full fundamental matrix.
CMatrix ode_flow_matrix(const std::function<CMatrix(cdouble)>& M, const CPath& path,
                        CMatrix y0, double tol);

}  // namespace triham::numkit
