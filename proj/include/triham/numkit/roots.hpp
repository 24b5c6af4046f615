#pragma once

#include <array>

#include "triham/common.hpp"

namespace triham::numkit {

/// Roots of c4 z^4 + c3 z^3 + c2 z^2 + c1 z + c0 via companion-matrix
/// eigenvalues plus Newton refinement. Throws Degenerate when c4 == 0.
/// Elementary symmetric functions of the result reproduce the (monic)
/// coefficients to 1e-10 relative.
std::array<cdouble, 4> quartic_roots(cdouble c4, cdouble c3, cdouble c2, cdouble c1, cdouble c0);

}  // namespace triham::numkit
