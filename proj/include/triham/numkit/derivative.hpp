#pragma once

#include <functional>

#include "triham/common.hpp"

namespace triham::numkit {

/// Default step for finite differences at z: 1e-6 * max(1, |z|).
inline double default_fd_step(cdouble z) { return 1e-6 * std::max(1.0, std::abs(z)); }

/// Two-point central difference (f(z+h) - f(z-h)) / (2h), real step h.
cdouble central_diff(const std::function<cdouble(cdouble)>& f, cdouble z, double h);

/// Four-point stencil, O(h^4); used by invariant checks with tolerance < 1e-8.
cdouble central_diff4(const std::function<cdouble(cdouble)>& f, cdouble z, double h);

/// Second derivative by three-point central difference.
cdouble central_diff2nd(const std::function<cdouble(cdouble)>& f, cdouble z, double h);

}  // namespace triham::numkit
