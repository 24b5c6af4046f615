#pragma once

#include <vector>

#include "triham/fuchsian/systems.hpp"

namespace triham::fuchsian {

/// Zero of the degree-one polynomial
/// b1 (e-1)(e-s) + b2 e(e-s) + b3 e(e-1), where b_i are the top-right
/// residue entries; the quadratic coefficient cancels because the residue at
/// infinity has zero top-right entry. Throws DegeneratePolynomial when the
/// linear coefficient vanishes.
cdouble painleve_y(const ResidueSystem& sys);

/// Grid of (s, y(s)) samples; y must stay off {0, 1, s}.
struct PainleveSample {
    std::vector<cdouble> s;
    std::vector<cdouble> y;
};

enum class PviVariant { PVImu, Okamoto };

/// Max over interior grid points of |y'' - RHS(variant)| with derivatives by
/// central differences; the grid must be uniform in s. The last terms of both
/// variants read s(s-1)/(y-s)^2. Throws GridTooCoarse when the spacing cannot
/// resolve the second derivative.
double pvi_residual(const PainleveSample& samples, cdouble mu, PviVariant variant);

}  // namespace triham::fuchsian
