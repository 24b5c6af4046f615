#include "triham/numkit/roots.hpp"

#include <Eigen/Eigenvalues>

namespace triham::numkit {

std::array<cdouble, 4> quartic_roots(cdouble c4, cdouble c3, cdouble c2, cdouble c1, cdouble c0) {
    if (c4 == cdouble(0, 0)) fail("Degenerate", "leading coefficient is zero");
    const cdouble a3 = c3 / c4, a2 = c2 / c4, a1 = c1 / c4, a0 = c0 / c4;

    Matrix4c comp = Matrix4c::Zero();
    comp(0, 3) = -a0;
    comp(1, 3) = -a1;
    comp(2, 3) = -a2;
    comp(3, 3) = -a3;
    comp(1, 0) = comp(2, 1) = comp(3, 2) = 1.0;

    Eigen::ComplexEigenSolver<Matrix4c> es(comp, /*computeEigenvectors=*/false);
    std::array<cdouble, 4> r;
    for (int i = 0; i < 4; ++i) r[i] = es.eigenvalues()(i);

    // Newton polish on the monic quartic; skip near-multiple roots where the
    // derivative collapses.
    auto p = [&](cdouble z) { return (((z + a3) * z + a2) * z + a1) * z + a0; };
    auto dp = [&](cdouble z) { return ((4.0 * z + 3.0 * a3) * z + 2.0 * a2) * z + a1; };
    double scale = std::max({1.0, std::abs(a3), std::abs(a2), std::abs(a1), std::abs(a0)});
    for (auto& z : r) {
        for (int it = 0; it < 3; ++it) {
            cdouble d = dp(z);
            if (std::abs(d) < 1e-12 * scale) break;
            cdouble step = p(z) / d;
            if (!is_finite(step) || std::abs(step) > 0.5 * (1.0 + std::abs(z))) break;
            z -= step;
        }
    }
    return r;
}

}  // namespace triham::numkit
