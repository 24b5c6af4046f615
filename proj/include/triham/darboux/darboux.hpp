#pragma once

#include <functional>
#include <vector>

#include "triham/common.hpp"

namespace triham::darboux {

/// Point on a reduced Darboux-Egoroff trajectory: invariant parameter s and
/// the three matrix entries (a, b, c). The casimir a^2+b^2+c^2 is conserved.
struct DEState {
    cdouble s, a, b, c;

    cdouble casimir() const { return a * a + b * b + c * c; }
};

/// Right-hand side (da/ds, db/ds, dc/ds) = (bc/s, ac/(1-s), ab/(s(s-1))).
Eigen::Vector3cd de_rhs(const DEState& state);

/// Analytic continuation of (a, b, c) along a path in the s-plane avoiding
/// {0, 1}; end state carries the final waypoint as its s.
DEState de_flow(const DEState& start, const CPath& s_path, double tol);

/// 3x3 skew matrix with rows (0,-c,b; c,0,-a; -b,a,0).
Matrix3c v_from_state(const DEState& state);

/// The 4x4 tri-hamiltonian lift; sign = -1 negates the last row and column.
Matrix4c lift_to_w(const DEState& state, int sign = +1);

/// Ordered pairwise-distinct canonical coordinates.
void validate_chart(const std::vector<cdouble>& chart, double min_sep = 1e-6);

/// V_i = [Gamma, E_i] with Gamma = ad_U^{-1} V:
/// (V_i)_{jk} = (delta_{ij} - delta_{ik}) V_{jk} / (u_j - u_k), zero diagonal.
std::vector<CMatrix> side_matrices(const CMatrix& V, const std::vector<cdouble>& chart);

/// Rotation coefficients gamma_{ij} = (1/sqrt(eta_i)) d_i sqrt(eta_j), i != j,
/// by central differences in the canonical coordinates. The metric sampler
/// returns the diagonal coefficients eta_i at a chart; square-root branches
/// are kept continuous against the center sample.
CMatrix rotation_coefficients(
    const std::function<std::vector<cdouble>(const std::vector<cdouble>&)>& metric,
    const std::vector<cdouble>& chart, double h);

}  // namespace triham::darboux
