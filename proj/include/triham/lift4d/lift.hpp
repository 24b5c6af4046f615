#pragma once

#include <array>
#include <functional>

#include "triham/common.hpp"
#include "triham/darboux/darboux.hpp"

namespace triham::lift4d {

/// n x n transition matrix with its chart, spectrum and marked column.
struct TransitionFrame {
    std::vector<cdouble> chart;
    CMatrix psi;
    CVector mu_hat;
    int marked_column = 0;
};

struct Chart4Params {
    std::array<cdouble, 4> v;
    cdouble s;    // cross-ratio (v3-v1)(v4-v2) / ((v2-v1)(v4-v3))
    cdouble eps;  // (v2-v4)/(v2-v1)
};

/// Throws CoincidentCoordinates for near-equal coordinates and
/// DegenerateCrossRatio when s lands in {0,1} or eps in {0,1,s}.
Chart4Params chart_params(const std::array<cdouble, 4>& v);

/// The 4x4 eigenframe of W built from the 3x3 rescaled frame: columns
/// (phi_.1, 0), (phi_.2, i), (phi_.2, -i), (phi_.3, 0). Verifies
/// W phi_(1,2) = mu phi, W phi_(3,4) = -mu phi against the W lifted from
/// Phi's own Darboux-Egoroff data and swaps the +-i entries if the opposite
/// pairing is the one that holds. sign = -1 requests the flipped lift.
Matrix4c eigenframe4(const Matrix3c& Phi, cdouble mu, int sign = +1);

/// Psi_hat = eigenframe4 * diag(-v21^mu/(eps-s)^mu, v21^mu/(eps-s)^mu,
///   (1/2) v21^-mu/[eps(eps-1)]^mu, v21^-mu/[eps(eps-1)]^mu) * blockdiag(chi, chi).
///
/// The multivalued powers are taken from caller-supplied continued logs so
/// that the branch travels with chi; the logs are sanity-checked against the
/// chart (BranchInconsistency otherwise).
TransitionFrame assemble_psi_hat(const Matrix3c& Phi, const Matrix2c& chi,
                                 const Chart4Params& params, cdouble mu, cdouble log_v21,
                                 cdouble log_eps_minus_s, cdouble log_eps,
                                 cdouble log_eps_minus_1, int sign = +1);

/// max_i |dPsi_hat/dv_i - W_i Psi_hat| with central differences of step h.
double check_linear_system(
    const std::function<Matrix4c(const std::array<cdouble, 4>&)>& frame_family,
    const std::function<Matrix4c(const std::array<cdouble, 4>&)>& w_family,
    const std::array<cdouble, 4>& v, double h);

}  // namespace triham::lift4d
