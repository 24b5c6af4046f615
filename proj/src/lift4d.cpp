#include "triham/lift4d/lift.hpp"

namespace triham::lift4d {

Chart4Params chart_params(const std::array<cdouble, 4>& v) {
    for (const auto& z : v)
        if (!is_finite(z)) fail("CoincidentCoordinates", "non-finite coordinate");
    darboux::validate_chart({v.begin(), v.end()});
    Chart4Params p;
    p.v = v;
    p.s = (v[2] - v[0]) * (v[3] - v[1]) / ((v[1] - v[0]) * (v[3] - v[2]));
    p.eps = (v[1] - v[3]) / (v[1] - v[0]);
    const double tol = 1e-9;
    if (std::abs(p.s) < tol || std::abs(p.s - 1.0) < tol)
        fail("DegenerateCrossRatio", "cross-ratio s degenerates to 0 or 1");
    if (std::abs(p.eps) < tol || std::abs(p.eps - 1.0) < tol || std::abs(p.eps - p.s) < tol)
        fail("DegenerateCrossRatio", "eps collides with a pole {0, 1, s}");
    return p;
}

Matrix4c eigenframe4(const Matrix3c& Phi, cdouble mu, int sign) {
    Matrix3c mu_hat = Matrix3c::Zero();
    mu_hat(0, 0) = mu;
    mu_hat(2, 2) = -mu;
    Matrix3c V = Phi * mu_hat * Phi.inverse();
    darboux::DEState st;
    st.s = cdouble(0, 0);  // unused here
    st.a = 0.5 * (V(2, 1) - V(1, 2));
    st.b = 0.5 * (V(0, 2) - V(2, 0));
    st.c = 0.5 * (V(1, 0) - V(0, 1));
    Matrix4c W = darboux::lift_to_w(st, sign);

    auto build = [&](cdouble top) {
        Matrix4c F;
        for (int i = 0; i < 3; ++i) {
            F(i, 0) = Phi(i, 0);
            F(i, 1) = Phi(i, 1);
            F(i, 2) = Phi(i, 1);
            F(i, 3) = Phi(i, 2);
        }
        F(3, 0) = F(3, 3) = 0.0;
        F(3, 1) = top;
        F(3, 2) = -top;
        return F;
    };

    auto eigen_defect = [&](const Matrix4c& F) {
        double worst = 0;
        for (int c = 0; c < 4; ++c) {
            cdouble lam = (c < 2) ? mu : -mu;
            worst = std::max(worst, (W * F.col(c) - lam * F.col(c)).cwiseAbs().maxCoeff());
        }
        return worst;
    };

    Matrix4c F = build(cdouble(0, 1));
    double d1 = eigen_defect(F);
    if (d1 > 1e-10) {
        Matrix4c Fswap = build(cdouble(0, -1));
        double d2 = eigen_defect(Fswap);
        if (d2 < d1) {
            F = Fswap;
            d1 = d2;
        }
    }
    if (d1 > 1e-10) fail("EigenCheckFailed", "eigenframe does not diagonalize W");
    return F;
}

TransitionFrame assemble_psi_hat(const Matrix3c& Phi, const Matrix2c& chi,
                                 const Chart4Params& params, cdouble mu, cdouble log_v21,
                                 cdouble log_eps_minus_s, cdouble log_eps,
                                 cdouble log_eps_minus_1, int sign) {
    const cdouble v21 = params.v[1] - params.v[0];
    auto check_log = [](cdouble lg, cdouble val, const char* what) {
        if (std::abs(std::exp(lg) - val) > 1e-8 * std::max(1.0, std::abs(val)))
            fail("BranchInconsistency", std::string("log does not match ") + what);
    };
    check_log(log_v21, v21, "v2 - v1");
    check_log(log_eps_minus_s, params.eps - params.s, "eps - s");
    check_log(log_eps, params.eps, "eps");
    check_log(log_eps_minus_1, params.eps - 1.0, "eps - 1");

    Matrix4c F = eigenframe4(Phi, mu, sign);

    const cdouble plus = std::exp(mu * (log_v21 - log_eps_minus_s));
    const cdouble minus = std::exp(-mu * log_v21 - mu * (log_eps + log_eps_minus_1));
    Matrix4c D = Matrix4c::Zero();
    D(0, 0) = -plus;
    D(1, 1) = plus;
    D(2, 2) = 0.5 * minus;
    D(3, 3) = minus;

    Matrix4c X = Matrix4c::Zero();
    X.block<2, 2>(0, 0) = chi;
    X.block<2, 2>(2, 2) = chi;

    TransitionFrame out;
    out.chart = {params.v.begin(), params.v.end()};
    out.psi = F * D * X;
    out.mu_hat = CVector(4);
    out.mu_hat << mu, mu, -mu, -mu;
    out.marked_column = 0;
    return out;
}

double check_linear_system(
    const std::function<Matrix4c(const std::array<cdouble, 4>&)>& frame_family,
    const std::function<Matrix4c(const std::array<cdouble, 4>&)>& w_family,
    const std::array<cdouble, 4>& v, double h) {
    if (!(h > 0)) fail("BadStep", "h must be positive");
    Matrix4c psi = frame_family(v);
    Matrix4c W = w_family(v);
    std::vector<cdouble> chart(v.begin(), v.end());
    std::vector<CMatrix> Wi = darboux::side_matrices(W, chart);

    double worst = 0;
    for (int i = 0; i < 4; ++i) {
        std::array<cdouble, 4> up = v, dn = v;
        up[i] += h;
        dn[i] -= h;
        Matrix4c d = (frame_family(up) - frame_family(dn)) / (2 * h);
        Matrix4c defect = d - Matrix4c(Wi[i]) * psi;
        worst = std::max(worst, defect.cwiseAbs().maxCoeff());
    }
    return worst;
}

}  // namespace triham::lift4d
