#include "triham/fuchsian/systems.hpp"

#include "triham/numkit/ode.hpp"

namespace triham::fuchsian {

TwistedPeriodSystem residues_R(const CMatrix& Psi, const CVector& mu_hat,
                               const std::vector<cdouble>& chart, cdouble nu) {
    const int n = static_cast<int>(Psi.rows());
    if (Psi.cols() != n || mu_hat.size() != n || static_cast<int>(chart.size()) != n)
        fail("BadFrame", "dimension mismatch");
    Eigen::FullPivLU<CMatrix> lu(Psi);
    if (!lu.isInvertible()) fail("SingularFrame", "transition matrix not invertible");
    CMatrix Psi_inv = lu.inverse();

    TwistedPeriodSystem sys;
    sys.n = n;
    sys.u = chart;
    sys.nu = nu;
    for (int i = 0; i < n; ++i) {
        CMatrix Ei = CMatrix::Zero(n, n);
        Ei(i, i) = 1.0;
        CMatrix Ri = -Psi_inv * Ei * Psi;
        for (int k = 0; k < n; ++k) Ri.col(k) *= (0.5 - nu + mu_hat(k));
        sys.residues.push_back(std::move(Ri));
    }
    return sys;
}

ResidueSystem reduce_A(const Matrix3c& Phi, cdouble mu, cdouble s) {
    ResidueSystem sys;
    sys.s = s;
    sys.kind = ResidueKind::A;
    sys.mu = mu;
    for (int i = 0; i < 3; ++i) {
        Matrix2c m;
        m << -Phi(i, 0) * Phi(i, 2), Phi(i, 2) * Phi(i, 2),
            -Phi(i, 0) * Phi(i, 0), Phi(i, 0) * Phi(i, 2);
        sys.residues[i] = mu * m;
    }
    return sys;
}

ResidueSystem reduce_B(const Matrix3c& Phi, cdouble mu, cdouble s) {
    ResidueSystem sys;
    sys.s = s;
    sys.kind = ResidueKind::B;
    sys.mu = mu;
    for (int i = 0; i < 3; ++i) {
        Matrix2c m;
        m << Phi(i, 1) * Phi(i, 1), 2.0 * Phi(i, 1) * Phi(i, 2),
            Phi(i, 0) * Phi(i, 1), 2.0 * Phi(i, 0) * Phi(i, 2);
        sys.residues[i] = mu * m;
    }
    return sys;
}

std::pair<ResidueSystem, ResidueSystem> build_C_D(const Matrix3c& Phi, cdouble mu, cdouble s) {
    ResidueSystem C, D;
    C.s = D.s = s;
    C.kind = ResidueKind::C;
    D.kind = ResidueKind::D;
    C.mu = D.mu = mu;
    for (int i = 0; i < 3; ++i) {
        Matrix2c c;
        c << Phi(i, 1) * Phi(i, 1), -2.0 * Phi(i, 1) * Phi(i, 2),
            -Phi(i, 0) * Phi(i, 1), 2.0 * Phi(i, 0) * Phi(i, 2);
        Matrix2c d;
        d << Phi(i, 1) * Phi(i, 1), Phi(i, 1) * Phi(i, 2),
            2.0 * Phi(i, 0) * Phi(i, 1), 2.0 * Phi(i, 0) * Phi(i, 2);
        if (i == 2) {
            c(0, 0) -= 1.0;
            c(1, 1) -= 1.0;
        } else {
            d(0, 0) -= 1.0;
            d(1, 1) -= 1.0;
        }
        C.residues[i] = mu * c;
        D.residues[i] = mu * d;
    }
    return {C, D};
}

Matrix2c integrate_system(const ResidueSystem& sys, const CPath& eps_path, const Matrix2c& chi0,
                          double tol) {
    eps_path.validate();
    for (const auto& w : eps_path.pts)
        for (const auto& p : sys.poles())
            if (std::abs(w - p) < 1e-12) fail("PoleOnPath", "eps-path touches a pole");
    auto M = [&](cdouble eps) -> CMatrix { return sys.rhs(eps); };
    CMatrix out = numkit::ode_flow_matrix(M, eps_path, chi0, tol);
    Matrix2c res = out;
    return res;
}

double isomonodromy_residual(const std::function<ResidueSystem(cdouble)>& system_family,
                             const std::function<Matrix2c(cdouble eps, cdouble s)>& chi_family,
                             cdouble s, cdouble eps, double h) {
    if (!(h > 0)) fail("BadStep", "h must be positive");
    Matrix2c chi_p = chi_family(eps, s + h);
    Matrix2c chi_m = chi_family(eps, s - h);
    Matrix2c dchi = (chi_p - chi_m) / (2 * h);
    ResidueSystem sys = system_family(s);
    Matrix2c chi = chi_family(eps, s);
    Matrix2c defect = dchi + sys.residues[2] * chi / (eps - s);
    return defect.cwiseAbs().maxCoeff();
}

}  // namespace triham::fuchsian
