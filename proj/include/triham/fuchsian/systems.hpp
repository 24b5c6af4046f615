#pragma once

#include <array>
#include <functional>
#include <vector>

#include "triham/common.hpp"

namespace triham::fuchsian {

enum class ResidueKind { A, B, C, D };

/// 2x2 Fuchsian system d/de chi = (M1/e + M2/(e-1) + M3/(e-s)) chi.
struct ResidueSystem {
    cdouble s;
    ResidueKind kind;
    std::array<Matrix2c, 3> residues;
    cdouble mu;

    std::array<cdouble, 3> poles() const { return {cdouble(0, 0), cdouble(1, 0), s}; }
    Matrix2c residue_at_infinity() const { return -(residues[0] + residues[1] + residues[2]); }
    Matrix2c rhs(cdouble eps) const {
        return residues[0] / eps + residues[1] / (eps - 1.0) + residues[2] / (eps - s);
    }
};

/// n x n twisted-period system d/de chi = sum_i R_i/(e - u_i) chi with
/// R_i = -Psi^{-1} E_i Psi (1/2 - nu + mu_hat).
struct TwistedPeriodSystem {
    int n;
    std::vector<cdouble> u;
    std::vector<CMatrix> residues;
    cdouble nu;

    CMatrix rhs(cdouble eps) const {
        CMatrix m = CMatrix::Zero(n, n);
        for (int i = 0; i < n; ++i) m += residues[i] / (eps - u[i]);
        return m;
    }
};

TwistedPeriodSystem residues_R(const CMatrix& Psi, const CVector& mu_hat,
                               const std::vector<cdouble>& chart, cdouble nu);

/// A_i = mu (-phi_{i1} phi_{i3}, phi_{i3}^2; -phi_{i1}^2, phi_{i1} phi_{i3}),
/// the nu = 1/2 reduction at the normalized chart (0, 1, s).
ResidueSystem reduce_A(const Matrix3c& Phi, cdouble mu, cdouble s);

/// B_i = mu (phi_{i2}^2, 2 phi_{i2} phi_{i3}; phi_{i1} phi_{i2}, 2 phi_{i1} phi_{i3}),
/// the nu = mu + 1/2 reduction.
ResidueSystem reduce_B(const Matrix3c& Phi, cdouble mu, cdouble s);

/// The eigenspace systems of the 4d lift before gauging: C_3 and D_1, D_2
/// carry the -1 diagonal shifts. Gauge factors (eps-s)^mu diag(-1,1) and
/// eps^mu (eps-1)^mu diag(2,1) map them onto the B system.
std::pair<ResidueSystem, ResidueSystem> build_C_D(const Matrix3c& Phi, cdouble mu, cdouble s);

/// Fundamental 2x2 solution transported along an eps-path avoiding the poles.
Matrix2c integrate_system(const ResidueSystem& sys, const CPath& eps_path, const Matrix2c& chi0,
                          double tol);

/// |d/ds chi + M3 chi/(eps-s)| with d/ds by central differences over the
/// family (system and solution both depend on s).
double isomonodromy_residual(const std::function<ResidueSystem(cdouble)>& system_family,
                             const std::function<Matrix2c(cdouble eps, cdouble s)>& chi_family,
                             cdouble s, cdouble eps, double h);

}  // namespace triham::fuchsian
