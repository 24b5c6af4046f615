#pragma once

#include <functional>
#include <vector>

#include "triham/frobenius/prepotential.hpp"

namespace triham::frobenius {

/// Max over samples and index 4-tuples of the associativity defect
/// |sum_m (c^m_{ab} c_{mgd} - c^m_{bg} c_{mad})|.
double check_wdvv(const Prepotential& F, const std::vector<CVector>& samples);

/// Max |c_{1ab} - eta_{ab}|.
double check_unit(const FrobeniusPoint& pt);

/// Max over index triples of |c(lam^d . t) - lam^{3-d-da-db-dg} c(t)|,
/// stated on third derivatives so the quadratic ambiguity drops out.
double check_quasihomogeneity(const Prepotential& F, double lambda, const CVector& t);

struct TrihamResult {
    bool ok;
    double mu;  // the common |mu_alpha| when ok
};

/// True iff the spectrum splits into two equal groups +-mu with mu != 0.
/// Throws OddDimension for odd n.
TrihamResult check_trihamiltonian(const Prepotential& F);

/// Contravariant Christoffel symbols of the third metric:
/// Gamma~^{ab}_g = sum_nu (1 - mu_b + mu_nu) g^{b nu} c^a_{nu g}.
Tensor3 christoffel_third(const FrobeniusPoint& pt);

/// Christoffel symbols of the intersection form: (1/2 - mu_b) c^{ab}_g.
Tensor3 christoffel_intersection(const FrobeniusPoint& pt);

/// Curvature of a contravariant metric from an evaluable Christoffel field,
/// R^{abg}_d = G^{ab}_l G^{lg}_d - G^{ag}_l G^{lb}_d
///            + metric^{al} (d_l G^{bg}_d - d_d G^{bg}_l),
/// with the derivative terms by central differences (step h per coordinate).
Tensor4 curvature_contravariant(const std::function<Tensor3(const CVector&)>& gamma_field,
                                const std::function<CMatrix(const CVector&)>& metric_field,
                                const CVector& t, double h);

struct FlatPencilResiduals {
    double d1_eta_tilde_vs_2g;
    double d11_eta_tilde_vs_2eta;
    double d1_U_vs_identity;
};

/// Finite-difference residuals of the flat-pencil identities at t.
FlatPencilResiduals check_flat_pencil(const Prepotential& F, const CVector& t, double h);

/// Max |[mu^2 (e_a . e_b)] . e_g - e_a . [mu^2 (e_b . e_g)]| in components.
double check_wwdvv(const FrobeniusPoint& pt);

}  // namespace triham::frobenius
