#pragma once

#include <functional>

#include "triham/frobenius/tensor.hpp"
#include "triham/lift4d/lift.hpp"

namespace triham::lift4d {

/// Pointwise reconstruction data from a homogeneous frame:
/// eta_{ab} = sum_i psi_{ia} psi_{ib},
/// (dt^a/du_i) = sum_b eta^{ab} psi_{i,marked} psi_{ib},
/// c_{abg} = sum_i psi_{ia} psi_{ib} psi_{ig} / psi_{i,marked}.
struct Reconstruction {
    CMatrix eta;
    CMatrix eta_inv;
    CMatrix dt_du;  // (alpha, i)
    frobenius::Tensor3 c;
};

Reconstruction reconstruct(const TransitionFrame& frame);

/// Associativity defect of a raw (c, eta) pair; shared by the prepotential
/// checks and the reconstructed tensors.
double associativity_residual(const frobenius::Tensor3& c, const CMatrix& eta_inv);

/// Flat coordinates and prepotential value at one chart, from the Euler
/// field: t^a = (1/d_a) sum_i u_i dt^a/du_i and F by repeated degree-weighted
/// contraction of c (valid up to quadratic terms, requires the degrees and
/// 3-d, 3-d-d_a, 3-d-d_a-d_b all nonzero).
struct FlatPoint {
    CVector t;
    cdouble F;
};

FlatPoint flat_point(const TransitionFrame& frame);

/// Flat coordinates transported by quadrature of dt^a along a straight chart
/// path (composite Simpson with n_steps subintervals); used to cross-check
/// the pointwise Euler values and path independence.
CVector flat_by_quadrature(
    const std::function<TransitionFrame(const std::vector<cdouble>&)>& frame_family,
    const std::vector<cdouble>& from, const std::vector<cdouble>& to, const CVector& t_from,
    int n_steps);

}  // namespace triham::lift4d
