#pragma once

#include <array>

#include "triham/darboux/darboux.hpp"
#include "triham/frobenius/prepotential.hpp"
#include "triham/fuchsian/systems.hpp"
#include "triham/hurwitz/appell.hpp"

namespace triham::hurwitz {

inline constexpr double kA3Mu = -0.25;

/// s = t (2+t)^3 / (1+2t)^3.
cdouble a3_s_of_t(cdouble t);

/// Inverse of a3_s_of_t: the quartic root nearest to t_hint (pass a point on
/// the canonical window t > 1).
cdouble a3_t_from_s(cdouble s, cdouble t_hint);

/// The rescaled 3x3 transition matrix of the quartic unfolding as an
/// algebraic function of t. Defined on the domain where the three radicands
/// (2+t)(1+2t), (t-1)(1+2t), (t-1)(2+t) have positive real part; the third
/// square root carries the factor i fixed by the real window t > 1.
Matrix3c a3_phi(cdouble t);

/// (s, a, b, c) extracted from V = Phi mu_hat Phi^{-1}, mu_hat = diag(-1/4, 0, 1/4).
darboux::DEState a3_abc(cdouble t);

/// Monic quartic whose roots feed the twisted-period columns; returns
/// {c4, c3, c2, c1, c0} of z^4 + c2 z^2 + c1 z + c0(t) - eps.
std::array<cdouble, 5> a3_superpotential_coeffs(cdouble t, cdouble eps);

/// Branch-continued state of the closed-form fundamental solution of the
/// kind-B system. The anchor fixes the cyclic root ordering and the relative
/// sign between the two Appell pieces by minimizing the ODE residual; a state
/// is then continued along paths in (t, eps) with every radical and log
/// tracked for continuity.
struct A3ChiState {
    cdouble t, eps;
    std::array<cdouble, 4> roots;
    struct Column {
        cdouble log_a;   // log xi_{(i+1)i}
        cdouble log_m;   // log( xi_{(i+2)i} * xi_{i(i+3)} )
        FgRadicals rad;
        double fsign;    // relative sign applied to the f piece
    };
    std::array<Column, 2> col;
    int rotation;   // frozen cyclic shift of the root labels
    bool reversed;  // frozen orientation
};

A3ChiState a3_chi_anchor(cdouble t, cdouble eps);
A3ChiState a3_chi_continue(const A3ChiState& from, cdouble t, cdouble eps);
Matrix2c a3_chi_value(const A3ChiState& st);

/// Convenience: anchored fundamental solution at (t, eps).
Matrix2c a3_chi(cdouble t, cdouble eps);

/// The algebraic 4-variable prepotential with one radical term
/// (48 t2 + 3 t3^2 + t4^2)^{5/2}, degrees (1, 1, 1/2, 1/2), charge 1/2.
frobenius::Prepotential pavlyk_prepotential();

}  // namespace triham::hurwitz
