#pragma once

#include <array>

#include "triham/darboux/darboux.hpp"

namespace triham::hurwitz {

/// Closed a-cycle around the segment [a, b], excluding the listed points.
/// Margins shrink to keep the exclusions outside; a real exclusion lying
/// inside (a, b) on the axis is dodged with a notch (normalized charts only).
CPath acycle_contour(cdouble a, cdouble b, const std::vector<cdouble>& exclude,
                     bool allow_notch = false);

/// Loop integral of numerator(lambda) / sqrt(radicand(lambda)) along the
/// contour, with the square-root branch tracked continuously. ref_start picks
/// the branch at the contour start (0 = principal); start_out reports the
/// branch value actually used so stencil evaluations can stay on one sheet.
cdouble period_integral(const CPath& contour, const std::function<cdouble(cdouble)>& radicand,
                        const std::function<cdouble(cdouble)>& numerator, double tol,
                        cdouble ref_start = cdouble(0, 0), cdouble* start_out = nullptr);

struct EllipticData {
    cdouble omega1;  // complete period: loop of d(lambda) / (2 rho) around [0,1]
    cdouble Ibar;    // (1/omega1) * loop of lambda d(lambda) / (2 rho)
};

/// Period data of rho^2 = lambda(lambda-1)(lambda-s); s must stay away from
/// the branch points 0 and 1.
EllipticData elliptic_period_data(cdouble s, double tol = 1e-12);

/// Ibar_1(s) = (1/omega1) * loop of d(lambda) / (2 lambda rho) = Ibar / s.
cdouble elliptic_Ibar1(cdouble s, double tol = 1e-12);

/// (a, b, c) of the genus-one 3-point solution:
/// a = Ibar/(2 sqrt(-s)), b = -(Ibar-1)/(2 sqrt(s-1)),
/// c = (Ibar-s)/(2 sqrt(s(1-s))), principal branches on the upper half
/// s-plane. Throws BranchCut for real s.
darboux::DEState elliptic_v(cdouble s, double tol = 1e-12);

/// Normalized 4-point data: rho^2 = lambda(lambda-1)(lambda-P)(lambda-Q)
/// with P = s(eps-1)/(eps-s), Q = 1-eps.
cdouble genus1_barJ1(cdouble eps, cdouble s, double tol = 1e-12);

/// Quasi-momentum period on a general 4-point chart, loop around [v1, v2].
cdouble genus1_omega1(const std::array<cdouble, 4>& v, double tol = 1e-12,
                      cdouble ref_start = cdouble(0, 0), cdouble* start_out = nullptr);

struct Genus1Report {
    double w_residual;       // |W from quadrature metric - lift of Lemma-4 data|
    double lemma5_residual;  // |sum v_i^2 d_i Omega1 + (1/2) sum v_i Omega1| / |Omega1|
    double barj1_residual;   // |J1bar - (eps Ibar1 - 1)/(eps - 1)|
    double barj1_limit_residual;  // same identity evaluated at large eps
};

/// The full Prop-4 style verification on one 4-point chart.
Genus1Report elliptic_w_check(const std::array<cdouble, 4>& v, double fd_step = 1e-5,
                              double tol = 1e-12);

}  // namespace triham::hurwitz
