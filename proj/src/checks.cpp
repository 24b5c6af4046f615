#include "triham/frobenius/checks.hpp"

#include <algorithm>
#include <cmath>

namespace triham::frobenius {

double check_wdvv(const Prepotential& F, const std::vector<CVector>& samples) {
    const int n = F.dim();
    double worst = 0;
    for (const auto& t : samples) {
        FrobeniusPoint pt = evaluate_point(F, t);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int g = 0; g < n; ++g)
                    for (int d = 0; d < n; ++d) {
                        cdouble lhs(0, 0), rhs(0, 0);
                        for (int m = 0; m < n; ++m) {
                            lhs += pt.c_up(m, a, b) * pt.c(m, g, d);
                            rhs += pt.c_up(m, b, g) * pt.c(m, a, d);
                        }
                        worst = std::max(worst, std::abs(lhs - rhs));
                    }
    }
    return worst;
}

double check_unit(const FrobeniusPoint& pt) {
    const int n = pt.eta.rows();
    double worst = 0;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            worst = std::max(worst, std::abs(pt.c(0, a, b) - pt.eta(a, b)));
    return worst;
}

double check_quasihomogeneity(const Prepotential& F, double lambda, const CVector& t) {
    const int n = F.dim();
    if (!(lambda > 0)) fail("BadScaling", "lambda must be positive");
    CVector ts(n);
    for (int a = 0; a < n; ++a) ts(a) = std::pow(lambda, F.degrees()[a]) * t(a);
    Tensor3 c = F.third_derivatives(t);
    Tensor3 cs = F.third_derivatives(ts);
    double worst = 0;
    const double d = F.charge();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int g = 0; g < n; ++g) {
                double w = 3.0 - d - F.degrees()[a] - F.degrees()[b] - F.degrees()[g];
                worst = std::max(worst, std::abs(cs(a, b, g) - std::pow(lambda, w) * c(a, b, g)));
            }
    return worst;
}

TrihamResult check_trihamiltonian(const Prepotential& F) {
    const int n = F.dim();
    if (n % 2 != 0) fail("OddDimension", "tri-hamiltonian structure needs even dimension");
    std::vector<double> mus(n);
    for (int a = 0; a < n; ++a) mus[a] = F.mu(a);
    std::sort(mus.begin(), mus.end());
    const double tol = 1e-12;
    double mu = mus.back();
    if (!(mu > tol)) return {false, 0.0};
    for (int k = 0; k < n / 2; ++k) {
        if (std::abs(mus[k] + mu) > tol) return {false, 0.0};
        if (std::abs(mus[n - 1 - k] - mu) > tol) return {false, 0.0};
    }
    return {true, mu};
}

Tensor3 christoffel_third(const FrobeniusPoint& pt) {
    const int n = pt.eta.rows();
    Tensor3 G(n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int g = 0; g < n; ++g) {
                cdouble v(0, 0);
                for (int nu = 0; nu < n; ++nu)
                    v += (1.0 - pt.mu_hat(b) + pt.mu_hat(nu)) * pt.g(b, nu) * pt.c_up(a, nu, g);
                G(a, b, g) = v;
            }
    return G;
}

Tensor3 christoffel_intersection(const FrobeniusPoint& pt) {
    const int n = pt.eta.rows();
    Tensor3 G(n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int g = 0; g < n; ++g) {
                // c^{ab}_g with both upper indices
                cdouble cupup(0, 0);
                for (int m = 0; m < n; ++m) cupup += pt.eta_inv(b, m) * pt.c_up(a, m, g);
                G(a, b, g) = (0.5 - pt.mu_hat(b)) * cupup;
            }
    return G;
}

Tensor4 curvature_contravariant(const std::function<Tensor3(const CVector&)>& gamma_field,
                                const std::function<CMatrix(const CVector&)>& metric_field,
                                const CVector& t, double h) {
    const CMatrix metric = metric_field(t);
    const int n = metric.rows();
    Eigen::FullPivLU<CMatrix> lu(metric);
    if (!lu.isInvertible()) fail("Singular", "metric not invertible at the point");

    const Tensor3 G = gamma_field(t);

    // dG[l](a,b,g) = d/dt^l Gamma^{ab}_g by central differences
    std::vector<Tensor3> dG(n);
    for (int l = 0; l < n; ++l) {
        CVector tp = t, tm = t;
        tp(l) += h;
        tm(l) -= h;
        Tensor3 Gp = gamma_field(tp), Gm = gamma_field(tm);
        dG[l] = Tensor3(n);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int g = 0; g < n; ++g) dG[l](a, b, g) = (Gp(a, b, g) - Gm(a, b, g)) / (2 * h);
    }

    Tensor4 R(n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int g = 0; g < n; ++g)
                for (int d = 0; d < n; ++d) {
                    cdouble v(0, 0);
                    for (int l = 0; l < n; ++l) {
                        v += G(a, b, l) * G(l, g, d) - G(a, g, l) * G(l, b, d);
                        v += metric(a, l) * (dG[l](b, g, d) - dG[d](b, g, l));
                    }
                    R(a, b, g, d) = v;
                }
    return R;
}

FlatPencilResiduals check_flat_pencil(const Prepotential& F, const CVector& t, double h) {
    const int n = F.dim();
    CVector tp = t, tm = t;
    tp(0) += h;
    tm(0) -= h;
    FrobeniusPoint p0 = evaluate_point(F, t);
    FrobeniusPoint pp = evaluate_point(F, tp);
    FrobeniusPoint pm = evaluate_point(F, tm);

    double r1 = 0, r2 = 0, r3 = 0;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            cdouble d1 = (pp.eta_tilde(a, b) - pm.eta_tilde(a, b)) / (2 * h);
            cdouble d2 =
                (pp.eta_tilde(a, b) - 2.0 * p0.eta_tilde(a, b) + pm.eta_tilde(a, b)) / (h * h);
            cdouble dU = (pp.U(a, b) - pm.U(a, b)) / (2 * h);
            r1 = std::max(r1, std::abs(d1 - 2.0 * p0.g(a, b)));
            r2 = std::max(r2, std::abs(d2 - 2.0 * p0.eta_inv(a, b)));
            r3 = std::max(r3, std::abs(dU - (a == b ? cdouble(1, 0) : cdouble(0, 0))));
        }
    return {r1, r2, r3};
}

double check_wwdvv(const FrobeniusPoint& pt) {
    const int n = pt.eta.rows();
    double worst = 0;
    // (mu^2 (e_a . e_b)) . e_g vs e_a . (mu^2 (e_b . e_g)), components in c_up
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int g = 0; g < n; ++g)
                for (int d = 0; d < n; ++d) {
                    cdouble lhs(0, 0), rhs(0, 0);
                    for (int m = 0; m < n; ++m) {
                        lhs += pt.c_up(m, a, b) * pt.mu_hat(m) * pt.mu_hat(m) * pt.c_up(d, m, g);
                        rhs += pt.c_up(m, b, g) * pt.mu_hat(m) * pt.mu_hat(m) * pt.c_up(d, a, m);
                    }
                    worst = std::max(worst, std::abs(lhs - rhs));
                }
    return worst;
}

}  // namespace triham::frobenius
