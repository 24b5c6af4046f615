#include "triham/lift4d/reconstruct.hpp"

namespace triham::lift4d {

Reconstruction reconstruct(const TransitionFrame& frame) {
    const int n = static_cast<int>(frame.psi.rows());
    const int m = frame.marked_column;
    if (m < 0 || m >= n) fail("BadFrame", "marked column out of range");
    for (int i = 0; i < n; ++i)
        if (std::abs(frame.psi(i, m)) < 1e-12)
            fail("MarkedColumnZero", "marked column vanishes at a component");

    Reconstruction rec;
    rec.eta = frame.psi.transpose() * frame.psi;
    Eigen::FullPivLU<CMatrix> lu(rec.eta);
    if (!lu.isInvertible()) fail("SingularFrame", "reconstructed eta is degenerate");
    rec.eta_inv = lu.inverse();

    rec.dt_du = CMatrix::Zero(n, n);
    for (int a = 0; a < n; ++a)
        for (int i = 0; i < n; ++i) {
            cdouble v(0, 0);
            for (int b = 0; b < n; ++b) v += rec.eta_inv(a, b) * frame.psi(i, m) * frame.psi(i, b);
            rec.dt_du(a, i) = v;
        }

    rec.c = frobenius::Tensor3(n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int g = 0; g < n; ++g) {
                cdouble v(0, 0);
                for (int i = 0; i < n; ++i)
                    v += frame.psi(i, a) * frame.psi(i, b) * frame.psi(i, g) / frame.psi(i, m);
                rec.c(a, b, g) = v;
            }
    return rec;
}

double associativity_residual(const frobenius::Tensor3& c, const CMatrix& eta_inv) {
    const int n = c.dim();
    double worst = 0;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int g = 0; g < n; ++g)
                for (int d = 0; d < n; ++d) {
                    cdouble lhs(0, 0), rhs(0, 0);
                    for (int mm = 0; mm < n; ++mm)
                        for (int nn = 0; nn < n; ++nn) {
                            lhs += c(a, b, mm) * eta_inv(mm, nn) * c(nn, g, d);
                            rhs += c(b, g, mm) * eta_inv(mm, nn) * c(nn, a, d);
                        }
                    worst = std::max(worst, std::abs(lhs - rhs));
                }
    return worst;
}

FlatPoint flat_point(const TransitionFrame& frame) {
    const int n = static_cast<int>(frame.psi.rows());
    Reconstruction rec = reconstruct(frame);
    const double charge = -2.0 * frame.mu_hat(frame.marked_column).real();
    std::vector<double> deg(n);
    for (int a = 0; a < n; ++a) deg[a] = 0.5 * (2.0 - charge) - frame.mu_hat(a).real();

    FlatPoint out;
    out.t = CVector::Zero(n);
    for (int a = 0; a < n; ++a) {
        if (std::abs(deg[a]) < 1e-12) fail("ZeroDegree", "flat coordinate of degree zero");
        cdouble acc(0, 0);
        for (int i = 0; i < n; ++i) acc += frame.chart[i] * rec.dt_du(a, i);
        out.t(a) = acc / deg[a];
    }

    // F = sum_a d_a t^a H_a / (3-d),  H_a = sum_b d_b t^b G_ab / (3-d-d_a),
    // G_ab = sum_g d_g t^g c_gab / (3-d-d_a-d_b); quadratic terms dropped.
    const double total = 3.0 - charge;
    cdouble F(0, 0);
    for (int a = 0; a < n; ++a) {
        cdouble Ha(0, 0);
        for (int b = 0; b < n; ++b) {
            cdouble Gab(0, 0);
            for (int g = 0; g < n; ++g) Gab += deg[g] * out.t(g) * rec.c(g, a, b);
            double den2 = total - deg[a] - deg[b];
            if (std::abs(den2) < 1e-12) fail("ZeroDegree", "resonant degree in F recursion");
            Ha += deg[b] * out.t(b) * (Gab / den2);
        }
        double den1 = total - deg[a];
        if (std::abs(den1) < 1e-12 || std::abs(total) < 1e-12)
            fail("ZeroDegree", "resonant degree in F recursion");
        F += deg[a] * out.t(a) * (Ha / den1);
    }
    out.F = F / total;
    return out;
}

CVector flat_by_quadrature(
    const std::function<TransitionFrame(const std::vector<cdouble>&)>& frame_family,
    const std::vector<cdouble>& from, const std::vector<cdouble>& to, const CVector& t_from,
    int n_steps) {
    const int n = static_cast<int>(from.size());
    if (n_steps < 1 || n_steps % 2 != 0) fail("BadGrid", "n_steps must be even and positive");

    auto chart_at = [&](double tau) {
        std::vector<cdouble> c(n);
        for (int i = 0; i < n; ++i) c[i] = from[i] + tau * (to[i] - from[i]);
        return c;
    };
    auto integrand = [&](double tau) -> CVector {
        Reconstruction rec = reconstruct(frame_family(chart_at(tau)));
        CVector d(n);
        for (int a = 0; a < n; ++a) {
            cdouble acc(0, 0);
            for (int i = 0; i < n; ++i) acc += rec.dt_du(a, i) * (to[i] - from[i]);
            d(a) = acc;
        }
        return d;
    };

    CVector acc = integrand(0.0) + integrand(1.0);
    for (int k = 1; k < n_steps; ++k) {
        double w = (k % 2 == 1) ? 4.0 : 2.0;
        acc += w * integrand(static_cast<double>(k) / n_steps);
    }
    return t_from + acc / (3.0 * n_steps);
}

}  // namespace triham::lift4d
