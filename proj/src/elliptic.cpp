#include "triham/hurwitz/elliptic.hpp"

#include "triham/lift4d/lift.hpp"
#include "triham/numkit/branch.hpp"
#include "triham/numkit/quadrature.hpp"

namespace triham::hurwitz {

namespace {

// longitudinal/transverse coordinates of w relative to segment [a, b]
struct FrameCoord {
    double lon, tra;
};

FrameCoord frame_coord(cdouble a, cdouble b, cdouble w) {
    cdouble e = (b - a) / std::abs(b - a);
    cdouble rel = (w - a) / e;
    return {rel.real(), rel.imag()};
}

}  // namespace

CPath acycle_contour(cdouble a, cdouble b, const std::vector<cdouble>& exclude,
                     bool allow_notch) {
    const double L = std::abs(b - a);
    if (L < 1e-10) fail("BadDomain", "coincident branch points");
    const cdouble e = (b - a) / L;
    const cdouble n = cdouble(0, 1) * e;

    double m = 0.3 * L, h = 0.3 * L;
    std::vector<cdouble> notches;
    for (const auto& w : exclude) {
        FrameCoord fc = frame_coord(a, b, w);
        if (std::abs(fc.tra) > 1e-3 * L) {
            if (fc.lon > -0.6 * L && fc.lon < 1.6 * L) h = std::min(h, 0.6 * std::abs(fc.tra));
            continue;
        }
        // excluded point essentially on the segment axis
        if (fc.lon < 0) {
            m = std::min(m, 0.6 * (-fc.lon));
        } else if (fc.lon > L) {
            m = std::min(m, 0.6 * (fc.lon - L));
        } else {
            if (!allow_notch) fail("BadDomain", "excluded point lies on the cycle segment");
            notches.push_back(w);
        }
    }
    if (m < 1e-3 * L || h < 1e-3 * L) fail("BadDomain", "no room for the a-cycle contour");
    if (notches.size() > 1) fail("BadDomain", "more than one on-segment exclusion");

    std::vector<cdouble> pts;
    const cdouble c1 = a - m * e - h * n;
    const cdouble c2 = b + m * e - h * n;
    const cdouble c3 = b + m * e + h * n;
    const cdouble c4 = a - m * e + h * n;
    if (notches.empty()) {
        pts = {c1, c2, c3, c4, c1};
    } else {
        // dodge the on-axis point from below while traversing the top edge
        const cdouble w = notches[0];
        FrameCoord fc = frame_coord(a, b, w);
        double r = std::min({0.08 * L, 0.45 * fc.lon, 0.45 * (L - fc.lon)});
        if (r < 1e-3 * L) fail("BadDomain", "on-segment exclusion too close to a branch point");
        const double h2 = 0.5 * h;
        pts = {c1,
               c2,
               c3,
               w + r * e + h * n,
               w + r * e - h2 * n,
               w - r * e - h2 * n,
               w - r * e + h * n,
               c4,
               c1};
    }
    return CPath(pts);
}

cdouble period_integral(const CPath& contour, const std::function<cdouble(cdouble)>& radicand,
                        const std::function<cdouble(cdouble)>& numerator, double tol,
                        cdouble ref_start, cdouble* start_out) {
    numkit::BranchedSqrt rho(contour, radicand, ref_start);
    if (std::abs(rho.end_value() - rho.start_value()) >
        0.5 * std::max(std::abs(rho.start_value()), 1e-300))
        fail("BranchInconsistency", "square root does not close along the cycle");
    if (start_out) *start_out = rho.start_value();
    auto g = [&](double tau) -> cdouble {
        cdouble z = rho.point_at(tau);
        return rho.tangent_at(tau) * numerator(z) / rho.at_tau(tau);
    };
    return numkit::quad_param01(g, tol);
}

EllipticData elliptic_period_data(cdouble s, double tol) {
    if (std::abs(s) < 1e-6 || std::abs(s - 1.0) < 1e-6)
        fail("BadDomain", "s collides with a branch point");
    CPath contour = acycle_contour(0.0, 1.0, {s}, /*allow_notch=*/true);
    auto radicand = [s](cdouble l) { return l * (l - 1.0) * (l - s); };
    EllipticData out;
    out.omega1 =
        period_integral(contour, radicand, [](cdouble) { return cdouble(0.5, 0); }, tol);
    cdouble num =
        period_integral(contour, radicand, [](cdouble l) { return 0.5 * l; }, tol);
    out.Ibar = num / out.omega1;
    return out;
}

cdouble elliptic_Ibar1(cdouble s, double tol) {
    if (std::abs(s) < 1e-6 || std::abs(s - 1.0) < 1e-6)
        fail("BadDomain", "s collides with a branch point");
    CPath contour = acycle_contour(0.0, 1.0, {s}, true);
    auto radicand = [s](cdouble l) { return l * (l - 1.0) * (l - s); };
    cdouble om =
        period_integral(contour, radicand, [](cdouble) { return cdouble(0.5, 0); }, tol);
    cdouble num =
        period_integral(contour, radicand, [](cdouble l) { return 0.5 / l; }, tol);
    return num / om;
}

darboux::DEState elliptic_v(cdouble s, double tol) {
    if (s.imag() == 0.0) fail("BranchCut", "Lemma-4 branches need s off the real axis");
    EllipticData d = elliptic_period_data(s, tol);
    darboux::DEState st;
    st.s = s;
    st.a = d.Ibar / (2.0 * std::sqrt(-s));
    st.b = -(d.Ibar - 1.0) / (2.0 * std::sqrt(s - 1.0));
    st.c = (d.Ibar - s) / (2.0 * std::sqrt(s * (1.0 - s)));
    return st;
}

cdouble genus1_barJ1(cdouble eps, cdouble s, double tol) {
    const cdouble P = s * (eps - 1.0) / (eps - s);
    const cdouble Q = 1.0 - eps;
    CPath contour = acycle_contour(0.0, 1.0, {P, Q}, true);
    auto radicand = [P, Q](cdouble l) { return l * (l - 1.0) * (l - P) * (l - Q); };
    cdouble om = period_integral(contour, radicand, [](cdouble) { return cdouble(1, 0); }, tol);
    cdouble num = period_integral(contour, radicand, [](cdouble l) { return 1.0 / l; }, tol);
    return num / om;
}

cdouble genus1_omega1(const std::array<cdouble, 4>& v, double tol, cdouble ref_start,
                      cdouble* start_out) {
    CPath contour = acycle_contour(v[0], v[1], {v[2], v[3]}, false);
    auto radicand = [v](cdouble l) {
        return (l - v[0]) * (l - v[1]) * (l - v[2]) * (l - v[3]);
    };
    return period_integral(contour, radicand, [](cdouble) { return cdouble(1, 0); }, tol,
                           ref_start, start_out);
}

Genus1Report elliptic_w_check(const std::array<cdouble, 4>& v, double fd_step, double tol) {
    Genus1Report rep{};
    lift4d::Chart4Params params = lift4d::chart_params(v);

    // branch reference so every stencil evaluation stays on one sheet
    cdouble ref = 0;
    cdouble omega_center = genus1_omega1(v, tol, cdouble(0, 0), &ref);

    auto omega_at = [&](const std::array<cdouble, 4>& chart) {
        return genus1_omega1(chart, tol, ref, nullptr);
    };
    auto metric = [&](const std::vector<cdouble>& chart) {
        std::array<cdouble, 4> cv;
        for (int i = 0; i < 4; ++i) cv[i] = chart[i];
        cdouble om = omega_at(cv);
        std::vector<cdouble> eta(4);
        for (int i = 0; i < 4; ++i) {
            cdouble prod(1, 0);
            for (int j = 0; j < 4; ++j)
                if (j != i) prod *= chart[i] - chart[j];
            eta[i] = 2.0 / (om * om * prod);
        }
        return eta;
    };

    std::vector<cdouble> chart(v.begin(), v.end());
    CMatrix gamma = darboux::rotation_coefficients(metric, chart, fd_step);
    Matrix4c W_num;
    for (int j = 0; j < 4; ++j)
        for (int k = 0; k < 4; ++k) W_num(j, k) = (j == k) ? cdouble(0, 0) : gamma(j, k) * (v[k] - v[j]);

    Matrix4c W_lift = darboux::lift_to_w(elliptic_v(params.s, tol));

    double best = 1e300;
    for (int mask = 0; mask < 8; ++mask) {
        Eigen::Vector4d sgn;
        sgn << 1, (mask & 1) ? -1 : 1, (mask & 2) ? -1 : 1, (mask & 4) ? -1 : 1;
        double worst = 0;
        for (int j = 0; j < 4; ++j)
            for (int k = 0; k < 4; ++k)
                worst = std::max(worst,
                                 std::abs(sgn(j) * sgn(k) * W_num(j, k) - W_lift(j, k)));
        best = std::min(best, worst);
    }
    rep.w_residual = best;

    // Lemma 5: sum_i v_i^2 d_i Omega1 = -(1/2) (sum_i v_i) Omega1
    cdouble dir(0, 0);
    for (int i = 0; i < 4; ++i) {
        std::array<cdouble, 4> up = v, dn = v;
        up[i] += fd_step;
        dn[i] -= fd_step;
        dir += v[i] * v[i] * (omega_at(up) - omega_at(dn)) / (2 * fd_step);
    }
    cdouble vsum = v[0] + v[1] + v[2] + v[3];
    rep.lemma5_residual =
        std::abs(dir + 0.5 * vsum * omega_center) / std::abs(omega_center);

    cdouble I1 = elliptic_Ibar1(params.s, tol);
    cdouble J1 = genus1_barJ1(params.eps, params.s, tol);
    rep.barj1_residual = std::abs(J1 - (params.eps * I1 - 1.0) / (params.eps - 1.0));
    const cdouble eps_big = params.eps + 40.0;
    cdouble J1b = genus1_barJ1(eps_big, params.s, tol);
    rep.barj1_limit_residual = std::abs(J1b - (eps_big * I1 - 1.0) / (eps_big - 1.0));

    return rep;
}

}  // namespace triham::hurwitz
