#include "triham/hurwitz/a3.hpp"

#include <algorithm>

#include "triham/numkit/branch.hpp"
#include "triham/numkit/roots.hpp"

namespace triham::hurwitz {

namespace {

constexpr double kGuard = 1e-8;

void guard_t(cdouble t) {
    for (cdouble bad : {cdouble(0, 0), cdouble(1, 0), cdouble(-1, 0), cdouble(-2, 0),
                        cdouble(-0.5, 0)})
        if (std::abs(t - bad) < kGuard) fail("DomainViolation", "t too close to a singular value");
}

cdouble pow_principal(cdouble z, double p) { return std::pow(z, p); }

std::array<cdouble, 4> solve_roots(cdouble t, cdouble eps) {
    auto c = a3_superpotential_coeffs(t, eps);
    auto r = numkit::quartic_roots(c[0], c[1], c[2], c[3], c[4]);
    double scale = 0;
    for (auto& z : r) scale = std::max(scale, std::abs(z));
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (std::abs(r[i] - r[j]) < 1e-8 * std::max(1.0, scale))
                fail("RootCollision", "superpotential roots too close");
    return r;
}

// greedy-but-exhaustive matching of new roots to previous ones
std::array<cdouble, 4> match_roots(const std::array<cdouble, 4>& prev,
                                   std::array<cdouble, 4> fresh) {
    std::array<int, 4> perm = {0, 1, 2, 3};
    std::array<int, 4> best = perm;
    double best_cost = 1e300;
    std::sort(perm.begin(), perm.end());
    do {
        double cost = 0;
        for (int i = 0; i < 4; ++i) cost += std::abs(fresh[perm[i]] - prev[i]);
        if (cost < best_cost) {
            best_cost = cost;
            best = perm;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::array<cdouble, 4> out;
    for (int i = 0; i < 4; ++i) out[i] = fresh[best[i]];
    return out;
}

struct ColumnGeometry {
    cdouble a, m, x, y, xi;
};

ColumnGeometry column_geometry(const std::array<cdouble, 4>& xi, int j) {
    ColumnGeometry g;
    const cdouble x1 = xi[(j + 1) % 4] - xi[j];
    const cdouble x2 = xi[(j + 2) % 4] - xi[j];
    const cdouble x3 = xi[(j + 3) % 4] - xi[j];
    g.a = x1;
    g.m = x2 * (-x3);  // xi_{(i+2)i} * xi_{i(i+3)}
    g.x = x1 / x2;
    g.y = x1 / x3;
    g.xi = xi[j];
    return g;
}

A3ChiState::Column anchor_column(const std::array<cdouble, 4>& roots, int j) {
    A3ChiState::Column c;
    ColumnGeometry g = column_geometry(roots, j);
    c.log_a = std::log(g.a);
    c.log_m = std::log(g.m);
    c.rad = FgRadicals::principal(g.x, g.y);
    c.fsign = 1.0;
    return c;
}

cdouble column_value_entry(const A3ChiState::Column& c, const ColumnGeometry& g, int comp) {
    auto [f, gg] = fg_from_radicals(c.rad, g.x, g.y);
    f *= c.fsign;
    cdouble pref = std::exp(-0.5 * c.log_a - 0.75 * c.log_m);
    if (comp == 0) return pref * (g.a * f + 2.0 * g.xi * gg);
    return pref * gg;
}

Eigen::Vector2cd column_value(const A3ChiState& st, int j) {
    ColumnGeometry g = column_geometry(st.roots, j);
    Eigen::Vector2cd out;
    out(0) = column_value_entry(st.col[j], g, 0);
    out(1) = column_value_entry(st.col[j], g, 1);
    return out;
}

std::array<cdouble, 4> apply_labels(const std::array<cdouble, 4>& sorted, int rotation,
                                    bool reversed) {
    std::array<cdouble, 4> out;
    for (int k = 0; k < 4; ++k) {
        int idx = reversed ? (rotation - k % 4 + 8) % 4 : (rotation + k) % 4;
        out[k] = sorted[idx];
    }
    return out;
}

// single continuation hop with continuity enforcement; used by both the
// adaptive walk and the anchor's finite-difference probes
A3ChiState hop(const A3ChiState& from, cdouble t, cdouble eps) {
    A3ChiState st = from;
    st.t = t;
    st.eps = eps;
    st.roots = match_roots(from.roots, solve_roots(t, eps));
    for (int j = 0; j < 2; ++j) {
        ColumnGeometry g = column_geometry(st.roots, j);
        st.col[j].log_a = numkit::continuous_log(g.a, from.col[j].log_a);
        st.col[j].log_m = numkit::continuous_log(g.m, from.col[j].log_m);
        st.col[j].rad = FgRadicals::continued(from.col[j].rad, g.x, g.y);
    }
    return st;
}

double hop_movement(const A3ChiState& a, const A3ChiState& b) {
    double m = 0;
    double sep = 1e300;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) sep = std::min(sep, std::abs(a.roots[i] - a.roots[j]));
    for (int i = 0; i < 4; ++i) m = std::max(m, std::abs(a.roots[i] - b.roots[i]) / sep);
    for (int j = 0; j < 2; ++j) {
        m = std::max(m, b.col[j].rad.movement(a.col[j].rad));
        m = std::max(m, std::abs(b.col[j].log_a - a.col[j].log_a));
        m = std::max(m, std::abs(b.col[j].log_m - a.col[j].log_m));
    }
    return m;
}

double ode_residual_at(const A3ChiState& st) {
    const cdouble s = a3_s_of_t(st.t);
    const fuchsian::ResidueSystem sys = fuchsian::reduce_B(a3_phi(st.t), kA3Mu, s);
    const Matrix2c M = sys.rhs(st.eps);
    const double h = 1e-6 * std::max(1.0, std::abs(st.eps));
    A3ChiState sp = hop(st, st.t, st.eps + h);
    A3ChiState sm = hop(st, st.t, st.eps - h);
    double worst = 0;
    for (int j = 0; j < 2; ++j) {
        Eigen::Vector2cd d = (column_value(sp, j) - column_value(sm, j)) / (2.0 * h);
        Eigen::Vector2cd chi = column_value(st, j);
        Eigen::Vector2cd defect = d - M * chi;
        double scale = std::max(1e-12, (M * chi).cwiseAbs().maxCoeff());
        worst = std::max(worst, defect.cwiseAbs().maxCoeff() / scale);
    }
    return worst;
}

}  // namespace

cdouble a3_s_of_t(cdouble t) {
    const cdouble d = 1.0 + 2.0 * t;
    return t * (2.0 + t) * (2.0 + t) * (2.0 + t) / (d * d * d);
}

cdouble a3_t_from_s(cdouble s, cdouble t_hint) {
    // t(2+t)^3 = s(1+2t)^3  <=>  t^4 + (6-8s)t^3 + (12-12s)t^2 + (8-6s)t - s = 0
    auto roots = numkit::quartic_roots(1.0, 6.0 - 8.0 * s, 12.0 - 12.0 * s, 8.0 - 6.0 * s, -s);
    cdouble best = roots[0];
    for (const auto& r : roots)
        if (std::abs(r - t_hint) < std::abs(best - t_hint)) best = r;
    // one Newton step against the defining relation tightens the companion
    // eigenvalue
    for (int it = 0; it < 2; ++it) {
        cdouble d = 1.0 + 2.0 * best;
        cdouble fval = best * std::pow(2.0 + best, 3) - s * d * d * d;
        cdouble fp = std::pow(2.0 + best, 3) + 3.0 * best * std::pow(2.0 + best, 2) -
                     6.0 * s * d * d;
        if (std::abs(fp) < 1e-300) break;
        best -= fval / fp;
    }
    return best;
}

Matrix3c a3_phi(cdouble t) {
    guard_t(t);
    const cdouble r1sq = (2.0 + t) * (1.0 + 2.0 * t);
    const cdouble r2sq = (t - 1.0) * (1.0 + 2.0 * t);
    const cdouble r3sq = (t - 1.0) * (2.0 + t);
    if (r1sq.real() <= 0 || r2sq.real() <= 0 || r3sq.real() <= 0 ||
        (1.0 + 2.0 * t).real() <= 0 || (2.0 + t).real() <= 0 || (t - 1.0).real() <= 0)
        fail("DomainViolation", "t outside the canonical branch domain");

    const cdouble r1 = std::sqrt(r1sq);
    const cdouble r2 = std::sqrt(r2sq);
    const cdouble r3 = cdouble(0, 1) * std::sqrt(r3sq);  // sqrt((1-t)(2+t)), upper-window branch
    const cdouble sq_2pt = std::sqrt(2.0 + t);
    const cdouble sq_tm1 = std::sqrt(t - 1.0);
    const cdouble p34 = pow_principal(1.0 + 2.0 * t, 0.75);
    const cdouble p54 = pow_principal(1.0 + 2.0 * t, 1.25);

    Matrix3c phi;
    phi(0, 0) = p34 / (2.0 * r1);
    phi(0, 1) = (-1.0 - t) / r1;
    phi(0, 2) = (1.0 + 3.0 * t + t * t) / (sq_2pt * p54);
    phi(1, 0) = p34 / (2.0 * r2);
    phi(1, 1) = t / r2;
    phi(1, 2) = (-1.0 - t + t * t) / (sq_tm1 * p54);
    phi(2, 0) = p34 / (2.0 * r3);
    phi(2, 1) = 1.0 / r3;
    phi(2, 2) = (1.0 - t - t * t) / (r3 * p34);
    return phi;
}

darboux::DEState a3_abc(cdouble t) {
    Matrix3c phi = a3_phi(t);
    Matrix3c mu_hat = Matrix3c::Zero();
    mu_hat(0, 0) = kA3Mu;
    mu_hat(2, 2) = -kA3Mu;
    Matrix3c V = phi * mu_hat * phi.inverse();
    darboux::DEState st;
    st.s = a3_s_of_t(t);
    st.a = 0.5 * (V(2, 1) - V(1, 2));
    st.b = 0.5 * (V(0, 2) - V(2, 0));
    st.c = 0.5 * (V(1, 0) - V(0, 1));
    return st;
}

std::array<cdouble, 5> a3_superpotential_coeffs(cdouble t, cdouble eps) {
    guard_t(t);
    const cdouble d = 1.0 + 2.0 * t;
    const cdouble c2 = -2.0 * (1.0 + t + t * t) / pow_principal(d, 1.5);
    const cdouble c1 = 4.0 * t * (1.0 + t) / pow_principal(d, 2.25);
    const cdouble c0 =
        (1.0 + t) * (1.0 + t) * (1.0 + 4.0 * t + t * t) / (d * d * d) - eps;
    return {cdouble(1, 0), cdouble(0, 0), c2, c1, c0};
}

A3ChiState a3_chi_anchor(cdouble t, cdouble eps) {
    std::array<cdouble, 4> fresh = solve_roots(t, eps);
    std::sort(fresh.begin(), fresh.end(), [](cdouble a, cdouble b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });

    A3ChiState best{};
    double best_res = 1e300;
    for (bool rev : {false, true}) {
        for (int rot = 0; rot < 4; ++rot) {
            A3ChiState st{};
            st.t = t;
            st.eps = eps;
            st.rotation = rot;
            st.reversed = rev;
            st.roots = apply_labels(fresh, rot, rev);
            bool bad = false;
            try {
                for (int j = 0; j < 2; ++j) st.col[j] = anchor_column(st.roots, j);
                // per-column relative sign of the f piece
                for (int j = 0; j < 2; ++j) {
                    st.col[j].fsign = 1.0;
                    double rp = ode_residual_at(st);
                    st.col[j].fsign = -1.0;
                    double rm = ode_residual_at(st);
                    if (rp <= rm) st.col[j].fsign = 1.0;
                }
            } catch (const Error&) {
                bad = true;
            }
            if (bad) continue;
            double res = ode_residual_at(st);
            if (res < best_res) {
                best_res = res;
                best = st;
            }
        }
    }
    if (best_res > 1e-3)
        fail("BranchInconsistency",
             "no root labelling satisfies the Fuchsian system at the anchor");
    return best;
}

A3ChiState a3_chi_continue(const A3ChiState& from, cdouble t, cdouble eps) {
    A3ChiState cur = from;
    // adaptive straight-line walk in (t, eps)
    struct Leg {
        cdouble t0, e0, t1, e1;
        int depth;
    };
    std::vector<Leg> stack{{from.t, from.eps, t, eps, 0}};
    while (!stack.empty()) {
        Leg leg = stack.back();
        stack.pop_back();
        A3ChiState nxt = hop(cur, leg.t1, leg.e1);
        if (hop_movement(cur, nxt) > 0.25) {
            if (leg.depth > 40) fail("BranchInconsistency", "continuation step underflow");
            cdouble tm = 0.5 * (leg.t0 + leg.t1), em = 0.5 * (leg.e0 + leg.e1);
            stack.push_back({tm, em, leg.t1, leg.e1, leg.depth + 1});
            stack.push_back({leg.t0, leg.e0, tm, em, leg.depth + 1});
            continue;
        }
        cur = nxt;
    }
    return cur;
}

Matrix2c a3_chi_value(const A3ChiState& st) {
    Matrix2c chi;
    chi.col(0) = column_value(st, 0);
    chi.col(1) = column_value(st, 1);
    return chi;
}

Matrix2c a3_chi(cdouble t, cdouble eps) { return a3_chi_value(a3_chi_anchor(t, eps)); }

frobenius::Prepotential pavlyk_prepotential() {
    using frobenius::MonomialTerm;
    using frobenius::Polynomial;
    using frobenius::RadicalTerm;
    std::vector<MonomialTerm> mono = {
        {cdouble(0.5, 0), {2, 0, 0, 1}},
        {cdouble(1.0, 0), {1, 1, 1, 0}},
        {cdouble(1.0 / 6, 0), {0, 2, 0, 1}},
        {cdouble(-1.0 / 108, 0), {0, 1, 0, 3}},
        {cdouble(1.0 / 12, 0), {0, 1, 2, 1}},
        {cdouble(19.0 / 103680, 0), {0, 0, 0, 5}},
        {cdouble(7.0 / 3456, 0), {0, 0, 2, 3}},
        {cdouble(1.0 / 768, 0), {0, 0, 4, 1}},
    };
    Polynomial Q;
    Q.n = 4;
    Q.terms = {{cdouble(48, 0), {0, 1, 0, 0}},
               {cdouble(3, 0), {0, 0, 2, 0}},
               {cdouble(1, 0), {0, 0, 0, 2}}};
    RadicalTerm rad{cdouble(1.0 / 12960, 0), Q, 2.5};
    CMatrix eta = CMatrix::Zero(4, 4);
    for (int a = 0; a < 4; ++a) eta(a, 3 - a) = 1.0;
    return frobenius::Prepotential(4, 0.5, {1.0, 1.0, 0.5, 0.5}, eta, std::move(mono), {rad});
}

}  // namespace triham::hurwitz
