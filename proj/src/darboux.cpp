#include "triham/darboux/darboux.hpp"

#include "triham/numkit/branch.hpp"
#include "triham/numkit/ode.hpp"

namespace triham::darboux {

Eigen::Vector3cd de_rhs(const DEState& st) {
    if (st.s == cdouble(0, 0) || st.s == cdouble(1, 0))
        fail("PoleAtS", "Darboux-Egoroff right-hand side has poles at s = 0, 1");
    Eigen::Vector3cd out;
    out(0) = st.b * st.c / st.s;
    out(1) = st.a * st.c / (1.0 - st.s);
    out(2) = st.a * st.b / (st.s * (st.s - 1.0));
    return out;
}

DEState de_flow(const DEState& start, const CPath& s_path, double tol) {
    s_path.validate();
    if (s_path.pts.front() != start.s) fail("BadPath", "path must start at the state's s");
    for (const auto& w : s_path.pts)
        if (w == cdouble(0, 0) || w == cdouble(1, 0)) fail("PoleAtS", "path touches a pole");

    auto rhs = [](cdouble s, const CVector& y) -> CVector {
        DEState st{s, y(0), y(1), y(2)};
        Eigen::Vector3cd d = de_rhs(st);
        CVector out(3);
        out << d(0), d(1), d(2);
        return out;
    };
    CVector y0(3);
    y0 << start.a, start.b, start.c;
    CVector y1 = numkit::ode_flow(rhs, s_path, y0, tol);
    return DEState{s_path.pts.back(), y1(0), y1(1), y1(2)};
}

Matrix3c v_from_state(const DEState& st) {
    Matrix3c V;
    V << 0, -st.c, st.b, st.c, 0, -st.a, -st.b, st.a, 0;
    return V;
}

Matrix4c lift_to_w(const DEState& st, int sign) {
    Matrix4c W;
    W << 0, -st.c, st.b, -st.a,
        st.c, 0, -st.a, -st.b,
        -st.b, st.a, 0, -st.c,
        st.a, st.b, st.c, 0;
    if (sign == -1) {
        for (int k = 0; k < 3; ++k) {
            W(3, k) = -W(3, k);
            W(k, 3) = -W(k, 3);
        }
    } else if (sign != +1) {
        fail("BadSign", "sign flag must be +1 or -1");
    }
    return W;
}

void validate_chart(const std::vector<cdouble>& chart, double min_sep) {
    for (size_t i = 0; i < chart.size(); ++i)
        for (size_t j = i + 1; j < chart.size(); ++j)
            if (std::abs(chart[i] - chart[j]) < min_sep)
                fail("CoincidentCoordinates", "canonical coordinates too close");
}

std::vector<CMatrix> side_matrices(const CMatrix& V, const std::vector<cdouble>& chart) {
    const int n = static_cast<int>(chart.size());
    if (V.rows() != n || V.cols() != n) fail("BadChart", "V and chart dimension mismatch");
    validate_chart(chart);
    std::vector<CMatrix> out;
    out.reserve(n);
    for (int i = 0; i < n; ++i) {
        CMatrix Vi = CMatrix::Zero(n, n);
        for (int k = 0; k < n; ++k) {
            if (k == i) continue;
            Vi(i, k) = V(i, k) / (chart[i] - chart[k]);
            Vi(k, i) = -V(k, i) / (chart[k] - chart[i]);
        }
        out.push_back(std::move(Vi));
    }
    return out;
}

CMatrix rotation_coefficients(
    const std::function<std::vector<cdouble>(const std::vector<cdouble>&)>& metric,
    const std::vector<cdouble>& chart, double h) {
    const int n = static_cast<int>(chart.size());
    validate_chart(chart);
    std::vector<cdouble> eta0 = metric(chart);
    std::vector<cdouble> sq0(n);
    for (int i = 0; i < n; ++i) {
        if (std::abs(eta0[i]) < 1e-300) fail("ZeroMetricCoefficient", "eta_i vanishes at chart");
        sq0[i] = std::sqrt(eta0[i]);
    }

    CMatrix G = CMatrix::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        std::vector<cdouble> up = chart, dn = chart;
        up[i] += h;
        dn[i] -= h;
        std::vector<cdouble> ep = metric(up), em = metric(dn);
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            if (std::abs(ep[j]) < 1e-300 || std::abs(em[j]) < 1e-300)
                fail("ZeroMetricCoefficient", "eta_j vanishes on stencil");
            cdouble sp = numkit::continuous_sqrt(ep[j], sq0[j]);
            cdouble sm = numkit::continuous_sqrt(em[j], sq0[j]);
            G(i, j) = (sp - sm) / (2 * h) / sq0[i];
        }
    }
    return G;
}

}  // namespace triham::darboux
