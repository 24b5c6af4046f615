#include "triham/numkit/ode.hpp"

#include <algorithm>
#include <cmath>

namespace triham::numkit {

namespace {

// Dormand-Prince 5(4) tableau.
constexpr double A21 = 1.0 / 5;
constexpr double A31 = 3.0 / 40, A32 = 9.0 / 40;
constexpr double A41 = 44.0 / 45, A42 = -56.0 / 15, A43 = 32.0 / 9;
constexpr double A51 = 19372.0 / 6561, A52 = -25360.0 / 2187, A53 = 64448.0 / 6561,
                 A54 = -212.0 / 729;
constexpr double A61 = 9017.0 / 3168, A62 = -355.0 / 33, A63 = 46732.0 / 5247,
                 A64 = 49.0 / 176, A65 = -5103.0 / 18656;
constexpr double B1 = 35.0 / 384, B3 = 500.0 / 1113, B4 = 125.0 / 192, B5 = -2187.0 / 6784,
                 B6 = 11.0 / 84;
// 4th-order weights (the embedded solution uses k7 = f(y5)).
constexpr double E1 = 71.0 / 57600, E3 = -71.0 / 16695, E4 = 71.0 / 1920,
                 E5 = -17253.0 / 339200, E6 = 22.0 / 525, E7 = -1.0 / 40;
constexpr double C2 = 1.0 / 5, C3 = 3.0 / 10, C4 = 4.0 / 5, C5 = 8.0 / 9;

bool finite(const CVector& v) {
    for (Eigen::Index i = 0; i < v.size(); ++i)
        if (!is_finite(v(i))) return false;
    return true;
}

}  // namespace

CVector ode_flow(const OdeRhs& rhs, const CPath& path, CVector y, double tol) {
    path.validate();
    if (!(tol > 0)) fail("BadTolerance", "tol must be positive");
    if (!finite(y)) fail("NonFinite", "initial state is not finite");

    const double path_len = path.length();
    const double hmin = 1e-13 * path_len;

    for (size_t seg = 0; seg + 1 < path.pts.size(); ++seg) {
        const cdouble z0 = path.pts[seg];
        const cdouble dir = path.pts[seg + 1] - z0;  // z(x) = z0 + x*dir, x in [0,1]
        const double seg_len = std::abs(dir);

        auto f = [&](double x, const CVector& v) -> CVector { return dir * rhs(z0 + x * dir, v); };

        double x = 0.0;
        double h = 0.1;
        CVector k1 = f(x, y);
        while (x < 1.0) {
            h = std::min(h, 1.0 - x);
            if (h * seg_len < hmin) fail("StepUnderflow", "step size underflow along path");

            CVector k2 = f(x + C2 * h, y + h * (A21 * k1));
            CVector k3 = f(x + C3 * h, y + h * (A31 * k1 + A32 * k2));
            CVector k4 = f(x + C4 * h, y + h * (A41 * k1 + A42 * k2 + A43 * k3));
            CVector k5 = f(x + C5 * h, y + h * (A51 * k1 + A52 * k2 + A53 * k3 + A54 * k4));
            CVector k6 = f(x + h, y + h * (A61 * k1 + A62 * k2 + A63 * k3 + A64 * k4 + A65 * k5));
            CVector y5 = y + h * (B1 * k1 + B3 * k3 + B4 * k4 + B5 * k5 + B6 * k6);
            CVector k7 = f(x + h, y5);
            CVector errv = h * (E1 * k1 + E3 * k3 + E4 * k4 + E5 * k5 + E6 * k6 + E7 * k7);

            if (!finite(y5)) fail("NonFinite", "state became non-finite during integration");

            // error per unit step, relative to mixed abs/rel scale
            double err = 0.0;
            for (Eigen::Index i = 0; i < y.size(); ++i) {
                double sc = tol * std::max(1.0, std::max(std::abs(y(i)), std::abs(y5(i))));
                err = std::max(err, std::abs(errv(i)) / sc);
            }
            err /= std::max(h, 1e-300);

            if (err <= 1.0) {
                x += h;
                y = std::move(y5);
                k1 = std::move(k7);  // FSAL
            }
            double fac = 0.9 * std::pow(1.0 / std::max(err, 1e-10), 0.2);
            h *= std::clamp(fac, 0.2, 5.0);
        }
    }
    return y;
}

CMatrix ode_flow_matrix(const std::function<CMatrix(cdouble)>& M, const CPath& path, CMatrix y0,
                        double tol) {
    const Eigen::Index r = y0.rows(), c = y0.cols();
    CVector v0(r * c);
    for (Eigen::Index j = 0; j < c; ++j) v0.segment(j * r, r) = y0.col(j);
    auto rhs = [&](cdouble z, const CVector& v) -> CVector {
        CMatrix mz = M(z);
        CVector out(r * c);
        for (Eigen::Index j = 0; j < c; ++j) out.segment(j * r, r) = mz * v.segment(j * r, r);
        return out;
    };
    CVector v1 = ode_flow(rhs, path, v0, tol);
    CMatrix y1(r, c);
    for (Eigen::Index j = 0; j < c; ++j) y1.col(j) = v1.segment(j * r, r);
    return y1;
}

}  // namespace triham::numkit
