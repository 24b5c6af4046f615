#include "triham/numkit/quadrature.hpp"

#include <cmath>

namespace triham::numkit {

namespace {

// Gauss-Kronrod 7-15 nodes/weights on [-1, 1].
const double XGK[8] = {0.991455371120813, 0.949107912342759, 0.864864423359769,
                       0.741531185599394, 0.586087235467691, 0.405845151377397,
                       0.207784955007898, 0.0};
const double WGK[8] = {0.022935322010529, 0.063092092629979, 0.104790010322250,
                       0.140653259715525, 0.169004726639267, 0.190350578064785,
                       0.204432940075298, 0.209482141084728};
const double WG[4] = {0.129484966168870, 0.279705391489277, 0.381830050505119,
                      0.417959183673469};

struct GK {
    cdouble kronrod;
    double err;
};

GK gk15(const std::function<cdouble(double)>& g, double a, double b) {
    const double c = 0.5 * (a + b), hw = 0.5 * (b - a);
    cdouble fc = g(c);
    cdouble resk = fc * WGK[7];
    cdouble resg = fc * WG[3];
    for (int j = 0; j < 7; ++j) {
        cdouble f1 = g(c - hw * XGK[j]);
        cdouble f2 = g(c + hw * XGK[j]);
        resk += WGK[j] * (f1 + f2);
        if (j % 2 == 1) resg += WG[j / 2] * (f1 + f2);
    }
    resk *= hw;
    resg *= hw;
    return {resk, std::abs(resk - resg)};
}

void adapt(const std::function<cdouble(double)>& g, double a, double b, double tol, int depth,
           long& budget, cdouble& acc) {
    if (--budget < 0) fail("NoConvergence", "quadrature refinement budget exhausted");
    GK r = gk15(g, a, b);
    if (!is_finite(r.kronrod)) fail("NonFinite", "non-finite quadrature sample");
    // roundoff floor: the Gauss/Kronrod difference cannot resolve below
    // machine noise of the local magnitude
    const double floor = 5e-16 * (1.0 + std::abs(r.kronrod));
    if (r.err <= std::max(tol, floor) || depth >= 48) {
        if (depth >= 48 && r.err > 64 * std::max(tol, floor))
            fail("NoConvergence", "quadrature did not converge (max depth)");
        acc += r.kronrod;
        return;
    }
    double m = 0.5 * (a + b);
    adapt(g, a, m, 0.5 * tol, depth + 1, budget, acc);
    adapt(g, m, b, 0.5 * tol, depth + 1, budget, acc);
}

}  // namespace

cdouble quad_param01(const std::function<cdouble(double)>& g, double tol) {
    if (!(tol > 0)) fail("BadTolerance", "tol must be positive");
    long budget = 400000;
    cdouble acc(0, 0);
    adapt(g, 0.0, 1.0, tol, 0, budget, acc);
    return acc;
}

cdouble contour_quadrature(const std::function<cdouble(cdouble)>& f, const CPath& path,
                           double tol) {
    path.validate();
    if (!(tol > 0)) fail("BadTolerance", "tol must be positive");
    cdouble total(0, 0);
    const size_t nseg = path.segments();
    for (size_t k = 0; k < nseg; ++k) {
        const cdouble z0 = path.pts[k], dir = path.pts[k + 1] - z0;
        auto g = [&](double x) { return dir * f(z0 + x * dir); };
        long budget = 400000;
        cdouble acc(0, 0);
        adapt(g, 0.0, 1.0, tol / static_cast<double>(nseg), 0, budget, acc);
        total += acc;
    }
    return total;
}

}  // namespace triham::numkit
