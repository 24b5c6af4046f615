#include "triham/hurwitz/appell.hpp"

#include "triham/numkit/branch.hpp"

namespace triham::hurwitz {

namespace {
constexpr double kDiagonalSwitch = 1e-4;

void guard_loci(cdouble x, cdouble y) {
    if (std::abs(x - 1.0) < 1e-8 || std::abs(y - 1.0) < 1e-8)
        fail("NearSingular", "within 1e-8 of the singular loci x = 1 or y = 1");
}
}  // namespace

FgRadicals FgRadicals::principal(cdouble x, cdouble y) {
    FgRadicals r;
    r.w = std::sqrt(1.0 - x);
    r.v = std::sqrt(1.0 - y);
    r.u = std::sqrt(x - y);
    r.p = std::sqrt(r.v + r.u);
    r.q = std::sqrt(r.v - r.u);
    r.r = std::sqrt(1.0 / (r.w + r.v));
    return r;
}

FgRadicals FgRadicals::continued(const FgRadicals& prev, cdouble x, cdouble y) {
    FgRadicals r;
    r.w = numkit::continuous_sqrt(1.0 - x, prev.w);
    r.v = numkit::continuous_sqrt(1.0 - y, prev.v);
    if (std::abs(x - y) < kDiagonalSwitch) {
        // f and g are even in u; re-anchor the u-chain when the diagonal is
        // near so the sqrt branch point at x = y cannot derail the tracking
        r.u = std::sqrt(x - y);
        r.p = std::sqrt(r.v + r.u);
        r.q = std::sqrt(r.v - r.u);
    } else {
        r.u = numkit::continuous_sqrt(x - y, prev.u);
        r.p = numkit::continuous_sqrt(r.v + r.u, prev.p);
        r.q = numkit::continuous_sqrt(r.v - r.u, prev.q);
    }
    r.r = numkit::continuous_sqrt(1.0 / (r.w + r.v), prev.r);
    return r;
}

double FgRadicals::movement(const FgRadicals& prev) const {
    auto rel = [](cdouble a, cdouble b) {
        return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-12});
    };
    double m = std::max({rel(w, prev.w), rel(v, prev.v), rel(r, prev.r)});
    m = std::max(m, std::max(rel(p, prev.p), rel(q, prev.q)));
    return m;
}

std::pair<cdouble, cdouble> fg_from_radicals(const FgRadicals& rad, cdouble x, cdouble y) {
    cdouble g = (1.0 / std::sqrt(2.0)) * (1.0 + 1.0 / (rad.w * rad.v)) * rad.r;
    cdouble f;
    if (std::abs(x - y) < kDiagonalSwitch) {
        cdouble W = (x - y) / (1.0 - y);
        cdouble sv = numkit::continuous_sqrt(rad.v, rad.p);  // sqrt(v), p ~ sqrt(v) here
        f = (1.0 + W / 8.0 + 7.0 * W * W / 128.0) / (rad.w * rad.v * sv);
    } else {
        f = (rad.p - rad.q) / (rad.w * rad.v * rad.u);
    }
    return {f, g};
}

cdouble appell_g(cdouble x, cdouble y) {
    guard_loci(x, y);
    auto rad = FgRadicals::principal(x, y);
    return fg_from_radicals(rad, x, y).second;
}

cdouble appell_f(cdouble x, cdouble y) {
    guard_loci(x, y);
    auto rad = FgRadicals::principal(x, y);
    return fg_from_radicals(rad, x, y).first;
}

}  // namespace triham::hurwitz
