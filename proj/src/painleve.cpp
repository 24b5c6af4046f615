#include "triham/fuchsian/painleve.hpp"

namespace triham::fuchsian {

cdouble painleve_y(const ResidueSystem& sys) {
    const cdouble b1 = sys.residues[0](0, 1);
    const cdouble b2 = sys.residues[1](0, 1);
    const cdouble b3 = sys.residues[2](0, 1);
    if (std::abs(b1) + std::abs(b2) + std::abs(b3) == 0.0)
        fail("DegeneratePolynomial", "all top-right residue entries vanish");
    const cdouble quad = b1 + b2 + b3;
    const double scale = std::max({std::abs(b1), std::abs(b2), std::abs(b3)});
    if (std::abs(quad) > 1e-9 * scale)
        fail("DegeneratePolynomial", "top-right entry of the residue at infinity is nonzero");
    // b1 (e-1)(e-s) + b2 e(e-s) + b3 e(e-1) = -[b1(1+s) + b2 s + b3] e + b1 s
    const cdouble lin = b1 * (1.0 + sys.s) + b2 * sys.s + b3;
    if (std::abs(lin) < 1e-13 * scale)
        fail("DegeneratePolynomial", "linear coefficient vanishes");
    return b1 * sys.s / lin;
}

double pvi_residual(const PainleveSample& g, cdouble mu, PviVariant variant) {
    const size_t n = g.s.size();
    if (n != g.y.size() || n < 3) fail("GridTooCoarse", "need at least 3 uniform samples");
    const cdouble h = g.s[1] - g.s[0];
    for (size_t k = 1; k + 1 < n; ++k)
        if (std::abs((g.s[k + 1] - g.s[k]) - h) > 1e-9 * std::abs(h))
            fail("BadGrid", "grid must be uniform in s");
    if (std::abs(h) > 0.1) fail("GridTooCoarse", "grid spacing too large for second differences");

    double worst = 0;
    for (size_t k = 1; k + 1 < n; ++k) {
        const cdouble s = g.s[k];
        const cdouble y = g.y[k];
        if (std::abs(y) < 1e-12 || std::abs(y - 1.0) < 1e-12 || std::abs(y - s) < 1e-12)
            fail("BadSample", "y touches one of the excluded points {0, 1, s}");
        const cdouble yp = (g.y[k + 1] - g.y[k - 1]) / (2.0 * h);
        const cdouble ypp = (g.y[k + 1] - 2.0 * y + g.y[k - 1]) / (h * h);

        const cdouble common =
            0.5 * (1.0 / y + 1.0 / (y - 1.0) + 1.0 / (y - s)) * yp * yp -
            (1.0 / s + 1.0 / (s - 1.0) + 1.0 / (y - s)) * yp;
        const cdouble pref = 0.5 * y * (y - 1.0) * (y - s) / (s * s * (s - 1.0) * (s - 1.0));

        cdouble bracket;
        if (variant == PviVariant::PVImu) {
            bracket = (2.0 * mu - 1.0) * (2.0 * mu - 1.0) +
                      s * (s - 1.0) / ((y - s) * (y - s));
        } else {
            bracket = (mu - 1.0) * (mu - 1.0) - mu * mu * s / (y * y) +
                      mu * mu * (s - 1.0) / ((y - 1.0) * (y - 1.0)) +
                      (1.0 - mu * mu) * s * (s - 1.0) / ((y - s) * (y - s));
        }
        worst = std::max(worst, std::abs(ypp - (common + pref * bracket)));
    }
    return worst;
}

}  // namespace triham::fuchsian
