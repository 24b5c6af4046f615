#pragma once

// Test-only oracles, independent of the library implementation paths they
// cross-check.

#include <complex>
#include <cstdlib>

namespace oracles {

using cdouble = std::complex<double>;

/// Carlson symmetric form R_F(x, y, z) by the standard duplication algorithm;
/// valid for complex arguments off the negative real axis.
inline cdouble carlson_rf(cdouble x, cdouble y, cdouble z) {
    for (int it = 0; it < 200; ++it) {
        cdouble sx = std::sqrt(x), sy = std::sqrt(y), sz = std::sqrt(z);
        cdouble lam = sx * sy + sy * sz + sz * sx;
        x = 0.25 * (x + lam);
        y = 0.25 * (y + lam);
        z = 0.25 * (z + lam);
        cdouble m = (x + y + z) / 3.0;
        double spread = std::max({std::abs(x - m), std::abs(y - m), std::abs(z - m)});
        if (spread < 1e-14 * std::abs(m)) {
            cdouble X = 1.0 - x / m, Y = 1.0 - y / m, Z = -(X + Y);
            cdouble e2 = X * Y - Z * Z, e3 = X * Y * Z;
            return (1.0 + (-0.1 * e2 + e3 / 14.0) + e2 * e2 / 24.0 - 3.0 * e2 * e3 / 44.0) /
                   std::sqrt(m);
        }
    }
    std::abort();
}

/// Complete elliptic period of w^2 = t(1-t)(s-t) over [0, 1]:
/// int_0^1 dt / sqrt(t(1-t)(s-t)) = 2 R_F(0, s-1, s).
inline cdouble complete_cubic_period(cdouble s) {
    return 2.0 * carlson_rf(cdouble(0, 0), s - 1.0, s);
}

/// Appell F1(a; b1, b2; c; x, y) by the raw double series; |x|,|y| <= 0.7.
inline cdouble appell_f1_series(double a, double b1, double b2, double c, cdouble x, cdouble y,
                                int terms = 80) {
    cdouble total(0, 0);
    // (a)_{m+n} (b1)_m (b2)_n / ((c)_{m+n} m! n!) x^m y^n, built by recurrences
    for (int m = 0; m < terms; ++m) {
        double poch_b1 = 1;
        for (int k = 0; k < m; ++k) poch_b1 *= (b1 + k);
        double fact_m = 1;
        for (int k = 2; k <= m; ++k) fact_m *= k;
        cdouble xm = std::pow(x, m);
        for (int n = 0; n < terms; ++n) {
            double poch_a = 1, poch_c = 1, poch_b2 = 1, fact_n = 1;
            for (int k = 0; k < m + n; ++k) {
                poch_a *= (a + k);
                poch_c *= (c + k);
            }
            for (int k = 0; k < n; ++k) poch_b2 *= (b2 + k);
            for (int k = 2; k <= n; ++k) fact_n *= k;
            total += poch_a * poch_b1 * poch_b2 / (poch_c * fact_m * fact_n) * xm *
                     std::pow(y, n);
        }
    }
    return total;
}

}  // namespace oracles
