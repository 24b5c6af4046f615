#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace triham {

using cdouble = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using Matrix2c = Eigen::Matrix2cd;
using Matrix3c = Eigen::Matrix3cd;
using Matrix4c = Eigen::Matrix4cd;

inline constexpr double kPi = 3.141592653589793238462643383279502884;

/// Error with a stable machine-readable code ("StepUnderflow", "NonFinite", ...).
struct Error : std::runtime_error {
    std::string code;
    Error(std::string c, const std::string& what_arg)
        : std::runtime_error(c + ": " + what_arg), code(std::move(c)) {}
};

[[noreturn]] inline void fail(std::string code, const std::string& msg) {
    throw Error(std::move(code), msg);
}

inline bool is_finite(cdouble z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

inline bool is_finite(const CMatrix& m) {
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            if (!is_finite(m(i, j))) return false;
    return true;
}

/// Polyline through at least two distinct consecutive waypoints.
struct CPath {
    std::vector<cdouble> pts;

    CPath() = default;
    explicit CPath(std::vector<cdouble> waypoints) : pts(std::move(waypoints)) { validate(); }

    static CPath line(cdouble a, cdouble b) { return CPath({a, b}); }

    void validate() const {
        if (pts.size() < 2) fail("BadPath", "path needs at least 2 waypoints");
        for (size_t k = 0; k + 1 < pts.size(); ++k) {
            if (pts[k] == pts[k + 1]) fail("BadPath", "consecutive waypoints coincide");
            if (!is_finite(pts[k]) || !is_finite(pts[k + 1])) fail("BadPath", "non-finite waypoint");
        }
    }

    double length() const {
        double L = 0;
        for (size_t k = 0; k + 1 < pts.size(); ++k) L += std::abs(pts[k + 1] - pts[k]);
        return L;
    }

    size_t segments() const { return pts.size() - 1; }
};

}  // namespace triham
