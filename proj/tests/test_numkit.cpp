#include "doctest.h"

#include <algorithm>
#include <random>

#include "support/oracles.hpp"
#include "triham/numkit/branch.hpp"
#include "triham/numkit/derivative.hpp"
#include "triham/numkit/ode.hpp"
#include "triham/numkit/quadrature.hpp"
#include "triham/numkit/roots.hpp"

using namespace triham;
using namespace triham::numkit;

namespace {
CVector vec1(cdouble z) {
    CVector v(1);
    v << z;
    return v;
}
}  // namespace

TEST_CASE("ode_flow: constant field returns the initial state") {
    auto rhs = [](cdouble, const CVector& y) { return CVector::Zero(y.size()).eval(); };
    CVector y = ode_flow(rhs, CPath::line({0, 0}, {1, 2}), vec1({3, -4}), 1e-10);
    CHECK(std::abs(y(0) - cdouble(3, -4)) < 1e-14);
}

TEST_CASE("ode_flow: exponential along the unit segment") {
    auto rhs = [](cdouble, const CVector& y) { return y; };
    CVector y = ode_flow(rhs, CPath::line({0, 0}, {1, 0}), vec1({1, 0}), 1e-10);
    CHECK(std::abs(y(0) - std::exp(1.0)) < 1e-9);
}

TEST_CASE("ode_flow: y' = y/z from 1 to 2 doubles the state") {
    auto rhs = [](cdouble z, const CVector& y) { return (y / z).eval(); };
    CVector y = ode_flow(rhs, CPath::line({1, 0}, {2, 0}), vec1({1, 0}), 1e-11);
    CHECK(std::abs(y(0) - 2.0) < 1e-9);
}

TEST_CASE("ode_flow: path composition matches the concatenated path") {
    auto rhs = [](cdouble z, const CVector& y) {
        CVector out(1);
        out(0) = std::sin(z) * y(0);
        return out;
    };
    const double tol = 1e-10;
    CVector direct =
        ode_flow(rhs, CPath({{0, 0}, {1, 0.5}, {2, 0}}), vec1({1, 0}), tol);
    CVector first = ode_flow(rhs, CPath::line({0, 0}, {1, 0.5}), vec1({1, 0}), tol);
    CVector second = ode_flow(rhs, CPath::line({1, 0.5}, {2, 0}), first, tol);
    CHECK(std::abs(direct(0) - second(0)) < 2 * tol * 10);
}

TEST_CASE("ode_flow: det of a fundamental solution obeys the trace formula") {
    // y' = M(z) y with M = [[0, 1], [z, 0]]; tr M = 0 so det Y is constant
    auto M = [](cdouble z) {
        CMatrix m(2, 2);
        m << 0, 1, z, 0;
        return m;
    };
    CMatrix Y0 = CMatrix::Identity(2, 2);
    CMatrix Y = ode_flow_matrix(M, CPath::line({0, 0}, {1, 1}), Y0, 1e-11);
    cdouble det = Y(0, 0) * Y(1, 1) - Y(0, 1) * Y(1, 0);
    CHECK(std::abs(det - 1.0) < 1e-9);
    // invertibility
    CHECK(std::abs(det) > 0.5);
}

TEST_CASE("ode_flow: reports state blowup as NonFinite or StepUnderflow") {
    auto rhs = [](cdouble, const CVector& y) { return (y.array().square()).matrix().eval(); };
    bool threw = false;
    try {
        ode_flow(rhs, CPath::line({0, 0}, {5, 0}), vec1({1, 0}), 1e-8);
    } catch (const Error& e) {
        threw = true;
        CHECK((e.code == "NonFinite" || e.code == "StepUnderflow"));
    }
    CHECK(threw);
}

TEST_CASE("central_diff: constants, quadratics, cubics") {
    auto cnst = [](cdouble) { return cdouble(2, 1); };
    CHECK(std::abs(central_diff(cnst, {0.3, 0.1}, 1e-5)) < 1e-12);

    auto sq = [](cdouble z) { return z * z; };
    CHECK(std::abs(central_diff(sq, {1, 0}, 1e-5) - 2.0) < 1e-9);

    auto cube = [](cdouble z) { return z * z * z; };
    double h = 1e-4;
    cdouble d = central_diff(cube, {1, 0}, h);
    CHECK(std::abs(d - 3.0) < 2 * h * h);      // Taylor remainder h^2 f'''/6 = h^2
    CHECK(std::abs(d - 3.0) > 0.1 * h * h);    // and the remainder is really there
    CHECK(std::abs(central_diff4(cube, {1, 0}, h) - 3.0) < 1e-11);
}

TEST_CASE("contour_quadrature: constants and the residue theorem") {
    auto one = [](cdouble) { return cdouble(1, 0); };
    CHECK(std::abs(contour_quadrature(one, CPath::line({0, 0}, {1, 0}), 1e-12) - 1.0) < 1e-12);

    auto inv = [](cdouble z) { return 1.0 / z; };
    CPath square({{1, -1}, {1, 1}, {-1, 1}, {-1, -1}, {1, -1}});
    cdouble loop = contour_quadrature(inv, square, 1e-12);
    CHECK(std::abs(loop - cdouble(0, 2 * kPi)) < 1e-10);
}

TEST_CASE("contour_quadrature: elliptic loop against the Carlson oracle") {
    // loop around [0, 1/2] of 1/sqrt(z(z-1)(z-1/2)), branch tracked
    const cdouble s(0.5, 0);
    CPath loop({{-0.15, -0.15}, {0.65, -0.15}, {0.65, 0.15}, {-0.15, 0.15}, {-0.15, -0.15}});
    auto radicand = [s](cdouble z) { return z * (z - 1.0) * (z - s); };
    BranchedSqrt rho(loop, radicand);
    auto g = [&](double tau) { return rho.tangent_at(tau) / rho.at_tau(tau); };
    cdouble period = quad_param01(g, 1e-12);

    // oracle: on (0, 1/2) the radicand z(z-1)(z-1/2) = +z(1-z)(1/2-z) > 0, so
    // the loop equals +-2 int_0^{1/2} dz / sqrt(z(1-z)(1/2-z)) and is real;
    // substituting z -> t/2,
    // int_0^{1/2} dz/sqrt(z(1-z)(1/2-z)) = sqrt(2) int_0^1 dt/sqrt(t(1-t)(2-t))
    //   = sqrt(2) * 2 RF(0, 1, 2)
    cdouble half_loop = std::sqrt(2.0) * 2.0 * oracles::carlson_rf({0, 0}, {1, 0}, {2, 0});
    CHECK(std::abs(std::abs(period) - 2.0 * std::abs(half_loop)) < 1e-9);
    CHECK(std::abs(period.imag()) < 1e-10);
}

TEST_CASE("quartic_roots: exact quartics") {
    auto r = quartic_roots(1, 0, 0, 0, -1);  // z^4 - 1
    double worst = 1e300;
    for (cdouble want : {cdouble(1, 0), cdouble(-1, 0), cdouble(0, 1), cdouble(0, -1)}) {
        double best = 1e300;
        for (auto z : r) best = std::min(best, std::abs(z - want));
        worst = std::min(worst, best);
        CHECK(best < 1e-10);
    }

    auto zero = quartic_roots(1, 0, 0, 0, 0);  // z^4
    for (auto z : zero) CHECK(std::abs(z) < 1e-3);  // quadruple root, conditioning ~ eps^(1/4)

    CHECK_THROWS_WITH_AS(quartic_roots(0, 1, 0, 0, 1), doctest::Contains("Degenerate"), Error);
}

TEST_CASE("quartic_roots: (z-1)^2 (z-2)(z-3) re-solved from expanded coefficients") {
    // z^4 - 7 z^3 + 17 z^2 - 17 z + 6
    auto r = quartic_roots(1, -7, 17, -17, 6);
    int near1 = 0, near2 = 0, near3 = 0;
    for (auto z : r) {
        if (std::abs(z - 1.0) < 1e-6) ++near1;  // double root: accuracy ~ sqrt(eps)
        if (std::abs(z - 2.0) < 1e-8) ++near2;
        if (std::abs(z - 3.0) < 1e-8) ++near3;
    }
    CHECK(near1 == 2);
    CHECK(near2 == 1);
    CHECK(near3 == 1);
}

TEST_CASE("quartic_roots property: elementary symmetric functions reproduce coefficients") {
    std::mt19937_64 rng(7);
    auto u = [&]() { return cdouble(1e-9 * (double)(rng() % 2000000000) - 1.0,
                                    1e-9 * (double)(rng() % 2000000000) - 1.0); };
    for (int trial = 0; trial < 50; ++trial) {
        cdouble c3 = u(), c2 = u(), c1 = u(), c0 = u();
        auto r = quartic_roots(1, c3, c2, c1, c0);
        cdouble e1 = r[0] + r[1] + r[2] + r[3];
        cdouble e2 = r[0] * r[1] + r[0] * r[2] + r[0] * r[3] + r[1] * r[2] + r[1] * r[3] +
                     r[2] * r[3];
        cdouble e3 = r[0] * r[1] * r[2] + r[0] * r[1] * r[3] + r[0] * r[2] * r[3] +
                     r[1] * r[2] * r[3];
        cdouble e4 = r[0] * r[1] * r[2] * r[3];
        double scale = std::max({1.0, std::abs(c3), std::abs(c2), std::abs(c1), std::abs(c0)});
        CHECK(std::abs(e1 + c3) < 1e-10 * scale);
        CHECK(std::abs(e2 - c2) < 1e-10 * scale);
        CHECK(std::abs(e3 + c1) < 1e-10 * scale);
        CHECK(std::abs(e4 - c0) < 1e-10 * scale);
    }
}

TEST_CASE("BranchedSqrt closes around an even number of branch points") {
    CPath loop({{-0.4, -0.3}, {1.4, -0.3}, {1.4, 0.3}, {-0.4, 0.3}, {-0.4, -0.3}});
    auto radicand = [](cdouble z) { return z * (z - 1.0); };
    BranchedSqrt rho(loop, radicand);
    CHECK(std::abs(rho.end_value() - rho.start_value()) < 1e-9);
}
