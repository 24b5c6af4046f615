#include "doctest.h"

#include <cmath>

#include "support/fixtures.hpp"
#include "triham/frobenius/checks.hpp"
#include "triham/frobenius/io.hpp"
#include "triham/hurwitz/a3.hpp"

using namespace triham;
using namespace triham::frobenius;

namespace {
CVector pt4(double a, double b, double c, double d) {
    CVector t(4);
    t << a, b, c, d;
    return t;
}
}  // namespace

TEST_CASE("trivial cubic: unit term is the only third derivative") {
    Prepotential F = trivial_cubic2();
    CVector t(2);
    t << 0.37, -1.2;
    auto pt = evaluate_point(F, t);
    CHECK(std::abs(pt.c(0, 0, 1) - 1.0) < 1e-15);
    CHECK(std::abs(pt.c(0, 0, 0)) < 1e-15);
    CHECK(std::abs(pt.c(1, 1, 1)) < 1e-15);
    CHECK(check_unit(pt) < 1e-15);
    CHECK(check_wdvv(F, {t}) < 1e-15);
}

TEST_CASE("pavlyk values: F(1,0,0,0) = 0 and F(0,1,0,0) = 32 sqrt(3)/45") {
    Prepotential F = hurwitz::pavlyk_prepotential();
    CHECK(std::abs(F.value(pt4(1, 0, 0, 0))) < 1e-15);
    const double want = 32.0 * std::sqrt(3.0) / 45.0;  // = 1.2316805...
    CHECK(std::abs(F.value(pt4(0, 1, 0, 0)) - want) < 1e-14);
}

TEST_CASE("pavlyk point: unit residual and c114") {
    Prepotential F = hurwitz::pavlyk_prepotential();
    auto pt = evaluate_point(F, pt4(0.3, 0.4, 0.1, -0.2));
    CHECK(check_unit(pt) < 1e-12);
    CHECK(std::abs(pt.c(0, 0, 3) - 1.0) < 1e-14);
}

TEST_CASE("pavlyk satisfies WDVV on 100 seeded points; perturbation breaks it") {
    Prepotential F = hurwitz::pavlyk_prepotential();
    auto pts = fixtures::sample_points(F, 100, 20240817);
    CHECK(check_wdvv(F, pts) < 1e-9);

    auto mono = F.monomials();
    mono[5].coeff += 1e-3;  // t4^5 coefficient
    Prepotential broken(4, F.charge(), F.degrees(), F.eta(), mono, F.radicals());
    CHECK(check_wdvv(broken, {pts.begin(), pts.begin() + 10}) > 1e-5);
}

TEST_CASE("removing the unit term drives the unit residual to one") {
    Prepotential F = hurwitz::pavlyk_prepotential();
    std::vector<MonomialTerm> mono(F.monomials().begin() + 1, F.monomials().end());
    Prepotential broken(4, F.charge(), F.degrees(), F.eta(), mono, F.radicals());
    auto pt = evaluate_point(broken, pt4(0.2, 0.5, 0.1, 0.1));
    CHECK(check_unit(pt) == doctest::Approx(1.0));
}

TEST_CASE("quasi-homogeneity holds with the inferred degrees and fails with wrong ones") {
    Prepotential F = hurwitz::pavlyk_prepotential();
    auto pts = fixtures::sample_points(F, 5, 7);
    for (const auto& t : pts) {
        CHECK(check_quasihomogeneity(F, 2.0, t) < 1e-10);
        CHECK(check_quasihomogeneity(F, 1.0, t) == 0.0);
    }
    Prepotential wrong(4, F.charge(), {1.0, 0.75, 0.5, 0.25}, F.eta(), F.monomials(),
                       F.radicals());
    CHECK(check_quasihomogeneity(wrong, 2.0, pts[0]) > 1e-3);
}

TEST_CASE("tri-hamiltonian spectrum checks") {
    Prepotential F = hurwitz::pavlyk_prepotential();
    auto r = check_trihamiltonian(F);
    CHECK(r.ok);
    CHECK(r.mu == doctest::Approx(0.25).epsilon(1e-14));
    for (int a = 0; a < 4; ++a) CHECK(F.mu(a) * F.mu(a) == doctest::Approx(1.0 / 16));

    CHECK(check_trihamiltonian(trivial_cubic2()).ok == false);  // d = 0 gives mu = 0
    Prepotential n2(2, 0.4, {1.0, 0.6}, trivial_cubic2().eta(),
                    trivial_cubic2().monomials(), {});
    CHECK(check_trihamiltonian(n2).ok);

    Prepotential a4 = fixtures::a4_prepotential();
    CHECK(check_trihamiltonian(a4).ok == false);

    CMatrix eta3 = CMatrix::Zero(3, 3);
    for (int a = 0; a < 3; ++a) eta3(a, 2 - a) = 1.0;
    std::vector<MonomialTerm> mono = {{cdouble(0.5, 0), {2, 0, 1}}};
    Prepotential odd(3, 0.5, {1.0, 0.75, 0.5}, eta3, mono, {});
    CHECK_THROWS_WITH_AS(check_trihamiltonian(odd), doctest::Contains("OddDimension"), Error);
}

TEST_CASE("a4 control is a genuine WDVV solution with unsplit spectrum") {
    Prepotential F = fixtures::a4_prepotential();
    auto pts = fixtures::sample_points(F, 30, 99);
    CHECK(check_wdvv(F, pts) < 1e-10);
    for (const auto& t : pts) CHECK(check_unit(evaluate_point(F, t)) < 1e-13);
    CHECK(check_quasihomogeneity(F, 2.0, pts[0]) < 1e-9);
}

TEST_CASE("christoffel identities for the third metric") {
    Prepotential F = hurwitz::pavlyk_prepotential();
    auto pts = fixtures::sample_points(F, 3, 31);
    for (const auto& t : pts) {
        auto pt = evaluate_point(F, t);
        Tensor3 G = christoffel_third(pt);

        double sym = 0;
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b)
                for (int g = 0; g < 4; ++g) {
                    cdouble lhs(0, 0), rhs(0, 0);
                    for (int nu = 0; nu < 4; ++nu) {
                        lhs += pt.eta_tilde(a, nu) * G(b, g, nu);
                        rhs += pt.eta_tilde(b, nu) * G(a, g, nu);
                    }
                    sym = std::max(sym, std::abs(lhs - rhs));
                }
        CHECK(sym < 1e-10);

        const double h = 1e-5;
        double fd = 0;
        for (int g = 0; g < 4; ++g) {
            CVector tp = t, tm = t;
            tp(g) += h;
            tm(g) -= h;
            CMatrix ep = evaluate_point(F, tp).eta_tilde;
            CMatrix em = evaluate_point(F, tm).eta_tilde;
            for (int a = 0; a < 4; ++a)
                for (int b = 0; b < 4; ++b) {
                    cdouble d = (ep(a, b) - em(a, b)) / (2 * h);
                    fd = std::max(fd, std::abs(d - G(a, b, g) - G(b, a, g)));
                }
        }
        CHECK(fd < 1e-6);
    }
}

TEST_CASE("christoffel identities for the intersection form") {
    Prepotential F = hurwitz::pavlyk_prepotential();
    CVector t = fixtures::sample_points(F, 1, 55)[0];
    auto pt = evaluate_point(F, t);
    Tensor3 G = christoffel_intersection(pt);

    const double h = 1e-5;
    double fd = 0;
    for (int g = 0; g < 4; ++g) {
        CVector tp = t, tm = t;
        tp(g) += h;
        tm(g) -= h;
        CMatrix gp = evaluate_point(F, tp).g;
        CMatrix gm = evaluate_point(F, tm).g;
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b) {
                cdouble d = (gp(a, b) - gm(a, b)) / (2 * h);
                fd = std::max(fd, std::abs(d - G(a, b, g) - G(b, a, g)));
            }
    }
    CHECK(fd < 1e-8);

    double sym = 0;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            for (int g = 0; g < 4; ++g) {
                cdouble lhs(0, 0), rhs(0, 0);
                for (int nu = 0; nu < 4; ++nu) {
                    lhs += pt.g(a, nu) * G(b, g, nu);
                    rhs += pt.g(b, nu) * G(a, g, nu);
                }
                sym = std::max(sym, std::abs(lhs - rhs));
            }
    CHECK(sym < 1e-10);
}

TEST_CASE("n=2 trivial cubic: hand-computed tensors") {
    Prepotential F = trivial_cubic2();
    CVector t(2);
    t << 0.7, 1.3;
    auto pt = evaluate_point(F, t);
    CHECK(std::abs(pt.U(0, 0) - t(0)) < 1e-14);
    CHECK(std::abs(pt.U(0, 1)) < 1e-14);
    CHECK(std::abs(pt.U(1, 0) - t(1)) < 1e-14);
    CHECK(std::abs(pt.U(1, 1) - t(0)) < 1e-14);

    // U^2 = [[t1^2, 0], [2 t1 t2, t1^2]]; raising with the antidiagonal eta:
    // g = [[0, t1], [t1, t2]], eta~ = [[0, t1^2], [t1^2, 2 t1 t2]]
    CHECK(std::abs(pt.g(0, 0)) < 1e-14);
    CHECK(std::abs(pt.g(0, 1) - t(0)) < 1e-14);
    CHECK(std::abs(pt.g(1, 1) - t(1)) < 1e-14);
    CHECK(std::abs(pt.eta_tilde(0, 1) - t(0) * t(0)) < 1e-14);
    CHECK(std::abs(pt.eta_tilde(1, 1) - 2.0 * t(0) * t(1)) < 1e-14);

    Tensor3 G = christoffel_third(pt);
    double h = 1e-6;
    double fd = 0;
    for (int g = 0; g < 2; ++g) {
        CVector tp = t, tm = t;
        tp(g) += h;
        tm(g) -= h;
        CMatrix ep = evaluate_point(F, tp).eta_tilde;
        CMatrix em = evaluate_point(F, tm).eta_tilde;
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b)
                fd = std::max(fd, std::abs((ep(a, b) - em(a, b)) / (2 * h) - G(a, b, g) -
                                           G(b, a, g)));
    }
    CHECK(fd < 1e-8);
}

TEST_CASE("curvature: zero for constant metric / flat for pavlyk / nonzero for a4") {
    auto zero_gamma = [](const CVector&) { return Tensor3(4); };
    auto const_metric = [](const CVector&) {
        CMatrix m = CMatrix::Zero(4, 4);
        for (int a = 0; a < 4; ++a) m(a, 3 - a) = 1.0;
        return m;
    };
    CVector t0 = pt4(0.1, 0.7, 0.2, -0.1);
    CHECK(curvature_contravariant(zero_gamma, const_metric, t0, 1e-5).max_abs() == 0.0);

    Prepotential F = hurwitz::pavlyk_prepotential();
    auto gamma_field = [&](const CVector& t) {
        return christoffel_third(evaluate_point(F, t));
    };
    auto metric_field = [&](const CVector& t) { return evaluate_point(F, t).eta_tilde; };
    auto pts = fixtures::sample_points(F, 5, 41);
    for (const auto& t : pts)
        CHECK(curvature_contravariant(gamma_field, metric_field, t, 1e-5).max_abs() < 1e-6);

    Prepotential A4 = fixtures::a4_prepotential();
    auto gamma4 = [&](const CVector& t) { return christoffel_third(evaluate_point(A4, t)); };
    auto metric4 = [&](const CVector& t) { return evaluate_point(A4, t).eta_tilde; };
    double worst = 0;
    for (const auto& t : fixtures::sample_points(A4, 5, 42))
        worst = std::max(worst, curvature_contravariant(gamma4, metric4, t, 1e-5).max_abs());
    CHECK(worst > 1e-3);
}

TEST_CASE("flat pencil identities and the pencil shift") {
    Prepotential F = hurwitz::pavlyk_prepotential();
    auto pts = fixtures::sample_points(F, 5, 77);
    for (const auto& t : pts) {
        auto r = check_flat_pencil(F, t, 1e-3);
        CHECK(r.d1_eta_tilde_vs_2g < 1e-6);
        CHECK(r.d11_eta_tilde_vs_2eta < 1e-6);
        CHECK(r.d1_U_vs_identity < 1e-9);
    }

    for (double e1 : {0.1, 1.0}) {
        const CVector& t = pts[0];
        CVector ts = t;
        ts(0) += 0.5 * e1;
        auto p0 = evaluate_point(F, t);
        auto p1 = evaluate_point(F, ts);
        double worst = 0;
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b)
                worst = std::max(
                    worst, std::abs(p1.eta_tilde(a, b) - p0.eta_tilde(a, b) - e1 * p0.g(a, b) -
                                    0.25 * e1 * e1 * p0.eta_inv(a, b)));
        CHECK(worst < 1e-9);
    }
}

TEST_CASE("wwdvv: scalar spectrum commutes, a4 does not") {
    Prepotential F = hurwitz::pavlyk_prepotential();
    auto pts = fixtures::sample_points(F, 5, 13);
    for (const auto& t : pts) CHECK(check_wwdvv(evaluate_point(F, t)) < 1e-12);

    Prepotential A4 = fixtures::a4_prepotential();
    double worst = 0;
    for (const auto& t : fixtures::sample_points(A4, 5, 14))
        worst = std::max(worst, check_wwdvv(evaluate_point(A4, t)));
    CHECK(worst > 1e-6);
}

TEST_CASE("wdvv residual ignores added quadratic terms") {
    Prepotential F = hurwitz::pavlyk_prepotential();
    auto mono = F.monomials();
    mono.push_back({cdouble(2.7, 0), {2, 0, 0, 0}});
    mono.push_back({cdouble(-1.3, 0), {0, 1, 1, 0}});
    mono.push_back({cdouble(0.4, 0), {0, 0, 0, 1}});
    Prepotential shifted(4, F.charge(), F.degrees(), F.eta(), mono, F.radicals());
    auto pts = fixtures::sample_points(F, 10, 5);
    CHECK(std::abs(check_wdvv(F, pts) - check_wdvv(shifted, pts)) < 1e-15);
}

TEST_CASE("radical-branch guard") {
    Prepotential F = hurwitz::pavlyk_prepotential();
    CVector bad = pt4(0.0, -1.0, 0.0, 0.0);  // 48 t2 < 0 lies on the cut
    CHECK_THROWS_WITH_AS(F.third_derivatives(bad), doctest::Contains("RadicalBranch"), Error);
}

TEST_CASE("json round-trip is stable and preserves values") {
    Prepotential F = hurwitz::pavlyk_prepotential();
    std::string doc = to_json(F);
    Prepotential back = prepotential_from_json(doc);
    CHECK(to_json(back) == doc);
    CVector t = pt4(0.11, 0.72, -0.31, 0.44);
    CHECK(std::abs(F.value(t) - back.value(t)) == 0.0);
    CHECK(back.charge() == F.charge());
    CHECK(back.degrees() == F.degrees());
}
