#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "triham/frobenius/checks.hpp"
#include "triham/frobenius/io.hpp"
#include "triham/fuchsian/painleve.hpp"
#include "triham/hurwitz/elliptic.hpp"
#include "triham/hurwitz/registry.hpp"
#include "triham/lift4d/reconstruct.hpp"
#include "triham/numkit/roots.hpp"

namespace py = pybind11;
using namespace triham;

namespace {

CPath path_from_list(const std::vector<cdouble>& pts) { return CPath(pts); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "tri-hamiltonian Frobenius manifold toolkit";

    py::register_exception<Error>(m, "TrihamError");

    // numkit
    m.def("quartic_roots", [](cdouble c4, cdouble c3, cdouble c2, cdouble c1, cdouble c0) {
        auto r = numkit::quartic_roots(c4, c3, c2, c1, c0);
        return std::vector<cdouble>(r.begin(), r.end());
    });

    // frobenius
    py::class_<frobenius::Prepotential>(m, "Prepotential")
        .def_static("from_json", &frobenius::prepotential_from_json)
        .def("to_json", [](const frobenius::Prepotential& F) { return frobenius::to_json(F); })
        .def_property_readonly("n", &frobenius::Prepotential::dim)
        .def_property_readonly("charge", &frobenius::Prepotential::charge)
        .def_property_readonly("degrees", &frobenius::Prepotential::degrees)
        .def("value", &frobenius::Prepotential::value)
        .def("third_derivatives", [](const frobenius::Prepotential& F, const CVector& t) {
            auto c = F.third_derivatives(t);
            const int n = c.dim();
            std::vector<std::vector<std::vector<cdouble>>> out(
                n, std::vector<std::vector<cdouble>>(n, std::vector<cdouble>(n)));
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    for (int g = 0; g < n; ++g) out[a][b][g] = c(a, b, g);
            return out;
        });

    m.def("pavlyk_prepotential", &hurwitz::pavlyk_prepotential);
    m.def("trivial_cubic2", &frobenius::trivial_cubic2);
    m.def("check_wdvv", &frobenius::check_wdvv);
    m.def("check_unit", [](const frobenius::Prepotential& F, const CVector& t) {
        return frobenius::check_unit(frobenius::evaluate_point(F, t));
    });
    m.def("check_quasihomogeneity", &frobenius::check_quasihomogeneity);
    m.def("check_trihamiltonian", [](const frobenius::Prepotential& F) {
        auto r = frobenius::check_trihamiltonian(F);
        return py::make_tuple(r.ok, r.mu);
    });

    // darboux
    py::class_<darboux::DEState>(m, "DEState")
        .def(py::init([](cdouble s, cdouble a, cdouble b, cdouble c) {
            return darboux::DEState{s, a, b, c};
        }))
        .def_readwrite("s", &darboux::DEState::s)
        .def_readwrite("a", &darboux::DEState::a)
        .def_readwrite("b", &darboux::DEState::b)
        .def_readwrite("c", &darboux::DEState::c)
        .def("casimir", &darboux::DEState::casimir);

    m.def("de_rhs", [](const darboux::DEState& st) {
        auto d = darboux::de_rhs(st);
        return std::vector<cdouble>{d(0), d(1), d(2)};
    });
    m.def("de_flow", [](const darboux::DEState& st, const std::vector<cdouble>& pts, double tol) {
        return darboux::de_flow(st, path_from_list(pts), tol);
    });
    m.def("v_from_state", [](const darboux::DEState& st) -> CMatrix {
        return darboux::v_from_state(st);
    });
    m.def("lift_to_w", [](const darboux::DEState& st, int sign) -> CMatrix {
        return darboux::lift_to_w(st, sign);
    }, py::arg("state"), py::arg("sign") = 1);

    // a3 example
    m.def("a3_s_of_t", &hurwitz::a3_s_of_t);
    m.def("a3_t_from_s", &hurwitz::a3_t_from_s);
    m.def("a3_phi", [](cdouble t) -> CMatrix { return hurwitz::a3_phi(t); });
    m.def("a3_abc", &hurwitz::a3_abc);
    m.def("a3_chi", [](cdouble t, cdouble eps) -> CMatrix { return hurwitz::a3_chi(t, eps); });
    m.def("appell_f", &hurwitz::appell_f);
    m.def("appell_g", &hurwitz::appell_g);

    // painleve
    m.def("a3_painleve_y", [](double s, const std::string& kind) {
        cdouble t = hurwitz::a3_t_from_s(cdouble(s, 0), cdouble(2, 0));
        auto phi = hurwitz::a3_phi(t);
        auto sys = (kind == "A") ? fuchsian::reduce_A(phi, hurwitz::kA3Mu, cdouble(s, 0))
                                 : fuchsian::reduce_B(phi, hurwitz::kA3Mu, cdouble(s, 0));
        return fuchsian::painleve_y(sys);
    });
    m.def("pvi_residual", [](const std::vector<cdouble>& s, const std::vector<cdouble>& y,
                             cdouble mu, const std::string& variant) {
        fuchsian::PainleveSample g{s, y};
        return fuchsian::pvi_residual(g, mu,
                                      variant == "okamoto" ? fuchsian::PviVariant::Okamoto
                                                           : fuchsian::PviVariant::PVImu);
    });

    // elliptic example
    m.def("elliptic_period_data", [](cdouble s) {
        auto d = hurwitz::elliptic_period_data(s);
        return py::make_tuple(d.omega1, d.Ibar);
    });
    m.def("elliptic_v", [](cdouble s) { return hurwitz::elliptic_v(s); });
    m.def("elliptic_w_check", [](const std::array<cdouble, 4>& v) {
        auto r = hurwitz::elliptic_w_check(v);
        return py::make_tuple(r.w_residual, r.lemma5_residual, r.barj1_residual,
                              r.barj1_limit_residual);
    });

    // 4d lift pipeline
    m.def("a3_psi_hat", [](const std::array<cdouble, 4>& v, int sign) -> CMatrix {
        auto anchor = hurwitz::a3_lift_anchor(hurwitz::a3_default_anchor_chart());
        auto st = hurwitz::a3_lift_continue(anchor, v);
        return hurwitz::a3_psi_hat(st, sign).psi;
    }, py::arg("v"), py::arg("sign") = 1);
    m.def("a3_lift_linear_residual", [](const std::array<cdouble, 4>& v, int sign) {
        auto anchor = hurwitz::a3_lift_anchor(hurwitz::a3_default_anchor_chart());
        auto st = hurwitz::a3_lift_continue(anchor, v);
        auto frame_at = [&](const std::array<cdouble, 4>& chart) -> Matrix4c {
            return hurwitz::a3_psi_hat(hurwitz::a3_lift_continue(st, chart), sign).psi;
        };
        auto w_at = [&](const std::array<cdouble, 4>& chart) -> Matrix4c {
            return hurwitz::a3_w_at(hurwitz::a3_lift_continue(st, chart), sign);
        };
        return lift4d::check_linear_system(frame_at, w_at, v, 1e-5);
    }, py::arg("v"), py::arg("sign") = 1);
}
