#pragma once

#include "triham/hurwitz/a3.hpp"
#include "triham/lift4d/lift.hpp"

namespace triham::hurwitz {

/// Branch-continued state of the full A3 -> 4d pipeline at a chart: the
/// underlying t, the kind-B fundamental solution and all multivalued-power
/// logs travel together so Psi_hat stays single-valued along chart paths.
struct A3LiftState {
    std::array<cdouble, 4> v;
    lift4d::Chart4Params params;
    cdouble t;
    A3ChiState chi;
    cdouble log_v21, log_es, log_e, log_e1;
};

/// Anchor at a chart whose (s, eps) land in the canonical regime
/// (s just above 1, eps real beyond s so the superpotential roots are real).
A3LiftState a3_lift_anchor(const std::array<cdouble, 4>& v);

/// A sensible default anchor chart: v = (0, 1, 1.1786, -1.5).
std::array<cdouble, 4> a3_default_anchor_chart();

/// Continue the pipeline state along the straight chart path from.v -> v.
A3LiftState a3_lift_continue(const A3LiftState& from, const std::array<cdouble, 4>& v);

/// Assembled 4x4 transition frame at the state's chart.
lift4d::TransitionFrame a3_psi_hat(const A3LiftState& st, int sign = +1, int marked_column = 0);

/// The lifted W at the state's chart.
Matrix4c a3_w_at(const A3LiftState& st, int sign = +1);

/// Example names understood by the command-line driver.
inline constexpr const char* kExamples[] = {"a3", "elliptic3", "elliptic4"};
bool is_known_example(const std::string& name);

}  // namespace triham::hurwitz
