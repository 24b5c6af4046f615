#include "triham/hurwitz/registry.hpp"

#include "triham/numkit/branch.hpp"

namespace triham::hurwitz {

namespace {

A3LiftState fill_state(const std::array<cdouble, 4>& v, const A3LiftState* prev) {
    A3LiftState st;
    st.v = v;
    st.params = lift4d::chart_params(v);
    const cdouble hint = prev ? prev->t : cdouble(2.0, 0.0);
    st.t = a3_t_from_s(st.params.s, hint);
    const cdouble v21 = v[1] - v[0];
    if (prev) {
        st.chi = a3_chi_continue(prev->chi, st.t, st.params.eps);
        st.log_v21 = numkit::continuous_log(v21, prev->log_v21);
        st.log_es = numkit::continuous_log(st.params.eps - st.params.s, prev->log_es);
        st.log_e = numkit::continuous_log(st.params.eps, prev->log_e);
        st.log_e1 = numkit::continuous_log(st.params.eps - 1.0, prev->log_e1);
    } else {
        st.chi = a3_chi_anchor(st.t, st.params.eps);
        st.log_v21 = std::log(v21);
        st.log_es = std::log(st.params.eps - st.params.s);
        st.log_e = std::log(st.params.eps);
        st.log_e1 = std::log(st.params.eps - 1.0);
    }
    return st;
}

double state_movement(const A3LiftState& a, const A3LiftState& b) {
    double m = 0;
    m = std::max(m, std::abs(b.log_v21 - a.log_v21));
    m = std::max(m, std::abs(b.log_es - a.log_es));
    m = std::max(m, std::abs(b.log_e - a.log_e));
    m = std::max(m, std::abs(b.log_e1 - a.log_e1));
    m = std::max(m, std::abs(b.t - a.t) / std::max(1.0, std::abs(a.t)));
    return m;
}

}  // namespace

std::array<cdouble, 4> a3_default_anchor_chart() {
    return {cdouble(0, 0), cdouble(1, 0), cdouble(1.1786, 0), cdouble(-1.5, 0)};
}

A3LiftState a3_lift_anchor(const std::array<cdouble, 4>& v) { return fill_state(v, nullptr); }

A3LiftState a3_lift_continue(const A3LiftState& from, const std::array<cdouble, 4>& v) {
    struct Leg {
        std::array<cdouble, 4> v0, v1;
        int depth;
    };
    A3LiftState cur = from;
    std::vector<Leg> stack{{from.v, v, 0}};
    while (!stack.empty()) {
        Leg leg = stack.back();
        stack.pop_back();
        bool subdivide = false;
        A3LiftState nxt;
        try {
            nxt = fill_state(leg.v1, &cur);
            subdivide = state_movement(cur, nxt) > 0.4;
        } catch (const Error& e) {
            if (leg.depth > 24) throw;
            subdivide = true;
        }
        if (subdivide) {
            if (leg.depth > 24) fail("BranchInconsistency", "chart continuation step underflow");
            std::array<cdouble, 4> mid;
            for (int i = 0; i < 4; ++i) mid[i] = 0.5 * (leg.v0[i] + leg.v1[i]);
            stack.push_back({mid, leg.v1, leg.depth + 1});
            stack.push_back({leg.v0, mid, leg.depth + 1});
            continue;
        }
        cur = nxt;
    }
    return cur;
}

lift4d::TransitionFrame a3_psi_hat(const A3LiftState& st, int sign, int marked_column) {
    lift4d::TransitionFrame f = lift4d::assemble_psi_hat(
        a3_phi(st.t), a3_chi_value(st.chi), st.params, kA3Mu, st.log_v21, st.log_es, st.log_e,
        st.log_e1, sign);
    f.marked_column = marked_column;
    return f;
}

Matrix4c a3_w_at(const A3LiftState& st, int sign) {
    return darboux::lift_to_w(a3_abc(st.t), sign);
}

bool is_known_example(const std::string& name) {
    for (const char* e : kExamples)
        if (name == e) return true;
    return false;
}

}  // namespace triham::hurwitz
