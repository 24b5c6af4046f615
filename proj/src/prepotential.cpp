#include "triham/frobenius/prepotential.hpp"

#include <cmath>

namespace triham::frobenius {

namespace {

cdouble eval_monomial(const MonomialTerm& m, const CVector& t) {
    cdouble v = m.coeff;
    for (size_t a = 0; a < m.exps.size(); ++a) {
        for (int k = 0; k < m.exps[a]; ++k) v *= t(static_cast<Eigen::Index>(a));
    }
    return v;
}

cdouble radical_base(const Polynomial& Q, const CVector& t) {
    cdouble q = Q.eval(t);
    if (q.imag() == 0.0 && q.real() < 0.0)
        fail("RadicalBranch", "radical argument lies on the principal branch cut");
    return q;
}

}  // namespace

cdouble Polynomial::eval(const CVector& t) const {
    cdouble s(0, 0);
    for (const auto& m : terms) s += eval_monomial(m, t);
    return s;
}

Polynomial Polynomial::partial(int alpha) const {
    Polynomial out;
    out.n = n;
    for (const auto& m : terms) {
        if (m.exps[alpha] == 0) continue;
        MonomialTerm d = m;
        d.coeff *= static_cast<double>(m.exps[alpha]);
        d.exps[alpha] -= 1;
        out.terms.push_back(std::move(d));
    }
    return out;
}

size_t Prepotential::RadicalCache::idx3(int a, int b, int c) const {
    // a<=b<=c over n indices, dense packing
    const int n = term.Q.n;
    size_t k = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            for (int l = j; l < n; ++l) {
                if (i == a && j == b && l == c) return k;
                ++k;
            }
    fail("Internal", "bad packed index");
}

Prepotential::Prepotential(int n, double charge, std::vector<double> degrees, CMatrix eta,
                           std::vector<MonomialTerm> monomials, std::vector<RadicalTerm> radicals)
    : n_(n),
      charge_(charge),
      degrees_(std::move(degrees)),
      eta_(std::move(eta)),
      monomials_(std::move(monomials)),
      radicals_(std::move(radicals)) {
    if (n_ <= 0) fail("BadPrepotential", "dimension must be positive");
    if (static_cast<int>(degrees_.size()) != n_) fail("BadPrepotential", "degrees size mismatch");
    if (eta_.rows() != n_ || eta_.cols() != n_) fail("BadPrepotential", "eta size mismatch");
    if ((eta_ - eta_.transpose()).cwiseAbs().maxCoeff() > 1e-14)
        fail("BadPrepotential", "eta must be symmetric");
    Eigen::FullPivLU<CMatrix> lu(eta_);
    if (!lu.isInvertible()) fail("BadPrepotential", "eta must be nondegenerate");
    eta_inv_ = lu.inverse();
    for (const auto& m : monomials_)
        if (static_cast<int>(m.exps.size()) != n_)
            fail("BadPrepotential", "monomial exponent size mismatch");

    for (const auto& r : radicals_) {
        if (r.Q.n != n_) fail("BadPrepotential", "radical polynomial dimension mismatch");
        if (r.power == std::floor(r.power))
            fail("BadPrepotential", "radical power must be non-integer");
        RadicalCache cache;
        cache.term = r;
        cache.d1.resize(n_);
        for (int a = 0; a < n_; ++a) cache.d1[a] = r.Q.partial(a);
        cache.d2.assign(n_, std::vector<Polynomial>(n_));
        for (int a = 0; a < n_; ++a)
            for (int b = a; b < n_; ++b) cache.d2[a][b] = cache.d1[a].partial(b);
        for (int a = 0; a < n_; ++a)
            for (int b = a; b < n_; ++b)
                for (int c = b; c < n_; ++c) cache.d3.push_back(cache.d2[a][b].partial(c));
        rcache_.push_back(std::move(cache));
    }
}

cdouble Prepotential::value(const CVector& t) const {
    cdouble s(0, 0);
    for (const auto& m : monomials_) s += eval_monomial(m, t);
    for (const auto& r : radicals_) {
        cdouble q = radical_base(r.Q, t);
        s += r.coeff * std::pow(q, r.power);
    }
    return s;
}

Tensor3 Prepotential::third_derivatives(const CVector& t) const {
    Tensor3 out(n_);
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
            for (int g = 0; g < n_; ++g) {
                cdouble v(0, 0);
                for (const auto& m : monomials_) {
                    std::vector<int> e = m.exps;
                    double factor = 1;
                    bool zero = false;
                    for (int idx : {a, b, g}) {
                        if (e[idx] == 0) {
                            zero = true;
                            break;
                        }
                        factor *= e[idx];
                        e[idx] -= 1;
                    }
                    if (zero) continue;
                    cdouble term = m.coeff * factor;
                    for (int i = 0; i < n_; ++i)
                        for (int k = 0; k < e[i]; ++k) term *= t(i);
                    v += term;
                }
                out(a, b, g) = v;
            }

    for (const auto& rc : rcache_) {
        const double p = rc.term.power;
        cdouble q = radical_base(rc.term.Q, t);
        cdouble qp3 = std::pow(q, p - 3);
        cdouble qp2 = qp3 * q;
        cdouble qp1 = qp2 * q;
        std::vector<cdouble> d1(n_);
        for (int a = 0; a < n_; ++a) d1[a] = rc.d1[a].eval(t);
        auto d2 = [&](int a, int b) { return rc.d2[std::min(a, b)][std::max(a, b)].eval(t); };
        auto d3 = [&](int a, int b, int g) {
            int i = a, j = b, l = g;
            if (i > j) std::swap(i, j);
            if (j > l) std::swap(j, l);
            if (i > j) std::swap(i, j);
            return rc.d3[rc.idx3(i, j, l)].eval(t);
        };
        for (int a = 0; a < n_; ++a)
            for (int b = 0; b < n_; ++b)
                for (int g = 0; g < n_; ++g) {
                    cdouble v = p * (p - 1) * (p - 2) * qp3 * d1[a] * d1[b] * d1[g];
                    v += p * (p - 1) * qp2 *
                         (d2(a, b) * d1[g] + d2(a, g) * d1[b] + d2(b, g) * d1[a]);
                    v += p * qp1 * d3(a, b, g);
                    out(a, b, g) += rc.term.coeff * v;
                }
    }

    return out;
}

FrobeniusPoint evaluate_point(const Prepotential& F, const CVector& t) {
    const int n = F.dim();
    if (t.size() != n) fail("BadPoint", "coordinate size mismatch");
    FrobeniusPoint pt;
    pt.t = t;
    pt.eta = F.eta();
    pt.eta_inv = F.eta_inv();
    pt.c = F.third_derivatives(t);

    pt.c_up = Tensor3(n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int g = 0; g < n; ++g) {
                cdouble v(0, 0);
                for (int m = 0; m < n; ++m) v += F.eta_inv()(a, m) * pt.c(m, b, g);
                pt.c_up(a, b, g) = v;
            }

    // U^a_b = sum_m d_m t^m c^a_{mb}  (Euler field with r = 0)
    pt.U = CMatrix::Zero(n, n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            cdouble v(0, 0);
            for (int m = 0; m < n; ++m) v += F.degrees()[m] * t(m) * pt.c_up(a, m, b);
            pt.U(a, b) = v;
        }

    CMatrix U2 = pt.U * pt.U;
    pt.g = CMatrix::Zero(n, n);
    pt.eta_tilde = CMatrix::Zero(n, n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            cdouble gv(0, 0), ev(0, 0);
            for (int m = 0; m < n; ++m) {
                gv += F.eta_inv()(a, m) * pt.U(b, m);
                ev += F.eta_inv()(a, m) * U2(b, m);
            }
            pt.g(a, b) = gv;
            pt.eta_tilde(a, b) = ev;
        }

    pt.mu_hat = CVector(n);
    for (int a = 0; a < n; ++a) pt.mu_hat(a) = F.mu(a);
    return pt;
}

Prepotential trivial_cubic2() {
    CMatrix eta(2, 2);
    eta << 0, 1, 1, 0;
    std::vector<MonomialTerm> mono;
    mono.push_back({cdouble(0.5, 0), {2, 1}});
    return Prepotential(2, 0.0, {1.0, 1.0}, eta, mono, {});
}

}  // namespace triham::frobenius
