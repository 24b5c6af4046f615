#pragma once

#include <vector>

#include "triham/common.hpp"
#include "triham/frobenius/tensor.hpp"

namespace triham::frobenius {

/// coeff * prod_a (t^a)^{exps[a]}, exponents nonnegative integers.
struct MonomialTerm {
    cdouble coeff;
    std::vector<int> exps;
};

/// Multivariate polynomial with complex coefficients.
struct Polynomial {
    int n = 0;
    std::vector<MonomialTerm> terms;

    cdouble eval(const CVector& t) const;
    Polynomial partial(int alpha) const;
};

/// coeff * Q(t)^power with Q a polynomial and power rational non-integer.
/// Q^power is taken on the principal branch.
struct RadicalTerm {
    cdouble coeff;
    Polynomial Q;
    double power;
};

/// Prepotential F = sum of monomials + radical terms, with declared degrees,
/// charge and flat metric. Third derivatives are exact (term-by-term
/// differentiation), so unit and symmetry checks hold to machine precision.
class Prepotential {
public:
    Prepotential(int n, double charge, std::vector<double> degrees, CMatrix eta,
                 std::vector<MonomialTerm> monomials, std::vector<RadicalTerm> radicals);

    int dim() const { return n_; }
    double charge() const { return charge_; }
    const std::vector<double>& degrees() const { return degrees_; }
    const CMatrix& eta() const { return eta_; }
    const CMatrix& eta_inv() const { return eta_inv_; }
    const std::vector<MonomialTerm>& monomials() const { return monomials_; }
    const std::vector<RadicalTerm>& radicals() const { return radicals_; }

    /// mu_alpha = (2-d)/2 - d_alpha.
    double mu(int alpha) const { return 0.5 * (2.0 - charge_) - degrees_[alpha]; }

    cdouble value(const CVector& t) const;
    /// Exact c_{abc}(t). Throws RadicalBranch when a radical argument lies on
    /// the principal cut.
    Tensor3 third_derivatives(const CVector& t) const;

private:
    struct RadicalCache {
        RadicalTerm term;
        std::vector<Polynomial> d1;               // Q_a
        std::vector<std::vector<Polynomial>> d2;  // Q_ab, a<=b
        std::vector<Polynomial> d3;               // Q_abc packed
        size_t idx3(int a, int b, int c) const;   // a<=b<=c
    };

    int n_;
    double charge_;
    std::vector<double> degrees_;
    CMatrix eta_, eta_inv_;
    std::vector<MonomialTerm> monomials_;
    std::vector<RadicalTerm> radicals_;
    std::vector<RadicalCache> rcache_;
};

/// All pointwise tensors derived from F at t.
struct FrobeniusPoint {
    CVector t;
    CMatrix eta, eta_inv;
    Tensor3 c;       // c_{abc}
    Tensor3 c_up;    // c^a_{bc} = eta^{am} c_{mbc}  (first index raised)
    CMatrix U;       // Euler multiplication U^a_b
    CMatrix g;       // intersection form g^{ab}
    CMatrix eta_tilde;  // third metric = eta^{am}(U^2)^b_m
    CVector mu_hat;  // diag entries of the grading operator
};

FrobeniusPoint evaluate_point(const Prepotential& F, const CVector& t);

/// 1/2 (t^1)^2 t^2 in n = 2; the simplest unit-normalized solution.
Prepotential trivial_cubic2();

}  // namespace triham::frobenius
