#pragma once

#include <random>

#include "triham/frobenius/prepotential.hpp"

namespace fixtures {

using namespace triham;

/// A4 unfolding prepotential: a quasi-homogeneous WDVV solution whose
/// spectrum (-3/10, -1/10, 1/10, 3/10) does not split into +-mu; the
/// canonical non-tri-hamiltonian control.
inline frobenius::Prepotential a4_prepotential() {
    using frobenius::MonomialTerm;
    std::vector<MonomialTerm> mono = {
        {cdouble(0.5, 0), {2, 0, 0, 1}},
        {cdouble(1.0, 0), {1, 1, 1, 0}},
        {cdouble(1.0 / 30, 0), {0, 3, 0, 0}},
        {cdouble(-0.25, 0), {0, 2, 0, 2}},
        {cdouble(-2.5, 0), {0, 1, 2, 1}},
        {cdouble(-25.0 / 12, 0), {0, 0, 4, 0}},
        {cdouble(25.0 / 6, 0), {0, 0, 2, 3}},
        {cdouble(-5.0 / 24, 0), {0, 0, 0, 6}},
    };
    CMatrix eta = CMatrix::Zero(4, 4);
    for (int a = 0; a < 4; ++a) eta(a, 3 - a) = 1.0;
    return frobenius::Prepotential(4, 0.6, {1.0, 0.8, 0.6, 0.4}, eta, std::move(mono), {});
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
    return lo + (hi - lo) * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
}

/// Real sample points keeping every radical argument well positive.
inline std::vector<CVector> sample_points(const frobenius::Prepotential& F, int count,
                                          unsigned seed) {
    std::mt19937_64 rng(seed);
    std::vector<CVector> out;
    while (static_cast<int>(out.size()) < count) {
        CVector t(F.dim());
        for (int a = 0; a < F.dim(); ++a) t(a) = cdouble(uniform(rng, -1.0, 1.0), 0);
        bool ok = true;
        for (const auto& r : F.radicals())
            if (r.Q.eval(t).real() < 0.05) ok = false;
        if (ok) out.push_back(t);
    }
    return out;
}

}  // namespace fixtures
