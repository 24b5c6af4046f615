#pragma once

#include <functional>

#include "triham/common.hpp"

namespace triham::numkit {

/// Square root branch nearest to a previous value.
inline cdouble continuous_sqrt(cdouble w, cdouble prev) {
    cdouble r = std::sqrt(w);
    return (std::abs(r - prev) <= std::abs(-r - prev)) ? r : -r;
}

/// Principal log shifted by 2*pi*i*k to land nearest to a previous log value.
inline cdouble continuous_log(cdouble w, cdouble prev_log) {
    cdouble l = std::log(w);
    double k = std::round((prev_log.imag() - l.imag()) / (2 * kPi));
    return l + cdouble(0, 2 * kPi * k);
}

/// Continuously tracked branch of sqrt(radicand(z)) along a path.
///
/// The branch is fixed at the path start (principal, or nearest to ref_start)
/// and continued through a precomputed guide grid; arbitrary on-path queries
/// snap to the sign closest to the guide. The grid is refined until
/// consecutive guide values move by less than half their magnitude, so sign
/// flips between neighbours are unambiguous.
class BranchedSqrt {
public:
    BranchedSqrt(const CPath& path, std::function<cdouble(cdouble)> radicand,
                 cdouble ref_start = cdouble(0, 0), int min_per_segment = 64)
        : path_(path), radicand_(std::move(radicand)) {
        build(ref_start, min_per_segment);
    }

    /// Value at global path parameter tau in [0,1] (arc-length proportional).
    cdouble at_tau(double tau) const {
        size_t idx = static_cast<size_t>(tau * static_cast<double>(grid_.size() - 1) + 0.5);
        if (idx >= grid_.size()) idx = grid_.size() - 1;
        cdouble z = point_at(tau);
        return continuous_sqrt(radicand_(z), grid_[idx]);
    }

    cdouble point_at(double tau) const {
        double s = tau * total_len_;
        for (size_t k = 0; k + 1 < path_.pts.size(); ++k) {
            double lk = std::abs(path_.pts[k + 1] - path_.pts[k]);
            if (s <= lk || k + 2 == path_.pts.size())
                return path_.pts[k] + (path_.pts[k + 1] - path_.pts[k]) * (lk > 0 ? s / lk : 0.0);
            s -= lk;
        }
        return path_.pts.back();
    }

    cdouble tangent_at(double tau) const {
        double s = tau * total_len_;
        for (size_t k = 0; k + 1 < path_.pts.size(); ++k) {
            double lk = std::abs(path_.pts[k + 1] - path_.pts[k]);
            if (s <= lk || k + 2 == path_.pts.size())
                return (path_.pts[k + 1] - path_.pts[k]) * (total_len_ / (lk > 0 ? lk : 1.0));
            s -= lk;
        }
        return cdouble(0, 0);
    }

    cdouble start_value() const { return grid_.front(); }
    cdouble end_value() const { return grid_.back(); }

private:
    void build(cdouble ref_start, int per_segment) {
        total_len_ = path_.length();
        for (int attempt = 0; attempt < 6; ++attempt) {
            size_t n = static_cast<size_t>(per_segment) * path_.segments() + 1;
            grid_.assign(n, cdouble(0, 0));
            cdouble w0 = std::sqrt(radicand_(path_.pts.front()));
            if (ref_start != cdouble(0, 0)) w0 = continuous_sqrt(radicand_(path_.pts.front()), ref_start);
            grid_[0] = w0;
            bool ok = true;
            double scale = std::abs(w0);
            for (size_t k = 1; k < n; ++k) {
                double tau = static_cast<double>(k) / static_cast<double>(n - 1);
                grid_[k] = continuous_sqrt(radicand_(point_at(tau)), grid_[k - 1]);
                scale = std::max(scale, std::abs(grid_[k]));
                if (std::abs(grid_[k] - grid_[k - 1]) > 0.5 * std::max(std::abs(grid_[k - 1]), 1e-300)) {
                    ok = false;
                    break;
                }
            }
            if (ok) return;
            per_segment *= 4;
        }
        fail("BranchInconsistency", "could not build a stable branch guide along the path");
    }

    CPath path_;
    std::function<cdouble(cdouble)> radicand_;
    std::vector<cdouble> grid_;
    double total_len_ = 0;
};

}  // namespace triham::numkit
