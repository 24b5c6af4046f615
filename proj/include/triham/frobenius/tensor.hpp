#pragma once

#include "triham/common.hpp"

namespace triham::frobenius {

class Tensor3 {
public:
    Tensor3() = default;
    explicit Tensor3(int n) : n_(n), v_(static_cast<size_t>(n) * n * n, cdouble(0, 0)) {}
    cdouble& operator()(int a, int b, int c) { return v_[idx(a, b, c)]; }
    cdouble operator()(int a, int b, int c) const { return v_[idx(a, b, c)]; }
    int dim() const { return n_; }

    double max_abs() const {
        double m = 0;
        for (const auto& x : v_) m = std::max(m, std::abs(x));
        return m;
    }

private:
    size_t idx(int a, int b, int c) const {
        return (static_cast<size_t>(a) * n_ + b) * n_ + c;
    }
    int n_ = 0;
    std::vector<cdouble> v_;
};

class Tensor4 {
public:
    Tensor4() = default;
    explicit Tensor4(int n) : n_(n), v_(static_cast<size_t>(n) * n * n * n, cdouble(0, 0)) {}
    cdouble& operator()(int a, int b, int c, int d) { return v_[idx(a, b, c, d)]; }
    cdouble operator()(int a, int b, int c, int d) const { return v_[idx(a, b, c, d)]; }
    int dim() const { return n_; }

    double max_abs() const {
        double m = 0;
        for (const auto& x : v_) m = std::max(m, std::abs(x));
        return m;
    }

private:
    size_t idx(int a, int b, int c, int d) const {
        return ((static_cast<size_t>(a) * n_ + b) * n_ + c) * n_ + d;
    }
    int n_ = 0;
    std::vector<cdouble> v_;
};

}  // namespace triham::frobenius
