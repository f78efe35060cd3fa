#pragma once

#include <cstddef>
#include <vector>

#include "simpo/errors.hpp"

namespace simpo {

using Vec = std::vector<double>;

// Dense row-major matrix. Deliberately minimal: the networks here are tiny
// MLPs, so plain loops beat pulling in a linear-algebra dependency.
struct Mat {
    std::size_t rows = 0;
    std::size_t cols = 0;
    Vec a; // rows*cols, row-major

    Mat() = default;
    Mat(std::size_t r, std::size_t c, double fill = 0.0) : rows(r), cols(c), a(r * c, fill) {}

    double& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    double operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

// y = W x + b
inline void affine(const Mat& w, const Vec& b, const Vec& x, Vec& y) {
    if (x.size() != w.cols || b.size() != w.rows)
        throw DomainError("affine: shape mismatch");
    y.assign(w.rows, 0.0);
    for (std::size_t i = 0; i < w.rows; ++i) {
        double s = b[i];
        const double* wi = &w.a[i * w.cols];
        for (std::size_t j = 0; j < w.cols; ++j) s += wi[j] * x[j];
        y[i] = s;
    }
}

inline double dot(const Vec& x, const Vec& y) {
    if (x.size() != y.size()) throw DomainError("dot: length mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
}

inline double mean(const Vec& x) {
    if (x.empty()) throw DomainError("mean: empty vector");
    double s = 0.0;
    for (double v : x) s += v;
    return s / static_cast<double>(x.size());
}

} // namespace simpo
