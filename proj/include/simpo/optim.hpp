#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "simpo/matrix.hpp"

namespace simpo {

// Adaptive-moment (Adam) state; moment tensors mirror the parameter tensors.
struct OptimizerState {
    std::vector<Vec> m;
    std::vector<Vec> v;
    std::int64_t step = 0;
    double lr = 3e-4;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double eps = 1e-8;

    static OptimizerState like(const std::vector<const Vec*>& params, double lr);
};

// One bias-corrected Adam update, in place. Rejects non-finite gradients.
void adam_step(OptimizerState& state, const std::vector<Vec*>& params,
               const std::vector<const Vec*>& grads);

// Central finite differences, (f(x+h e_i) - f(x-h e_i)) / 2h.
Vec finite_diff_grad(const std::function<double(const Vec&)>& f, const Vec& x, double h);

} // namespace simpo
