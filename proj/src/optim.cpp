#include "simpo/optim.hpp"

#include <cmath>
#include <string>

#include "simpo/errors.hpp"

namespace simpo {

OptimizerState OptimizerState::like(const std::vector<const Vec*>& params, double lr) {
    OptimizerState s;
    s.lr = lr;
    for (const Vec* p : params) {
        s.m.emplace_back(p->size(), 0.0);
        s.v.emplace_back(p->size(), 0.0);
    }
    return s;
}

void adam_step(OptimizerState& state, const std::vector<Vec*>& params,
               const std::vector<const Vec*>& grads) {
    if (params.size() != grads.size() || params.size() != state.m.size())
        throw DomainError("adam_step: tensor count mismatch");
    for (std::size_t t = 0; t < grads.size(); ++t) {
        if (grads[t]->size() != params[t]->size())
            throw DomainError("adam_step: tensor " + std::to_string(t) + " shape mismatch");
        for (double g : *grads[t])
            if (!std::isfinite(g))
                throw DomainError("adam_step: non-finite gradient in tensor " + std::to_string(t));
    }
    state.step += 1;
    const double bc1 = 1.0 - std::pow(state.beta1, static_cast<double>(state.step));
    const double bc2 = 1.0 - std::pow(state.beta2, static_cast<double>(state.step));
    for (std::size_t t = 0; t < params.size(); ++t) {
        Vec& p = *params[t];
        const Vec& g = *grads[t];
        Vec& m = state.m[t];
        Vec& v = state.v[t];
        for (std::size_t i = 0; i < p.size(); ++i) {
            m[i] = state.beta1 * m[i] + (1.0 - state.beta1) * g[i];
            v[i] = state.beta2 * v[i] + (1.0 - state.beta2) * g[i] * g[i];
            const double mhat = m[i] / bc1;
            const double vhat = v[i] / bc2;
            p[i] -= state.lr * mhat / (std::sqrt(vhat) + state.eps);
        }
    }
}

Vec finite_diff_grad(const std::function<double(const Vec&)>& f, const Vec& x, double h) {
    if (h <= 0.0) throw DomainError("finite_diff_grad: h must be positive");
    Vec grad(x.size(), 0.0);
    Vec probe = x;
    for (std::size_t i = 0; i < x.size(); ++i) {
        probe[i] = x[i] + h;
        const double up = f(probe);
        probe[i] = x[i] - h;
        const double down = f(probe);
        probe[i] = x[i];
        grad[i] = (up - down) / (2.0 * h);
    }
    return grad;
}

} // namespace simpo
