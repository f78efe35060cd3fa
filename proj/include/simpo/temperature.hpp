#pragma once

#include "simpo/matrix.hpp"

namespace simpo {

// Dual descent on lambda for the KL-budget constraint. Only meaningful for
// the Exp scheme, whose dual has the logsumexp form below.
struct TemperatureTuner {
    double lambda = 1.0;
    double epsilon = 1.5;   // KL budget in nats, 0 < epsilon < ln N
    double step_size = 1e-2;
    double lambda_min = 1e-3;

    void validate(std::size_t n_samples) const;
};

// lambda*eps + lambda*logsumexp(q/lambda) - lambda*ln N
double dual_loss(double lambda, const Vec& q, double epsilon);

// d/dlambda of the dual loss: eps + H(softmax(q/lambda)) - ln N
double dual_gradient(double lambda, const Vec& q, double epsilon);

// one projected descent step: lambda <- max(lambda - step*grad, lambda_min)
void lambda_step(TemperatureTuner& tuner, const Vec& q);

// Shannon entropy (nats) of softmax(q/lambda); the dual gradient's moving part
double weight_entropy(const Vec& q, double lambda);

} // namespace simpo
