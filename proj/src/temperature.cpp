#include "simpo/temperature.hpp"

#include <algorithm>
#include <cmath>

#include "simpo/errors.hpp"

namespace simpo {

namespace {

// returns logsumexp(q/lambda) and, if wanted, the softmax entropy
double logsumexp_scaled(const Vec& q, double lambda, double* entropy) {
    double m = q[0];
    for (double v : q) m = std::max(m, v);
    double z = 0.0;
    for (double v : q) z += std::exp((v - m) / lambda);
    const double lse = m / lambda + std::log(z);
    if (entropy) {
        double h = 0.0;
        for (double v : q) {
            const double logp = (v - m) / lambda - std::log(z);
            h -= std::exp(logp) * logp;
        }
        *entropy = h;
    }
    return lse;
}

} // namespace

void TemperatureTuner::validate(std::size_t n_samples) const {
    if (!(lambda >= lambda_min && lambda_min > 0.0))
        throw DomainError("TemperatureTuner: need lambda >= lambda_min > 0");
    if (!(epsilon > 0.0 && epsilon < std::log(static_cast<double>(n_samples))))
        throw DomainError("TemperatureTuner: need 0 < epsilon < ln N");
}

double dual_loss(double lambda, const Vec& q, double epsilon) {
    if (!(lambda > 0.0)) throw DomainError("dual_loss: lambda must be > 0");
    if (q.empty()) throw DomainError("dual_loss: empty batch");
    const double lse = logsumexp_scaled(q, lambda, nullptr);
    return lambda * epsilon + lambda * lse - lambda * std::log(static_cast<double>(q.size()));
}

double dual_gradient(double lambda, const Vec& q, double epsilon) {
    if (!(lambda > 0.0)) throw DomainError("dual_gradient: lambda must be > 0");
    if (q.empty()) throw DomainError("dual_gradient: empty batch");
    return epsilon + weight_entropy(q, lambda) - std::log(static_cast<double>(q.size()));
}

void lambda_step(TemperatureTuner& tuner, const Vec& q) {
    const double g = dual_gradient(tuner.lambda, q, tuner.epsilon);
    tuner.lambda = std::max(tuner.lambda - tuner.step_size * g, tuner.lambda_min);
}

double weight_entropy(const Vec& q, double lambda) {
    if (!(lambda > 0.0)) throw DomainError("weight_entropy: lambda must be > 0");
    if (q.empty()) throw DomainError("weight_entropy: empty batch");
    double h = 0.0;
    logsumexp_scaled(q, lambda, &h);
    return h;
}

} // namespace simpo
