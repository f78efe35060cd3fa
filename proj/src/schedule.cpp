#include "simpo/schedule.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "simpo/errors.hpp"

namespace simpo {

ScheduleValue schedule_eval(const NoiseSchedule& sched, double t) {
    if (!(t > 0.0 && t <= 1.0))
        throw DomainError("schedule_eval: t must lie in (0, 1] (sigma(0) = 0 is singular)");
    switch (sched.kind) {
    case ScheduleKind::LinearFlow:
        return {1.0 - t, t, -1.0, 1.0};
    case ScheduleKind::VarianceExploding:
        return {1.0, std::sqrt(t), 0.0, 0.5 / std::sqrt(t)};
    case ScheduleKind::CosineVP: {
        const double s = sched.cosine_offset;
        const double half_pi = 0.5 * std::numbers::pi;
        const auto f = [&](double u) {
            const double c = std::cos((u + s) / (1.0 + s) * half_pi);
            return c * c;
        };
        const double f0 = f(0.0);
        const double ratio = f(t) / f0; // alpha_bar(t), decreasing from 1 to 0
        const double theta = (t + s) / (1.0 + s) * half_pi;
        const double dratio = -std::sin(2.0 * theta) * half_pi / (1.0 + s) / f0;
        const double alpha = std::sqrt(ratio);
        const double sigma = std::sqrt(1.0 - ratio);
        return {alpha, sigma, 0.5 * dratio / alpha, -0.5 * dratio / sigma};
    }
    }
    throw DomainError("schedule_eval: unknown schedule");
}

Vec conditional_velocity(const NoiseSchedule& sched, const Vec& x0, const Vec& xt, double t) {
    if (x0.size() != xt.size()) throw DomainError("conditional_velocity: shape mismatch");
    const ScheduleValue sv = schedule_eval(sched, t);
    const double c0 = (sv.sigma * sv.dalpha - sv.dsigma * sv.alpha) / sv.sigma;
    const double ct = sv.dsigma / sv.sigma;
    Vec v(x0.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = c0 * x0[i] + ct * xt[i];
    return v;
}

Vec perturb(const NoiseSchedule& sched, const Vec& x0, const Vec& noise, double t) {
    if (x0.size() != noise.size()) throw DomainError("perturb: shape mismatch");
    const ScheduleValue sv = schedule_eval(sched, t);
    Vec xt(x0.size());
    for (std::size_t i = 0; i < xt.size(); ++i) xt[i] = sv.alpha * x0[i] + sv.sigma * noise[i];
    return xt;
}

ScheduleKind schedule_kind_from_string(const std::string& name) {
    if (name == "linear_flow") return ScheduleKind::LinearFlow;
    if (name == "ve") return ScheduleKind::VarianceExploding;
    if (name == "cosine_vp") return ScheduleKind::CosineVP;
    throw DomainError("unknown schedule '" + name + "'");
}

std::string to_string(ScheduleKind kind) {
    switch (kind) {
    case ScheduleKind::LinearFlow: return "linear_flow";
    case ScheduleKind::VarianceExploding: return "ve";
    case ScheduleKind::CosineVP: return "cosine_vp";
    }
    return "?";
}

} // namespace simpo
