#pragma once

#include <string>

#include "simpo/matrix.hpp"

namespace simpo {

// Forward corruption x_t = alpha(t) x0 + sigma(t) eps on t in (0, 1];
// t = 0 is data, t = 1 is noise.
enum class ScheduleKind { LinearFlow, VarianceExploding, CosineVP };

struct NoiseSchedule {
    ScheduleKind kind = ScheduleKind::LinearFlow;
    double cosine_offset = 0.008; // CosineVP only
};

struct ScheduleValue {
    double alpha, sigma, dalpha, dsigma;
};

ScheduleValue schedule_eval(const NoiseSchedule& sched, double t);

// v_{t|0}(x_t | x0) = ((sigma*dalpha - dsigma*alpha)/sigma) x0 + (dsigma/sigma) x_t
Vec conditional_velocity(const NoiseSchedule& sched, const Vec& x0, const Vec& xt, double t);

// x_t = alpha(t) x0 + sigma(t) noise
Vec perturb(const NoiseSchedule& sched, const Vec& x0, const Vec& noise, double t);

ScheduleKind schedule_kind_from_string(const std::string& name);
std::string to_string(ScheduleKind kind);

} // namespace simpo
