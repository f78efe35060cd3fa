#pragma once

#include <functional>

#include "simpo/matrix.hpp"
#include "simpo/weighting.hpp"

namespace simpo {

struct NormalizerResult {
    double nu = 0.0;
    int active_k = 0;       // samples strictly above the clip level
    double residual = 0.0;  // |mean(w) - 1| at the returned nu
};

// nu = lambda (logsumexp(q/lambda) - ln N); mean exp((q - nu)/lambda) = 1.
NormalizerResult solve_nu_exp(const Vec& q, double lambda);

// Sorted cumulative-sum solve of mean(max((q - nu)/lambda, 0)) = 1.
NormalizerResult solve_nu_linear(const Vec& q, double lambda);

// Boundary-energy scan + negative quadratic root for
// mean(max((q - nu)/lambda, 0)^2) = 1.
NormalizerResult solve_nu_square(const Vec& q, double lambda);

// Safeguarded bisection for mean(max((q - nu)/lambda, floor)) = 1, floor < 0.
NormalizerResult solve_nu_floor(const Vec& q, double lambda, double floor);

// Generic bisection on a strictly decreasing mean-weight map; the independent
// oracle every closed form above is checked against.
double solve_nu_bisection(const std::function<double(double)>& mean_weight, double target_mean,
                          double lo, double hi, int max_iter = 200, double tol = 1e-10);

// Dispatch on the scheme (PowerAlpha goes through bisection; Wd1 has no nu).
NormalizerResult solve_nu(const WeightingScheme& scheme, const Vec& q);

// mean weight as a function of nu for a scheme, for use with the bisection oracle
double mean_weight_at(const WeightingScheme& scheme, const Vec& q, double nu);

// Stationarity violation of the scheme's mean-one weights against a candidate
// nu: max over active samples of |f'(w_i) - (q_i - nu)/lambda| plus the
// clip-side violation max(0, (q_i - nu)/lambda - f'(clip)) over inactive ones.
// Zero (to solver tolerance) iff nu solves the normalization.
double kkt_residual(const WeightingScheme& scheme, const Vec& q, double nu);

} // namespace simpo
