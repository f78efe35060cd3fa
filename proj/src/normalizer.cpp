#include "simpo/normalizer.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "simpo/errors.hpp"

namespace simpo {

namespace {

double logsumexp(const Vec& x) {
    double m = x[0];
    for (double v : x) m = std::max(m, v);
    double s = 0.0;
    for (double v : x) s += std::exp(v - m);
    return m + std::log(s);
}

Vec sorted_descending(const Vec& q) {
    Vec s = q;
    std::sort(s.begin(), s.end(), std::greater<double>());
    return s;
}

double residual_at(const WeightingScheme& scheme, const Vec& q, double nu) {
    return std::abs(mean_weight_at(scheme, q, nu) - 1.0);
}

} // namespace

double mean_weight_at(const WeightingScheme& scheme, const Vec& q, double nu) {
    return mean(evaluate_weights(scheme, q, nu).w);
}

NormalizerResult solve_nu_exp(const Vec& q, double lambda) {
    if (q.empty()) throw DomainError("solve_nu_exp: empty batch");
    if (!(lambda > 0.0)) throw DomainError("solve_nu_exp: lambda must be > 0");
    Vec scaled(q.size());
    for (std::size_t i = 0; i < q.size(); ++i) scaled[i] = q[i] / lambda;
    NormalizerResult r;
    r.nu = lambda * (logsumexp(scaled) - std::log(static_cast<double>(q.size())));
    r.active_k = static_cast<int>(q.size());
    r.residual = residual_at({WeightRule::Exp, lambda}, q, r.nu);
    return r;
}

NormalizerResult solve_nu_linear(const Vec& q, double lambda) {
    if (q.empty()) throw DomainError("solve_nu_linear: empty batch");
    if (!(lambda > 0.0)) throw DomainError("solve_nu_linear: lambda must be > 0");
    const std::size_t n = q.size();
    const Vec s = sorted_descending(q);
    const double target = static_cast<double>(n) * lambda;

    // excess_k = sum_{j<=k} (s_j - s_k) is nondecreasing in k; keep the
    // largest k with excess strictly below the target mass (ties excluded,
    // their weight is zero either way)
    std::size_t k = 0;
    double cumsum = 0.0, active_sum = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        cumsum += s[j];
        const double excess = cumsum - static_cast<double>(j + 1) * s[j];
        if (excess < target) {
            k = j + 1;
            active_sum = cumsum;
        }
    }
    k = std::max<std::size_t>(k, 1); // all-inactive cannot satisfy the constraint

    NormalizerResult r;
    r.nu = (active_sum - target) / static_cast<double>(k);
    r.active_k = static_cast<int>(k);
    r.residual = residual_at({WeightRule::Linear, lambda}, q, r.nu);
    return r;
}

NormalizerResult solve_nu_square(const Vec& q, double lambda) {
    if (q.empty()) throw DomainError("solve_nu_square: empty batch");
    if (!(lambda > 0.0)) throw DomainError("solve_nu_square: lambda must be > 0");
    const std::size_t n = q.size();
    const Vec s = sorted_descending(q);
    const double target = static_cast<double>(n) * lambda * lambda;

    std::size_t k = 0;
    double cumsum = 0.0, cumsum2 = 0.0, s1 = 0.0, s2 = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        cumsum += s[j];
        cumsum2 += s[j] * s[j];
        // boundary energy E_k = sum_{j<=k} (s_j - s_k)^2
        const double energy = cumsum2 - 2.0 * s[j] * cumsum + static_cast<double>(j + 1) * s[j] * s[j];
        if (energy < target) {
            k = j + 1;
            s1 = cumsum;
            s2 = cumsum2;
        }
    }
    k = std::max<std::size_t>(k, 1);

    const double kd = static_cast<double>(k);
    const double disc = s1 * s1 - kd * (s2 - target);
    if (disc < 0.0)
        throw InvariantError("solve_nu_square: negative discriminant (k=" + std::to_string(k) + ")");
    NormalizerResult r;
    r.nu = (s1 - std::sqrt(disc)) / kd; // negative root, nu below the active mean
    r.active_k = static_cast<int>(k);
    r.residual = residual_at({WeightRule::Square, lambda}, q, r.nu);
    return r;
}

NormalizerResult solve_nu_floor(const Vec& q, double lambda, double floor) {
    if (q.empty()) throw DomainError("solve_nu_floor: empty batch");
    if (!(lambda > 0.0)) throw DomainError("solve_nu_floor: lambda must be > 0");
    if (floor >= 1.0) throw DomainError("solve_nu_floor: floor >= 1 makes mean(w)=1 infeasible");
    const double n = static_cast<double>(q.size());
    const double qmin = *std::min_element(q.begin(), q.end());
    const double qmax = *std::max_element(q.begin(), q.end());
    // at lo the unclipped term alone pushes the mean above 1; at hi it is
    // at most max(0, floor) < 1
    const double lo = qmin - lambda * (1.0 - floor) * n;
    const double hi = qmax;
    WeightingScheme scheme{WeightRule::LinearNegative, lambda};
    scheme.floor = floor;
    const double nu = solve_nu_bisection(
        [&](double v) { return mean_weight_at(scheme, q, v); }, 1.0, lo, hi, 200, 1e-11);
    NormalizerResult r;
    r.nu = nu;
    int k = 0;
    for (double qi : q)
        if ((qi - nu) / lambda > floor) ++k;
    r.active_k = k;
    r.residual = residual_at(scheme, q, nu);
    return r;
}

double solve_nu_bisection(const std::function<double(double)>& mean_weight, double target_mean,
                          double lo, double hi, int max_iter, double tol) {
    double flo = mean_weight(lo);
    double fhi = mean_weight(hi);
    if (!(flo >= target_mean && fhi <= target_mean))
        throw DomainError("solve_nu_bisection: bracket does not straddle target (mean(lo)=" +
                          std::to_string(flo) + ", mean(hi)=" + std::to_string(fhi) + ")");
    double mid = lo;
    for (int it = 0; it < max_iter; ++it) {
        mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break; // bracket collapsed to adjacent doubles
        const double fm = mean_weight(mid);
        if (std::abs(fm - target_mean) <= tol && hi - lo <= 1e-12 * std::max(1.0, std::abs(mid)))
            return mid;
        if (fm >= target_mean)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

NormalizerResult solve_nu(const WeightingScheme& scheme, const Vec& q) {
    scheme.validate();
    switch (scheme.rule) {
    case WeightRule::Exp:
        return solve_nu_exp(q, scheme.lambda);
    case WeightRule::Linear:
        return solve_nu_linear(q, scheme.lambda);
    case WeightRule::Square:
        return solve_nu_square(q, scheme.lambda);
    case WeightRule::LinearNegative:
        return solve_nu_floor(q, scheme.lambda, scheme.floor);
    case WeightRule::PowerAlpha: {
        // no closed form in general; the monotone bisection covers it
        const double qmin = *std::min_element(q.begin(), q.end());
        const double qmax = *std::max_element(q.begin(), q.end());
        const double n = static_cast<double>(q.size());
        const double lo = qmin - scheme.lambda * (std::pow(n, scheme.alpha - 1.0) + 1.0);
        const double nu = solve_nu_bisection(
            [&](double v) { return mean_weight_at(scheme, q, v); }, 1.0, lo, qmax, 200, 1e-11);
        NormalizerResult r;
        r.nu = nu;
        int k = 0;
        for (double qi : q)
            if (qi > nu) ++k;
        r.active_k = k;
        r.residual = residual_at(scheme, q, nu);
        return r;
    }
    case WeightRule::Wd1:
        throw DomainError("solve_nu: Wd1 has no normalizer nu");
    }
    throw DomainError("solve_nu: unknown scheme");
}

double kkt_residual(const WeightingScheme& scheme, const Vec& q, double nu) {
    scheme.validate();
    if (scheme.rule == WeightRule::Wd1)
        throw DomainError("kkt_residual: Wd1 has no closed-form generator");
    // the feasible (mean-one) weights; stationarity is then checked against
    // the candidate nu
    const NormalizerResult solved = solve_nu(scheme, q);
    const Vec w = evaluate_weights(scheme, q, solved.nu).w;

    const double clip = (scheme.rule == WeightRule::LinearNegative) ? scheme.floor : 0.0;
    double active_res = 0.0, inactive_res = 0.0;
    for (std::size_t i = 0; i < q.size(); ++i) {
        const double x = (q[i] - nu) / scheme.lambda;
        const bool active = (scheme.rule == WeightRule::Exp) || w[i] > clip;
        if (active) {
            double fprime = 0.0; // f'(w_i), the inverse of the weight map on the active side
            switch (scheme.rule) {
            case WeightRule::Exp: fprime = std::log(w[i]); break;
            case WeightRule::Linear: fprime = w[i]; break;
            case WeightRule::Square: fprime = std::sqrt(w[i]); break;
            case WeightRule::PowerAlpha: fprime = std::pow(w[i], scheme.alpha - 1.0); break;
            case WeightRule::LinearNegative: fprime = w[i]; break;
            case WeightRule::Wd1: break; // unreachable
            }
            active_res = std::max(active_res, std::abs(fprime - x));
        } else {
            inactive_res = std::max(inactive_res, std::max(0.0, x - clip));
        }
    }
    return std::max(active_res, inactive_res);
}

} // namespace simpo
