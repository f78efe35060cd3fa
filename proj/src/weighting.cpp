#include "simpo/weighting.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

#include "simpo/errors.hpp"

namespace simpo {

void WeightingScheme::validate() const {
    if (!(lambda > 0.0)) throw DomainError("WeightingScheme: lambda must be > 0");
    if (rule == WeightRule::PowerAlpha && !(alpha > 1.0))
        throw DomainError("WeightingScheme: PowerAlpha needs alpha > 1");
    if (rule == WeightRule::LinearNegative && !(floor < 0.0))
        throw DomainError("WeightingScheme: LinearNegative needs floor < 0");
}

std::string to_string(WeightRule rule) {
    switch (rule) {
    case WeightRule::Exp: return "exp";
    case WeightRule::Linear: return "linear";
    case WeightRule::Square: return "square";
    case WeightRule::PowerAlpha: return "power_alpha";
    case WeightRule::LinearNegative: return "linear_negative";
    case WeightRule::Wd1: return "wd1";
    }
    return "?";
}

WeightRule weight_rule_from_string(const std::string& name) {
    if (name == "exp") return WeightRule::Exp;
    if (name == "linear") return WeightRule::Linear;
    if (name == "square") return WeightRule::Square;
    if (name == "power_alpha") return WeightRule::PowerAlpha;
    if (name == "linear_negative") return WeightRule::LinearNegative;
    if (name == "wd1") return WeightRule::Wd1;
    throw DomainError("unknown weighting scheme '" + name + "'");
}

void SampleBatch::validate() const {
    if (actions.size() < 2) throw DomainError("SampleBatch: need at least 2 samples");
    if (values.size() != actions.size())
        throw DomainError("SampleBatch: values/actions length mismatch");
    for (double v : values)
        if (!std::isfinite(v)) throw DomainError("SampleBatch: non-finite value");
}

WeightVector evaluate_weights(const WeightingScheme& scheme, const Vec& q, double nu,
                              Normalization tag) {
    scheme.validate();
    if (scheme.rule == WeightRule::Wd1)
        throw DomainError("evaluate_weights: Wd1 weights come from wd1_weights, not a nu map");
    WeightVector out;
    out.tag = tag;
    out.w.resize(q.size());
    for (std::size_t i = 0; i < q.size(); ++i) {
        const double x = (q[i] - nu) / scheme.lambda;
        double w = 0.0;
        switch (scheme.rule) {
        case WeightRule::Exp:
            w = std::exp(x);
            break;
        case WeightRule::Linear:
            w = std::max(x, 0.0);
            break;
        case WeightRule::Square:
            w = std::max(x, 0.0) * std::max(x, 0.0);
            break;
        case WeightRule::PowerAlpha:
            w = std::pow(std::max(x, 0.0), 1.0 / (scheme.alpha - 1.0));
            break;
        case WeightRule::LinearNegative:
            w = std::max(x, scheme.floor);
            break;
        case WeightRule::Wd1:
            break; // unreachable
        }
        if (!std::isfinite(w))
            throw DomainError("evaluate_weights: non-finite weight at sample " + std::to_string(i));
        out.w[i] = w;
    }
    if (tag == Normalization::MeanOne && std::abs(mean(out.w) - 1.0) > 1e-8)
        throw InvariantError("evaluate_weights: MeanOne tag violated");
    return out;
}

Vec group_relative_advantage(const Vec& rewards) {
    if (rewards.size() < 2) throw DomainError("group_relative_advantage: need N >= 2");
    const double mu = mean(rewards);
    double var = 0.0;
    for (double r : rewards) var += (r - mu) * (r - mu);
    var /= static_cast<double>(rewards.size());
    const double sd = std::max(std::sqrt(var), 1e-6);
    Vec adv(rewards.size());
    for (std::size_t i = 0; i < rewards.size(); ++i) adv[i] = (rewards[i] - mu) / sd;
    return adv;
}

namespace {

Vec softmax(const Vec& x) {
    double m = x[0];
    for (double v : x) m = std::max(m, v);
    Vec p(x.size());
    double z = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        p[i] = std::exp(x[i] - m);
        z += p[i];
    }
    for (double& v : p) v /= z;
    return p;
}

} // namespace

WeightVector wd1_weights(const Vec& advantages) {
    for (double a : advantages)
        if (!std::isfinite(a)) throw DomainError("wd1_weights: non-finite advantage");
    Vec neg(advantages.size());
    for (std::size_t i = 0; i < advantages.size(); ++i) neg[i] = -advantages[i];
    const Vec sp = softmax(advantages);
    const Vec sn = softmax(neg);
    WeightVector out;
    out.tag = Normalization::SumZero;
    out.w.resize(advantages.size());
    for (std::size_t i = 0; i < advantages.size(); ++i) out.w[i] = sp[i] - sn[i];
    return out;
}

double f_divergence_value(const FDivergence& gen, const Vec& p, const Vec& q) {
    if (p.size() != q.size() || p.empty()) throw DomainError("f_divergence_value: size mismatch");
    double sp = 0.0, sq = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (!(q[i] > 0.0)) throw DomainError("f_divergence_value: q must be strictly positive");
        sp += p[i];
        sq += q[i];
    }
    if (std::abs(sp - 1.0) > 1e-8 || std::abs(sq - 1.0) > 1e-8)
        throw DomainError("f_divergence_value: p and q must sum to 1");

    switch (gen.kind) {
    case FDivergence::Kind::KL: {
        double d = 0.0;
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (p[i] < 0.0) throw DomainError("f_divergence_value: KL undefined for signed p");
            if (p[i] > 0.0) d += p[i] * std::log(p[i] / q[i]); // 0 log 0 = 0
        }
        return d;
    }
    case FDivergence::Kind::ChiSquare: {
        // f(x) = x^2 - 1, convex on all of R, fine for signed p
        double d = 0.0;
        for (std::size_t i = 0; i < p.size(); ++i) d += p[i] * p[i] / q[i];
        return d - 1.0;
    }
    case FDivergence::Kind::Alpha: {
        if (!(gen.alpha > 1.0)) throw DomainError("f_divergence_value: alpha must be > 1");
        const double a = gen.alpha;
        const bool even_int =
            std::abs(a - std::round(a)) < 1e-12 && (static_cast<std::int64_t>(std::round(a)) % 2 == 0);
        double d = 0.0;
        for (std::size_t i = 0; i < p.size(); ++i) {
            const double r = p[i] / q[i];
            if (r < 0.0 && !even_int)
                throw DomainError("f_divergence_value: alpha generator undefined for signed p "
                                  "unless alpha is an even integer");
            const double ra = even_int ? std::pow(std::abs(r), a) : std::pow(r, a);
            d += q[i] * (ra - r) / (a * (a - 1.0));
        }
        return d;
    }
    }
    throw DomainError("f_divergence_value: unknown generator");
}

} // namespace simpo
