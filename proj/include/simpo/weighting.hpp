#pragma once

#include <string>
#include <vector>

#include "simpo/matrix.hpp"

namespace simpo {

// Monotone weight rules g((Q - nu) / lambda). LinearNegative keeps a negative
// floor instead of clipping at zero; Wd1 is the dual-softmax rule over
// group-relative advantages and does not use nu.
enum class WeightRule { Exp, Linear, Square, PowerAlpha, LinearNegative, Wd1 };

struct WeightingScheme {
    WeightRule rule = WeightRule::Exp;
    double lambda = 1.0;
    double floor = -0.05; // LinearNegative
    double alpha = 1.5;   // PowerAlpha, > 1

    void validate() const;
};

std::string to_string(WeightRule rule);
WeightRule weight_rule_from_string(const std::string& name);

enum class Normalization { MeanOne, SumZero, Unnormalized };

struct WeightVector {
    Vec w;
    Normalization tag = Normalization::Unnormalized;
};

// One state's sampled actions and their scalar values.
struct SampleBatch {
    Vec context; // may be empty (stateless bandit)
    std::vector<Vec> actions;
    Vec values;

    void validate() const;
};

// Applies the scheme's weight map at a given normalizer nu. Tag with MeanOne
// only when nu came from the matching solver; the tag's invariant is checked.
WeightVector evaluate_weights(const WeightingScheme& scheme, const Vec& q, double nu,
                              Normalization tag = Normalization::Unnormalized);

// (R - mean) / max(std, 1e-6), population std.
Vec group_relative_advantage(const Vec& rewards);

// softmax(adv) - softmax(-adv); sums to zero.
WeightVector wd1_weights(const Vec& advantages);

struct FDivergence {
    enum class Kind { KL, ChiSquare, Alpha };
    Kind kind = Kind::KL;
    double alpha = 2.0; // Kind::Alpha, > 1
};

// sum_i q_i f(p_i / q_i) with p possibly signed; q strictly positive, both
// summing to one. KL rejects negative p; Alpha requires an even integer alpha
// for signed p (the generator must extend convexly to the real line).
double f_divergence_value(const FDivergence& gen, const Vec& p, const Vec& q);

} // namespace simpo
