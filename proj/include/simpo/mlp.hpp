#pragma once

#include <cstdint>
#include <vector>

#include "simpo/matrix.hpp"
#include "simpo/rng.hpp"

namespace simpo {

double softplus(double x);
double mish(double x);
double mish_grad(double x);

// Fully connected network, Mish on hidden layers, identity output.
struct Mlp {
    std::vector<Mat> weights; // layer l: out x in
    std::vector<Vec> biases;

    std::size_t num_layers() const { return weights.size(); }
    std::size_t input_dim() const { return weights.empty() ? 0 : weights.front().cols; }
    std::size_t output_dim() const { return weights.empty() ? 0 : weights.back().rows; }
    std::size_t param_count() const;

    // parameter tensors in a fixed order: W0, b0, W1, b1, ...
    std::vector<Vec*> param_tensors();
    std::vector<const Vec*> param_tensors() const;
};

// layer_sizes = {in, h1, ..., out}; He-style init, output layer scaled down so
// a fresh policy is close to the identity map on its noise draw
Mlp make_mlp(const std::vector<std::size_t>& layer_sizes, RngStream& rng);

// Activations recorded by a forward pass, consumed by the backward pass.
struct MlpTape {
    Vec input;
    std::vector<Vec> pre;  // pre-activation per layer
    std::vector<Vec> post; // post-activation per layer (post.back() = output)
};

struct MlpGrads {
    std::vector<Mat> dw;
    std::vector<Vec> db;

    static MlpGrads zeros_like(const Mlp& net);
    void add_scaled(const MlpGrads& other, double scale);
    std::vector<const Vec*> param_tensors() const;
    std::vector<Vec*> param_tensors();
};

Vec mlp_forward(const Mlp& net, const Vec& input, MlpTape* tape = nullptr);

// Reverse-mode gradient of <upstream, output>. Accumulates into `grads` and
// returns the gradient w.r.t. the input.
Vec mlp_backward(const Mlp& net, const MlpTape& tape, const Vec& upstream, MlpGrads& grads);

} // namespace simpo
