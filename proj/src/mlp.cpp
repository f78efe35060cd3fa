#include "simpo/mlp.hpp"

#include <cmath>

#include "simpo/errors.hpp"

namespace simpo {

double softplus(double x) {
    // max(x,0) + log1p(e^{-|x|}) never overflows
    return std::max(x, 0.0) + std::log1p(std::exp(-std::abs(x)));
}

double mish(double x) {
    return x * std::tanh(softplus(x));
}

double mish_grad(double x) {
    const double ts = std::tanh(softplus(x));
    const double sig = 1.0 / (1.0 + std::exp(-x));
    return ts + x * sig * (1.0 - ts * ts);
}

std::size_t Mlp::param_count() const {
    std::size_t n = 0;
    for (std::size_t l = 0; l < weights.size(); ++l) n += weights[l].a.size() + biases[l].size();
    return n;
}

std::vector<Vec*> Mlp::param_tensors() {
    std::vector<Vec*> out;
    for (std::size_t l = 0; l < weights.size(); ++l) {
        out.push_back(&weights[l].a);
        out.push_back(&biases[l]);
    }
    return out;
}

std::vector<const Vec*> Mlp::param_tensors() const {
    std::vector<const Vec*> out;
    for (std::size_t l = 0; l < weights.size(); ++l) {
        out.push_back(&weights[l].a);
        out.push_back(&biases[l]);
    }
    return out;
}

Mlp make_mlp(const std::vector<std::size_t>& layer_sizes, RngStream& rng) {
    if (layer_sizes.size() < 2) throw DomainError("make_mlp: need at least input and output sizes");
    Mlp net;
    for (std::size_t l = 0; l + 1 < layer_sizes.size(); ++l) {
        const std::size_t in = layer_sizes[l];
        const std::size_t out = layer_sizes[l + 1];
        if (in == 0 || out == 0) throw DomainError("make_mlp: zero layer size");
        Mat w(out, in);
        const bool last = (l + 2 == layer_sizes.size());
        const double scale = std::sqrt(2.0 / static_cast<double>(in)) * (last ? 0.01 : 1.0);
        for (double& v : w.a) v = scale * rng.normal();
        net.weights.push_back(std::move(w));
        net.biases.emplace_back(out, 0.0);
    }
    return net;
}

MlpGrads MlpGrads::zeros_like(const Mlp& net) {
    MlpGrads g;
    for (std::size_t l = 0; l < net.weights.size(); ++l) {
        g.dw.emplace_back(net.weights[l].rows, net.weights[l].cols);
        g.db.emplace_back(net.biases[l].size(), 0.0);
    }
    return g;
}

void MlpGrads::add_scaled(const MlpGrads& other, double scale) {
    for (std::size_t l = 0; l < dw.size(); ++l) {
        for (std::size_t i = 0; i < dw[l].a.size(); ++i) dw[l].a[i] += scale * other.dw[l].a[i];
        for (std::size_t i = 0; i < db[l].size(); ++i) db[l][i] += scale * other.db[l][i];
    }
}

std::vector<const Vec*> MlpGrads::param_tensors() const {
    std::vector<const Vec*> out;
    for (std::size_t l = 0; l < dw.size(); ++l) {
        out.push_back(&dw[l].a);
        out.push_back(&db[l]);
    }
    return out;
}

std::vector<Vec*> MlpGrads::param_tensors() {
    std::vector<Vec*> out;
    for (std::size_t l = 0; l < dw.size(); ++l) {
        out.push_back(&dw[l].a);
        out.push_back(&db[l]);
    }
    return out;
}

Vec mlp_forward(const Mlp& net, const Vec& input, MlpTape* tape) {
    if (net.weights.empty()) throw DomainError("mlp_forward: empty network");
    if (input.size() != net.input_dim()) throw DomainError("mlp_forward: input size mismatch");
    if (tape) {
        tape->input = input;
        tape->pre.assign(net.num_layers(), Vec{});
        tape->post.assign(net.num_layers(), Vec{});
    }
    Vec x = input;
    Vec z;
    for (std::size_t l = 0; l < net.num_layers(); ++l) {
        affine(net.weights[l], net.biases[l], x, z);
        if (tape) tape->pre[l] = z;
        const bool hidden = (l + 1 < net.num_layers());
        if (hidden)
            for (double& v : z) v = mish(v);
        if (tape) tape->post[l] = z;
        x = z;
    }
    return x;
}

Vec mlp_backward(const Mlp& net, const MlpTape& tape, const Vec& upstream, MlpGrads& grads) {
    const std::size_t L = net.num_layers();
    if (tape.pre.size() != L || tape.post.size() != L)
        throw DomainError("mlp_backward: tape does not match network");
    if (upstream.size() != net.output_dim())
        throw DomainError("mlp_backward: upstream size mismatch");

    Vec delta = upstream; // dL/d(post[l])
    for (std::size_t li = L; li-- > 0;) {
        const bool hidden = (li + 1 < L);
        if (hidden)
            for (std::size_t i = 0; i < delta.size(); ++i) delta[i] *= mish_grad(tape.pre[li][i]);
        const Vec& layer_in = (li == 0) ? tape.input : tape.post[li - 1];
        Mat& dw = grads.dw[li];
        for (std::size_t i = 0; i < dw.rows; ++i) {
            const double d = delta[i];
            grads.db[li][i] += d;
            double* row = &dw.a[i * dw.cols];
            for (std::size_t j = 0; j < dw.cols; ++j) row[j] += d * layer_in[j];
        }
        // dL/d(layer_in)
        Vec prev(net.weights[li].cols, 0.0);
        for (std::size_t i = 0; i < net.weights[li].rows; ++i) {
            const double d = delta[i];
            const double* row = &net.weights[li].a[i * net.weights[li].cols];
            for (std::size_t j = 0; j < prev.size(); ++j) prev[j] += d * row[j];
        }
        delta = std::move(prev);
    }
    return delta;
}

} // namespace simpo
