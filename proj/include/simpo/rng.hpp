#pragma once

#include <cstdint>

namespace simpo {

// Counter-based splittable RNG. Output is a pure function of
// (seed, stream, counter), so trials can run on independent streams with no
// shared state and any draw sequence can be replayed exactly.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed, std::uint64_t stream = 0);

    std::uint64_t next_u64();

    // uniform on [0, 1)
    double uniform();

    // standard normal via Box-Muller on a pair of uniforms; the second value
    // of each pair is cached so draws stay a deterministic function of the
    // counter sequence
    double normal();

    // independent stream derived from this one
    RngStream substream(std::uint64_t idx) const;

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream() const { return stream_; }

private:
    std::uint64_t seed_ = 0;
    std::uint64_t stream_ = 0;
    std::uint64_t key_ = 0;
    std::uint64_t counter_ = 0;
    double cached_normal_ = 0.0;
    bool has_cached_normal_ = false;
};

} // namespace simpo
