#include "simpo/rng.hpp"

#include <cmath>
#include <numbers>

namespace simpo {

namespace {

// Stafford mix13 finalizer, the same bit mixer SplitMix64 uses.
inline std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xbf58476d1ce4e5b9ULL;
    z ^= z >> 27;
    z *= 0x94d049bb133111ebULL;
    z ^= z >> 31;
    return z;
}

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;
constexpr std::uint64_t kCounterStride = 0xda942042e4dd58b5ULL;

} // namespace

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream)
    : seed_(seed), stream_(stream) {
    key_ = mix64(mix64(seed + kGolden) ^ (stream * kGolden + 0x632be59bd9b4e019ULL));
}

std::uint64_t RngStream::next_u64() {
    ++counter_;
    return mix64(key_ ^ (counter_ * kCounterStride));
}

double RngStream::uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RngStream::normal() {
    if (has_cached_normal_) {
        has_cached_normal_ = false;
        return cached_normal_;
    }
    const double u1 = 1.0 - uniform(); // (0, 1], keeps log finite
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * std::numbers::pi * u2;
    cached_normal_ = r * std::sin(theta);
    has_cached_normal_ = true;
    return r * std::cos(theta);
}

RngStream RngStream::substream(std::uint64_t idx) const {
    // the child key is independent of both the parent's outputs and its siblings
    return RngStream(mix64(key_ + idx * kGolden), stream_ ^ mix64(idx + 1));
}

} // namespace simpo
