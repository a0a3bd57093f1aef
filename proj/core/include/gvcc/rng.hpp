#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace gvcc {

// Fixed avalanche finalizer (SplitMix64 mix function). Part of the wire
// contract: encoder and decoder must derive identical codebook streams
// from (seed, gop_index, step_index), so neither the constants nor the
// operation order may change between versions.
constexpr std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ull;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBull;
    z ^= z >> 31;
    return z;
}

/// Counter-based 64-bit generator: s += golden gamma, output = mix64(s).
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t state = 0) : state_(state) {}

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ull;
        return mix64(state_);
    }

    /// Uniform double in [0,1) with 53 bits of precision.
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t state_;
};

// Stream-separation tag, "GVCC" in ASCII.
constexpr std::uint64_t kStreamTag = 0x47564343ull;

/// The per-step generator shared by encoder and decoder. Distinct
/// (gop_index, step_index) pairs give statistically independent streams.
inline SplitMix64 step_stream(std::uint64_t seed, std::uint64_t gop_index,
                              std::uint64_t step_index) {
    const std::uint64_t state =
        mix64(mix64(seed) ^ mix64(gop_index + 1) ^ mix64(kStreamTag + step_index));
    return SplitMix64(state);
}

/// Standard normal draws via Box-Muller on 53-bit uniforms, u1=0 rejected.
/// Pairs are emitted cosine first, sine second.
class GaussianStream {
public:
    explicit GaussianStream(SplitMix64 rng) : rng_(rng) {}
    explicit GaussianStream(std::uint64_t state) : rng_(state) {}

    double next() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u1 = rng_.uniform();
        while (u1 == 0.0) u1 = rng_.uniform();
        const double u2 = rng_.uniform();
        const double radius = std::sqrt(-2.0 * std::log(u1));
        const double angle = 2.0 * std::numbers::pi * u2;
        spare_ = radius * std::sin(angle);
        has_spare_ = true;
        return radius * std::cos(angle);
    }

private:
    SplitMix64 rng_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

} // namespace gvcc
