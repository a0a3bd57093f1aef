#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gvcc/tensor.hpp"

namespace gvcc {

enum class GopMode : std::uint8_t { t2v = 0, i2v = 1, flf2v = 2 };

std::string to_string(GopMode mode);
GopMode gop_mode_from_string(const std::string& name);

/// Every knob of the codec. Defaults are the validated 720p operating
/// point; latent geometry mirrors a 4x temporal stride over a 33-frame
/// GOP.
struct CodecConfig {
    GopMode mode = GopMode::t2v;

    int atoms = 64;             // M: atoms per step per latent frame
    int tail_atoms = 128;       // M_tail: I2V tail-frame allocation
    int codebook_size = 16384;  // K
    int steps = 20;             // T
    int tail_steps = 3;         // N: bit-free ODE tail
    double g_scale = 3.0;
    int gop_frames = 33;        // pixel frames per GOP, 4k+1
    int tail_frames = 1;        // F_tail: latent frames corrected/boosted
    int overlap = 0;            // T2V cross-fade, in latent frames
    double rho = 1.0;           // budget safety factor
    std::uint64_t seed = 42;
    bool tail_correction = true; // I2V residual correction (ablation switch)

    int latent_frames = 9;
    int latent_channels = 4;
    int latent_height = 8;
    int latent_width = 8;

    int pixel_frames = 33;
    int pixel_height = 720;
    int pixel_width = 1280;

    Shape latent_shape() const {
        return Shape{latent_frames, latent_channels, latent_height, latent_width};
    }
    std::int64_t frame_dim() const { return latent_shape().frame_size(); }
    std::int64_t pixels_per_gop() const {
        return static_cast<std::int64_t>(pixel_frames) * pixel_height * pixel_width;
    }

    int index_bits() const; // log2(K)
    /// Atom count for latent frame f (M, or M_tail on I2V tail frames).
    int atoms_for_frame(int f) const;
    /// Raw selection bits of one coded step over all latent frames.
    std::int64_t selection_bits_per_step() const;
    /// Raw selection bits of a whole GOP: (T-N) x per-step bits.
    std::int64_t selection_bits_per_gop() const;

    void validate() const;
};

} // namespace gvcc
