#pragma once

#include <cstdint>
#include <vector>

#include "gvcc/anchor.hpp"
#include "gvcc/bitstream.hpp"
#include "gvcc/codebook.hpp"
#include "gvcc/config.hpp"
#include "gvcc/fields.hpp"

namespace gvcc {

/// Deterministic per-GOP starting noise, drawn from the pinned stream at
/// step index T (one past the last integration step).
Tensor initial_noise(const CodecConfig& config, std::uint32_t gop_index);

/// Rounds g_scale to f32 so the encoder integrates with exactly the
/// value the stream header will carry.
CodecConfig canonical_config(const CodecConfig& config);

struct EncodedGop {
    GopPayload payload;
    Tensor trajectory_latent; // final latent before tail correction
    Tensor reconstruction;    // tail correction applied when enabled
    std::vector<double> residual_variances; // one per coded step
};

/// Runs T-N coded SDE steps then N bit-free ODE steps against the
/// ground-truth latent x0 and returns the transmittable payload.
EncodedGop encode_gop(const Tensor& x0, const Conditioning& cond,
                      const VelocityField& field, const CodecConfig& config,
                      std::uint32_t gop_index, int threads = 1);

/// Replays the trajectory from a payload; bitwise identical to the
/// encoder's final state within one build. Applies the tail residual
/// before returning.
Tensor decode_gop(const GopPayload& payload, const Conditioning& cond,
                  const VelocityField& field, const CodecConfig& config,
                  std::uint32_t gop_index);

struct GopRecord {
    std::uint64_t codebook_bits = 0;
    std::uint64_t residual_bits = 0;
    std::uint64_t anchor_bits = 0;
    std::uint64_t side_info_bits = 0;
    double bpp = 0.0; // per-GOP rate by the mode's accounting
    std::vector<double> residual_variances;
};

struct ChainResult {
    GvccStream stream;
    std::vector<std::uint8_t> serialized;
    Tensor reconstruction; // whole-chain latent video
    std::vector<GopRecord> gops;
    std::uint64_t counted_bits = 0;  // codebook + residual + anchor over the chain
    std::int64_t chain_pixels = 0;
    double bpp = 0.0;             // counted_bits / chain_pixels
    double bpp_with_header = 0.0; // serialized bits / chain_pixels
};

/// Latent frames shared between consecutive GOPs: the T2V overlap, or the
/// single boundary frame of the chained modes.
int shared_latent_frames(const CodecConfig& config);
/// Number of GOPs covering a video of `video_latent_frames`; throws when
/// the length does not segment exactly.
int gop_count_for_video(const CodecConfig& config, int video_latent_frames);
std::int64_t chain_latent_frames(const CodecConfig& config, int gop_count);
std::int64_t chain_pixel_count(const CodecConfig& config, int gop_count);

/// Encodes a whole latent video in the configured mode.
ChainResult encode_chain(const Tensor& video, const VelocityField& field,
                         const CodecConfig& config, int threads = 1);

/// Full decode of a parsed stream, mirroring the encoder's chain
/// assembly. Verifies the codebook checksum before any trajectory work.
Tensor decode_stream(const GvccStream& stream, const VelocityField& field);

double compute_bpp(std::uint64_t bits, std::int64_t pixels);
/// Bits entering the mode's rate equation (codebook + residual + anchor).
std::uint64_t counted_payload_bits(const GopPayload& payload);

} // namespace gvcc
