#pragma once

#include "gvcc/bitstream.hpp"
#include "gvcc/tensor.hpp"

namespace gvcc {

/// Stand-in for a learned boundary-frame codec: per-channel min/max
/// 8-bit quantization plus the DEFLATE stage. Reconstruction error is at
/// most (max-min)/(2^bits-1)/2 per element within each channel.
struct AnchorCodecStub {
    int quant_bits = 8;

    QuantizedBlock encode(const Tensor& frame) const;
    Tensor decode(const QuantizedBlock& block, const Shape& frame_shape) const;

    /// encode followed by decode; the reconstruction both sides share.
    Tensor round_trip(const Tensor& frame) const;
};

} // namespace gvcc
