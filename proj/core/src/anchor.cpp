#include "gvcc/anchor.hpp"

namespace gvcc {

QuantizedBlock AnchorCodecStub::encode(const Tensor& frame) const {
    if (frame.shape().frames != 1)
        throw ShapeError("anchor codec expects a single-frame tensor");
    return quantize_block(frame, quant_bits);
}

Tensor AnchorCodecStub::decode(const QuantizedBlock& block, const Shape& frame_shape) const {
    if (frame_shape.frames != 1)
        throw ShapeError("anchor codec expects a single-frame shape");
    return dequantize_block(block, frame_shape);
}

Tensor AnchorCodecStub::round_trip(const Tensor& frame) const {
    return decode(encode(frame), frame.shape());
}

} // namespace gvcc
