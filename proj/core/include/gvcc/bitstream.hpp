#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "gvcc/codebook.hpp"
#include "gvcc/config.hpp"
#include "gvcc/tensor.hpp"

namespace gvcc {

/// MSB-first bit packer over a growing byte buffer. The final byte is
/// zero-padded on align.
class BitWriter {
public:
    void write_bits(std::uint64_t value, int bit_count);
    void align_to_byte();

    std::uint64_t bits_written() const { return bits_; }
    const std::vector<std::uint8_t>& bytes() const { return bytes_; }
    std::vector<std::uint8_t> take();

private:
    std::vector<std::uint8_t> bytes_;
    std::uint64_t bits_ = 0;
    int bit_offset_ = 0; // bits used in the trailing byte
};

/// MSB-first reader; never reads past the declared buffer.
class BitReader {
public:
    explicit BitReader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

    std::uint64_t read_bits(int bit_count);
    std::uint64_t bits_consumed() const { return consumed_; }
    std::uint64_t bits_remaining() const { return bytes_.size() * 8 - consumed_; }

private:
    std::span<const std::uint8_t> bytes_;
    std::uint64_t consumed_ = 0;
};

/// Packs one selection: each index as log2(K) bits followed by one sign
/// bit (1 = positive), in selection order. Returns the exact bit count,
/// M * (log2 K + 1).
std::uint64_t write_selection(BitWriter& writer, const StepSelection& selection,
                              int codebook_size);
StepSelection read_selection(BitReader& reader, int select_count, int codebook_size);

/// Min/max quantized tensor block: per channel a pair of f32 bounds, then
/// one code per element in tensor order, all DEFLATE-compressed.
struct QuantizedBlock {
    std::uint8_t quant_bits = 8;
    std::vector<std::uint8_t> compressed;

    std::uint64_t bits() const { return compressed.size() * 8; }
    bool operator==(const QuantizedBlock&) const = default;
};

QuantizedBlock quantize_block(const Tensor& values, int quant_bits = 8);
Tensor dequantize_block(const QuantizedBlock& block, const Shape& shape);

/// Raw DEFLATE (RFC 1951) helpers.
std::vector<std::uint8_t> deflate_bytes(std::span<const std::uint8_t> raw);
std::vector<std::uint8_t> inflate_bytes(std::span<const std::uint8_t> compressed,
                                        std::size_t expected_size);

struct StreamHeader {
    static constexpr std::uint8_t kVersion = 1;
    static constexpr std::uint8_t kCodecDeflate = 0;

    GopMode mode = GopMode::t2v;
    std::uint32_t latent_frames = 0, latent_channels = 0, latent_height = 0,
                  latent_width = 0;
    std::uint32_t pixel_frames = 0, pixel_height = 0, pixel_width = 0;
    std::uint16_t steps = 0, tail_steps = 0, atoms = 0, tail_atoms = 0,
                  tail_frames = 0, overlap = 0;
    std::uint32_t codebook_size = 0;
    float g_scale = 0.0f;
    std::uint64_t seed = 0;
    std::uint32_t gop_count = 0;
    std::uint64_t codebook_checksum = 0;
    std::uint8_t codec_id = kCodecDeflate;

    static StreamHeader from_config(const CodecConfig& config, std::uint32_t gop_count,
                                    std::uint64_t checksum);
    CodecConfig to_config() const;
};

/// Everything one GOP transmits: per-step per-frame selections, the
/// optional I2V tail residual, stub-coded anchors, and (I2V GOP 0 only)
/// the free first-frame side information.
struct GopPayload {
    std::vector<std::vector<StepSelection>> selections; // [step][frame]
    std::optional<QuantizedBlock> tail_residual;
    std::vector<QuantizedBlock> anchors;
    std::optional<std::vector<double>> side_info_frame;

    // Measured bit counts. codebook_bits is the raw selection bit count
    // (before byte padding); the quantized blocks count their compressed
    // bodies; side information never enters BPP.
    std::uint64_t codebook_bits = 0;
    std::uint64_t residual_bits = 0;
    std::uint64_t anchor_bits = 0;
    std::uint64_t side_info_bits = 0;
};

struct GvccStream {
    StreamHeader header;
    std::vector<GopPayload> gops;
};

/// Serializes header, payload sections, and a trailing 64-bit FNV-1a of
/// every preceding byte. Any single-bit corruption therefore fails the
/// trailer check on parse.
std::vector<std::uint8_t> serialize_stream(const GvccStream& stream);

/// Inverse of serialize_stream. Validates magic, version, trailer, and
/// that each GOP's measured sizes match what the header implies.
GvccStream parse_stream(std::span<const std::uint8_t> bytes);

std::uint64_t fnv1a64(std::span<const std::uint8_t> bytes);

void write_file(const std::string& path, std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> read_file(const std::string& path);

} // namespace gvcc
