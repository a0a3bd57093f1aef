#include "gvcc/bitstream.hpp"

#include <zlib.h>

#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <limits>

namespace gvcc {

void BitWriter::write_bits(std::uint64_t value, int bit_count) {
    if (bit_count < 0 || bit_count > 64) throw ConfigError("bit count out of range");
    for (int i = bit_count - 1; i >= 0; --i) {
        if (bit_offset_ == 0) bytes_.push_back(0);
        const std::uint8_t bit = static_cast<std::uint8_t>((value >> i) & 1u);
        bytes_.back() |= static_cast<std::uint8_t>(bit << (7 - bit_offset_));
        bit_offset_ = (bit_offset_ + 1) & 7;
        ++bits_;
    }
}

void BitWriter::align_to_byte() { bit_offset_ = 0; }

std::vector<std::uint8_t> BitWriter::take() {
    bit_offset_ = 0;
    bits_ = 0;
    return std::move(bytes_);
}

std::uint64_t BitReader::read_bits(int bit_count) {
    if (bit_count < 0 || bit_count > 64) throw ConfigError("bit count out of range");
    if (consumed_ + static_cast<std::uint64_t>(bit_count) > bytes_.size() * 8)
        throw ParseError("bitstream underrun at bit offset " + std::to_string(consumed_));
    std::uint64_t value = 0;
    for (int i = 0; i < bit_count; ++i) {
        const std::size_t byte_idx = static_cast<std::size_t>(consumed_ >> 3);
        const int bit_idx = static_cast<int>(consumed_ & 7);
        value = (value << 1) | ((bytes_[byte_idx] >> (7 - bit_idx)) & 1u);
        ++consumed_;
    }
    return value;
}

std::uint64_t write_selection(BitWriter& writer, const StepSelection& selection,
                              int codebook_size) {
    if (codebook_size < 1 || !std::has_single_bit(static_cast<std::uint32_t>(codebook_size)))
        throw ConfigError("codebook size must be a power of two");
    if (selection.indices.size() != selection.signs.size())
        throw ConfigError("selection indices/signs length mismatch");
    const int idx_bits = std::bit_width(static_cast<std::uint32_t>(codebook_size)) - 1;
    const std::uint64_t before = writer.bits_written();
    for (std::size_t m = 0; m < selection.indices.size(); ++m) {
        if (selection.indices[m] >= static_cast<std::uint32_t>(codebook_size))
            throw ParseError("selection index exceeds codebook size");
        writer.write_bits(selection.indices[m], idx_bits);
        writer.write_bits(selection.signs[m] >= 0 ? 1u : 0u, 1);
    }
    return writer.bits_written() - before;
}

StepSelection read_selection(BitReader& reader, int select_count, int codebook_size) {
    if (codebook_size < 1 || !std::has_single_bit(static_cast<std::uint32_t>(codebook_size)))
        throw ConfigError("codebook size must be a power of two");
    const int idx_bits = std::bit_width(static_cast<std::uint32_t>(codebook_size)) - 1;
    StepSelection sel;
    sel.indices.reserve(static_cast<std::size_t>(select_count));
    sel.signs.reserve(static_cast<std::size_t>(select_count));
    for (int m = 0; m < select_count; ++m) {
        sel.indices.push_back(static_cast<std::uint32_t>(reader.read_bits(idx_bits)));
        sel.signs.push_back(reader.read_bits(1) ? 1 : -1);
    }
    return sel;
}

// ---------------------------------------------------------------------------
// Quantized blocks
// ---------------------------------------------------------------------------

namespace {

void put_u8(std::vector<std::uint8_t>& out, std::uint8_t v) { out.push_back(v); }
void put_u16(std::vector<std::uint8_t>& out, std::uint16_t v) {
    out.push_back(static_cast<std::uint8_t>(v));
    out.push_back(static_cast<std::uint8_t>(v >> 8));
}
void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
    for (int i = 0; i < 4; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}
void put_u64(std::vector<std::uint8_t>& out, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}
void put_f32(std::vector<std::uint8_t>& out, float v) {
    put_u32(out, std::bit_cast<std::uint32_t>(v));
}
void put_f64(std::vector<std::uint8_t>& out, double v) {
    put_u64(out, std::bit_cast<std::uint64_t>(v));
}

class ByteReader {
public:
    explicit ByteReader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

    std::size_t position() const { return pos_; }
    std::size_t remaining() const { return bytes_.size() - pos_; }

    std::uint8_t get_u8() {
        need(1);
        return bytes_[pos_++];
    }
    std::uint16_t get_u16() {
        need(2);
        std::uint16_t v = static_cast<std::uint16_t>(bytes_[pos_] |
                                                     (bytes_[pos_ + 1] << 8));
        pos_ += 2;
        return v;
    }
    std::uint32_t get_u32() {
        need(4);
        std::uint32_t v = 0;
        for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(bytes_[pos_ + i]) << (8 * i);
        pos_ += 4;
        return v;
    }
    std::uint64_t get_u64() {
        need(8);
        std::uint64_t v = 0;
        for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(bytes_[pos_ + i]) << (8 * i);
        pos_ += 8;
        return v;
    }
    float get_f32() { return std::bit_cast<float>(get_u32()); }
    double get_f64() { return std::bit_cast<double>(get_u64()); }
    std::span<const std::uint8_t> get_bytes(std::size_t n) {
        need(n);
        auto view = bytes_.subspan(pos_, n);
        pos_ += n;
        return view;
    }

private:
    void need(std::size_t n) const {
        if (pos_ + n > bytes_.size())
            throw ParseError("truncated stream at byte offset " + std::to_string(pos_));
    }

    std::span<const std::uint8_t> bytes_;
    std::size_t pos_ = 0;
};

// Bounds are stored as f32 and widened outward so every sample stays
// inside [min, max] after rounding.
std::pair<float, float> stored_bounds(double lo, double hi) {
    float flo = static_cast<float>(lo);
    if (static_cast<double>(flo) > lo)
        flo = std::nextafterf(flo, -std::numeric_limits<float>::infinity());
    float fhi = static_cast<float>(hi);
    if (static_cast<double>(fhi) < hi)
        fhi = std::nextafterf(fhi, std::numeric_limits<float>::infinity());
    return {flo, fhi};
}

} // namespace

QuantizedBlock quantize_block(const Tensor& values, int quant_bits) {
    if (quant_bits < 1 || quant_bits > 8)
        throw ConfigError("quantizer supports 1..8 bits per code");
    if (!all_finite(values)) throw NumericError("quantize_block: nonfinite input");
    const Shape shape = values.shape();
    const int channels = shape.channels;
    const std::int64_t plane = static_cast<std::int64_t>(shape.height) * shape.width;
    const double levels = static_cast<double>((1u << quant_bits) - 1u);

    std::vector<float> lo(static_cast<std::size_t>(channels));
    std::vector<float> hi(static_cast<std::size_t>(channels));
    for (int c = 0; c < channels; ++c) {
        double mn = std::numeric_limits<double>::infinity();
        double mx = -std::numeric_limits<double>::infinity();
        for (int f = 0; f < shape.frames; ++f) {
            const double* p = values.data() + (static_cast<std::int64_t>(f) * channels + c) * plane;
            for (std::int64_t i = 0; i < plane; ++i) {
                mn = std::min(mn, p[i]);
                mx = std::max(mx, p[i]);
            }
        }
        auto [flo, fhi] = stored_bounds(mn, mx);
        lo[static_cast<std::size_t>(c)] = flo;
        hi[static_cast<std::size_t>(c)] = fhi;
    }

    std::vector<std::uint8_t> raw;
    raw.reserve(static_cast<std::size_t>(channels) * 8 +
                static_cast<std::size_t>(values.size()));
    for (int c = 0; c < channels; ++c) {
        put_f32(raw, lo[static_cast<std::size_t>(c)]);
        put_f32(raw, hi[static_cast<std::size_t>(c)]);
    }
    for (std::int64_t i = 0; i < values.size(); ++i) {
        const int c = static_cast<int>((i / plane) % channels);
        const double mn = lo[static_cast<std::size_t>(c)];
        const double mx = hi[static_cast<std::size_t>(c)];
        std::uint8_t code = 0;
        if (mx > mn) {
            const double q = std::floor((values[i] - mn) / (mx - mn) * levels + 0.5);
            code = static_cast<std::uint8_t>(std::clamp(q, 0.0, levels));
        }
        raw.push_back(code);
    }

    QuantizedBlock block;
    block.quant_bits = static_cast<std::uint8_t>(quant_bits);
    block.compressed = deflate_bytes(raw);
    return block;
}

Tensor dequantize_block(const QuantizedBlock& block, const Shape& shape) {
    const int channels = shape.channels;
    const std::int64_t plane = static_cast<std::int64_t>(shape.height) * shape.width;
    const std::size_t expected =
        static_cast<std::size_t>(channels) * 8 + static_cast<std::size_t>(shape.size());
    const std::vector<std::uint8_t> raw = inflate_bytes(block.compressed, expected);
    ByteReader reader(raw);
    std::vector<double> lo(static_cast<std::size_t>(channels));
    std::vector<double> hi(static_cast<std::size_t>(channels));
    for (int c = 0; c < channels; ++c) {
        lo[static_cast<std::size_t>(c)] = reader.get_f32();
        hi[static_cast<std::size_t>(c)] = reader.get_f32();
    }
    const double levels = static_cast<double>((1u << block.quant_bits) - 1u);
    Tensor out(shape);
    for (std::int64_t i = 0; i < out.size(); ++i) {
        const int c = static_cast<int>((i / plane) % channels);
        const double mn = lo[static_cast<std::size_t>(c)];
        const double mx = hi[static_cast<std::size_t>(c)];
        const std::uint8_t code = reader.get_u8();
        out[i] = mx > mn ? mn + code * (mx - mn) / levels : mn;
    }
    return out;
}

// ---------------------------------------------------------------------------
// DEFLATE
// ---------------------------------------------------------------------------

std::vector<std::uint8_t> deflate_bytes(std::span<const std::uint8_t> raw) {
    z_stream zs{};
    if (deflateInit2(&zs, Z_BEST_COMPRESSION, Z_DEFLATED, -15, 8, Z_DEFAULT_STRATEGY) != Z_OK)
        throw Error("deflate initialization failed");
    std::vector<std::uint8_t> out(deflateBound(&zs, static_cast<uLong>(raw.size())));
    zs.next_in = const_cast<Bytef*>(raw.data());
    zs.avail_in = static_cast<uInt>(raw.size());
    zs.next_out = out.data();
    zs.avail_out = static_cast<uInt>(out.size());
    const int ret = deflate(&zs, Z_FINISH);
    deflateEnd(&zs);
    if (ret != Z_STREAM_END) throw Error("deflate failed");
    out.resize(zs.total_out);
    return out;
}

std::vector<std::uint8_t> inflate_bytes(std::span<const std::uint8_t> compressed,
                                        std::size_t expected_size) {
    z_stream zs{};
    if (inflateInit2(&zs, -15) != Z_OK) throw Error("inflate initialization failed");
    std::vector<std::uint8_t> out(expected_size);
    zs.next_in = const_cast<Bytef*>(compressed.data());
    zs.avail_in = static_cast<uInt>(compressed.size());
    zs.next_out = out.data();
    zs.avail_out = static_cast<uInt>(out.size());
    const int ret = inflate(&zs, Z_FINISH);
    inflateEnd(&zs);
    if (ret != Z_STREAM_END || zs.total_out != expected_size)
        throw ParseError("corrupt compressed block");
    return out;
}

// ---------------------------------------------------------------------------
// Stream container
// ---------------------------------------------------------------------------

std::uint64_t fnv1a64(std::span<const std::uint8_t> bytes) {
    std::uint64_t hash = 0xcbf29ce484222325ull;
    for (std::uint8_t b : bytes) {
        hash ^= b;
        hash *= 0x100000001b3ull;
    }
    return hash;
}

StreamHeader StreamHeader::from_config(const CodecConfig& config, std::uint32_t gop_count,
                                       std::uint64_t checksum) {
    config.validate();
    if (config.steps > 0xffff || config.atoms > 0xffff || config.tail_atoms > 0xffff ||
        config.tail_frames > 0xffff || config.overlap > 0xffff)
        throw ConfigError("field exceeds the 16-bit header range");
    StreamHeader h;
    h.mode = config.mode;
    h.latent_frames = static_cast<std::uint32_t>(config.latent_frames);
    h.latent_channels = static_cast<std::uint32_t>(config.latent_channels);
    h.latent_height = static_cast<std::uint32_t>(config.latent_height);
    h.latent_width = static_cast<std::uint32_t>(config.latent_width);
    h.pixel_frames = static_cast<std::uint32_t>(config.pixel_frames);
    h.pixel_height = static_cast<std::uint32_t>(config.pixel_height);
    h.pixel_width = static_cast<std::uint32_t>(config.pixel_width);
    h.steps = static_cast<std::uint16_t>(config.steps);
    h.tail_steps = static_cast<std::uint16_t>(config.tail_steps);
    h.atoms = static_cast<std::uint16_t>(config.atoms);
    h.tail_atoms = static_cast<std::uint16_t>(config.tail_atoms);
    h.tail_frames = static_cast<std::uint16_t>(config.tail_frames);
    h.overlap = static_cast<std::uint16_t>(config.overlap);
    h.codebook_size = static_cast<std::uint32_t>(config.codebook_size);
    h.g_scale = static_cast<float>(config.g_scale);
    h.seed = config.seed;
    h.gop_count = gop_count;
    h.codebook_checksum = checksum;
    return h;
}

CodecConfig StreamHeader::to_config() const {
    CodecConfig c;
    c.mode = mode;
    c.atoms = static_cast<int>(atoms);
    c.tail_atoms = static_cast<int>(tail_atoms);
    c.codebook_size = static_cast<int>(codebook_size);
    c.steps = static_cast<int>(steps);
    c.tail_steps = static_cast<int>(tail_steps);
    c.g_scale = static_cast<double>(g_scale);
    c.latent_frames = static_cast<int>(latent_frames);
    c.latent_channels = static_cast<int>(latent_channels);
    c.latent_height = static_cast<int>(latent_height);
    c.latent_width = static_cast<int>(latent_width);
    c.gop_frames = 4 * (c.latent_frames - 1) + 1;
    c.tail_frames = static_cast<int>(tail_frames);
    c.overlap = static_cast<int>(overlap);
    c.seed = seed;
    c.pixel_frames = static_cast<int>(pixel_frames);
    c.pixel_height = static_cast<int>(pixel_height);
    c.pixel_width = static_cast<int>(pixel_width);
    c.validate();
    return c;
}

namespace {

constexpr char kMagic[4] = {'G', 'V', 'C', 'C'};

void serialize_header(std::vector<std::uint8_t>& out, const StreamHeader& h) {
    out.insert(out.end(), kMagic, kMagic + 4);
    put_u8(out, StreamHeader::kVersion);
    put_u8(out, static_cast<std::uint8_t>(h.mode));
    put_u32(out, h.latent_frames);
    put_u32(out, h.latent_channels);
    put_u32(out, h.latent_height);
    put_u32(out, h.latent_width);
    put_u32(out, h.pixel_frames);
    put_u32(out, h.pixel_height);
    put_u32(out, h.pixel_width);
    put_u16(out, h.steps);
    put_u16(out, h.tail_steps);
    put_u16(out, h.atoms);
    put_u16(out, h.tail_atoms);
    put_u16(out, h.tail_frames);
    put_u16(out, h.overlap);
    put_u32(out, h.codebook_size);
    put_f32(out, h.g_scale);
    put_u64(out, h.seed);
    put_u32(out, h.gop_count);
    put_u64(out, h.codebook_checksum);
    put_u8(out, h.codec_id);
}

StreamHeader parse_header(ByteReader& reader) {
    const auto magic = reader.get_bytes(4);
    if (std::memcmp(magic.data(), kMagic, 4) != 0) throw ParseError("bad magic");
    const std::uint8_t version = reader.get_u8();
    if (version != StreamHeader::kVersion)
        throw ParseError("unsupported stream version " + std::to_string(version));
    StreamHeader h;
    const std::uint8_t mode = reader.get_u8();
    if (mode > 2) throw ParseError("unknown mode byte");
    h.mode = static_cast<GopMode>(mode);
    h.latent_frames = reader.get_u32();
    h.latent_channels = reader.get_u32();
    h.latent_height = reader.get_u32();
    h.latent_width = reader.get_u32();
    h.pixel_frames = reader.get_u32();
    h.pixel_height = reader.get_u32();
    h.pixel_width = reader.get_u32();
    h.steps = reader.get_u16();
    h.tail_steps = reader.get_u16();
    h.atoms = reader.get_u16();
    h.tail_atoms = reader.get_u16();
    h.tail_frames = reader.get_u16();
    h.overlap = reader.get_u16();
    h.codebook_size = reader.get_u32();
    h.g_scale = reader.get_f32();
    h.seed = reader.get_u64();
    h.gop_count = reader.get_u32();
    h.codebook_checksum = reader.get_u64();
    h.codec_id = reader.get_u8();
    if (h.codec_id != StreamHeader::kCodecDeflate)
        throw ParseError("unknown lossless codec id");
    return h;
}

void check_payload_structure(const GopPayload& gop, const CodecConfig& config,
                             std::uint32_t gop_index) {
    const bool want_side_info = config.mode == GopMode::i2v && gop_index == 0;
    if (gop.side_info_frame.has_value() != want_side_info)
        throw ParseError("side information presence does not match the mode");
    if (gop.tail_residual.has_value() && config.mode != GopMode::i2v)
        throw ParseError("tail residual is only valid in i2v streams");
    std::size_t want_anchors = 0;
    if (config.mode == GopMode::flf2v) want_anchors = gop_index == 0 ? 2 : 1;
    if (gop.anchors.size() != want_anchors)
        throw ParseError("anchor count does not match the mode");
}

} // namespace

std::vector<std::uint8_t> serialize_stream(const GvccStream& stream) {
    const CodecConfig config = stream.header.to_config();
    if (stream.gops.size() != stream.header.gop_count)
        throw ConfigError("header gop_count does not match the payload list");

    std::vector<std::uint8_t> out;
    serialize_header(out, stream.header);

    for (std::uint32_t g = 0; g < stream.header.gop_count; ++g) {
        const GopPayload& gop = stream.gops[g];
        check_payload_structure(gop, config, g);

        put_u8(out, gop.side_info_frame.has_value() ? 1 : 0);
        if (gop.side_info_frame) {
            if (static_cast<std::int64_t>(gop.side_info_frame->size()) != config.frame_dim())
                throw ConfigError("side information frame has the wrong size");
            put_u32(out, static_cast<std::uint32_t>(gop.side_info_frame->size() * 8));
            for (double v : *gop.side_info_frame) put_f64(out, v);
        }

        if (static_cast<int>(gop.selections.size()) != config.steps - config.tail_steps)
            throw ConfigError("selection rows do not match the coded step count");
        BitWriter bits;
        for (const auto& step : gop.selections) {
            if (static_cast<int>(step.size()) != config.latent_frames)
                throw ConfigError("selection row does not cover every latent frame");
            for (int f = 0; f < config.latent_frames; ++f) {
                if (static_cast<int>(step[static_cast<std::size_t>(f)].indices.size()) !=
                    config.atoms_for_frame(f))
                    throw ConfigError("selection size does not match the per-frame atom count");
                write_selection(bits, step[static_cast<std::size_t>(f)], config.codebook_size);
            }
        }
        if (bits.bits_written() != static_cast<std::uint64_t>(config.selection_bits_per_gop()))
            throw ConfigError("selection bit count does not match the config");
        const std::vector<std::uint8_t> packed = bits.take();
        put_u32(out, static_cast<std::uint32_t>(packed.size()));
        out.insert(out.end(), packed.begin(), packed.end());

        put_u8(out, gop.tail_residual.has_value() ? 1 : 0);
        if (gop.tail_residual) {
            put_u8(out, gop.tail_residual->quant_bits);
            put_u32(out, static_cast<std::uint32_t>(gop.tail_residual->compressed.size()));
            out.insert(out.end(), gop.tail_residual->compressed.begin(),
                       gop.tail_residual->compressed.end());
        }

        put_u8(out, static_cast<std::uint8_t>(gop.anchors.size()));
        for (const auto& anchor : gop.anchors) {
            put_u8(out, anchor.quant_bits);
            put_u32(out, static_cast<std::uint32_t>(anchor.compressed.size()));
            out.insert(out.end(), anchor.compressed.begin(), anchor.compressed.end());
        }
    }

    put_u64(out, fnv1a64(out));
    return out;
}

GvccStream parse_stream(std::span<const std::uint8_t> bytes) {
    if (bytes.size() < 8) throw ParseError("stream shorter than its trailer");
    const std::uint64_t stored = [&] {
        std::uint64_t v = 0;
        for (int i = 0; i < 8; ++i)
            v |= static_cast<std::uint64_t>(bytes[bytes.size() - 8 + i]) << (8 * i);
        return v;
    }();
    if (fnv1a64(bytes.subspan(0, bytes.size() - 8)) != stored)
        throw ChecksumError("stream integrity checksum mismatch");

    ByteReader reader(bytes.subspan(0, bytes.size() - 8));
    GvccStream stream;
    stream.header = parse_header(reader);
    const CodecConfig config = stream.header.to_config();

    stream.gops.reserve(stream.header.gop_count);
    for (std::uint32_t g = 0; g < stream.header.gop_count; ++g) {
        GopPayload gop;

        if (reader.get_u8()) {
            const std::uint32_t byte_len = reader.get_u32();
            if (byte_len != static_cast<std::uint32_t>(config.frame_dim() * 8))
                throw ParseError("side information length mismatch");
            std::vector<double> frame(static_cast<std::size_t>(config.frame_dim()));
            for (double& v : frame) v = reader.get_f64();
            gop.side_info_frame = std::move(frame);
            gop.side_info_bits = static_cast<std::uint64_t>(byte_len) * 8;
        }

        const std::uint64_t raw_bits =
            static_cast<std::uint64_t>(config.selection_bits_per_gop());
        const std::uint32_t byte_len = reader.get_u32();
        if (byte_len != (raw_bits + 7) / 8)
            throw ParseError("selection block length does not match the header");
        BitReader bits(reader.get_bytes(byte_len));
        const int coded_steps = config.steps - config.tail_steps;
        gop.selections.resize(static_cast<std::size_t>(coded_steps));
        for (int s = 0; s < coded_steps; ++s) {
            auto& row = gop.selections[static_cast<std::size_t>(s)];
            row.reserve(static_cast<std::size_t>(config.latent_frames));
            for (int f = 0; f < config.latent_frames; ++f)
                row.push_back(
                    read_selection(bits, config.atoms_for_frame(f), config.codebook_size));
        }
        gop.codebook_bits = raw_bits;

        if (reader.get_u8()) {
            QuantizedBlock block;
            block.quant_bits = reader.get_u8();
            const std::uint32_t comp_len = reader.get_u32();
            auto view = reader.get_bytes(comp_len);
            block.compressed.assign(view.begin(), view.end());
            gop.residual_bits = block.bits();
            gop.tail_residual = std::move(block);
        }

        const std::uint8_t anchor_count = reader.get_u8();
        for (std::uint8_t a = 0; a < anchor_count; ++a) {
            QuantizedBlock block;
            block.quant_bits = reader.get_u8();
            const std::uint32_t comp_len = reader.get_u32();
            auto view = reader.get_bytes(comp_len);
            block.compressed.assign(view.begin(), view.end());
            gop.anchor_bits += block.bits();
            gop.anchors.push_back(std::move(block));
        }

        check_payload_structure(gop, config, g);
        stream.gops.push_back(std::move(gop));
    }

    if (reader.remaining() != 0) throw ParseError("trailing bytes after the last GOP");
    return stream;
}

void write_file(const std::string& path, std::span<const std::uint8_t> bytes) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open for writing: " + path);
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!out) throw IoError("write failed: " + path);
}

std::vector<std::uint8_t> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary | std::ios::ate);
    if (!in) throw IoError("cannot open for reading: " + path);
    const std::streamsize size = in.tellg();
    in.seekg(0);
    std::vector<std::uint8_t> bytes(static_cast<std::size_t>(size));
    in.read(reinterpret_cast<char*>(bytes.data()), size);
    if (!in) throw IoError("read failed: " + path);
    return bytes;
}

} // namespace gvcc
