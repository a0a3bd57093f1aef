#include "gvcc/config.hpp"

#include <bit>

namespace gvcc {

std::string to_string(GopMode mode) {
    switch (mode) {
    case GopMode::t2v: return "t2v";
    case GopMode::i2v: return "i2v";
    case GopMode::flf2v: return "flf2v";
    }
    return "?";
}

GopMode gop_mode_from_string(const std::string& name) {
    if (name == "t2v" || name == "T2V") return GopMode::t2v;
    if (name == "i2v" || name == "I2V") return GopMode::i2v;
    if (name == "flf2v" || name == "FLF2V") return GopMode::flf2v;
    throw ConfigError("unknown mode: " + name);
}

int CodecConfig::index_bits() const {
    return std::bit_width(static_cast<std::uint32_t>(codebook_size)) - 1;
}

int CodecConfig::atoms_for_frame(int f) const {
    if (mode == GopMode::i2v && f >= latent_frames - tail_frames) return tail_atoms;
    return atoms;
}

std::int64_t CodecConfig::selection_bits_per_step() const {
    const int bits_per_symbol = index_bits() + 1;
    std::int64_t total = 0;
    for (int f = 0; f < latent_frames; ++f)
        total += static_cast<std::int64_t>(atoms_for_frame(f)) * bits_per_symbol;
    return total;
}

std::int64_t CodecConfig::selection_bits_per_gop() const {
    return static_cast<std::int64_t>(steps - tail_steps) * selection_bits_per_step();
}

void CodecConfig::validate() const {
    if (codebook_size < 1 || !std::has_single_bit(static_cast<std::uint32_t>(codebook_size)))
        throw ConfigError("codebook_size must be a power of two");
    if (atoms < 1 || atoms > codebook_size)
        throw ConfigError("atoms must satisfy 1 <= M <= K");
    if (tail_atoms < 1 || tail_atoms > codebook_size)
        throw ConfigError("tail_atoms must satisfy 1 <= M_tail <= K");
    if (steps < 1) throw ConfigError("steps must be >= 1");
    if (tail_steps < 0 || tail_steps >= steps)
        throw ConfigError("tail_steps must satisfy 0 <= N < T");
    if (g_scale < 0.0) throw ConfigError("g_scale must be nonnegative");
    if (gop_frames < 1 || gop_frames % 4 != 1)
        throw ConfigError("gop_frames must be a 4k+1 integer");
    if (latent_frames != (gop_frames - 1) / 4 + 1)
        throw ConfigError("latent_frames must equal (gop_frames-1)/4 + 1");
    if (latent_channels < 1 || latent_height < 1 || latent_width < 1)
        throw ConfigError("latent dimensions must be positive");
    if (tail_frames < 1 || tail_frames > latent_frames)
        throw ConfigError("tail_frames must satisfy 1 <= F_tail <= F");
    if (overlap < 0 || overlap >= latent_frames)
        throw ConfigError("overlap must be smaller than the GOP latent length");
    if (rho <= 0.0) throw ConfigError("rho must be positive");
    if (pixel_frames < 1 || pixel_height < 1 || pixel_width < 1)
        throw ConfigError("pixel dimensions must be positive");
}

} // namespace gvcc
