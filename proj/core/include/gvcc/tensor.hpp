#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "gvcc/errors.hpp"

namespace gvcc {

/// Dimensions of a latent video: frames x channels x height x width.
struct Shape {
    int frames = 0;
    int channels = 0;
    int height = 0;
    int width = 0;

    std::int64_t size() const {
        return static_cast<std::int64_t>(frames) * channels * height * width;
    }
    std::int64_t frame_size() const {
        return static_cast<std::int64_t>(channels) * height * width;
    }
    bool operator==(const Shape&) const = default;
};

/// Dense 4-D tensor of doubles, row-major in (frame, channel, row, col).
class Tensor {
public:
    Tensor() = default;
    explicit Tensor(Shape s, double fill = 0.0)
        : shape_(s), data_(static_cast<std::size_t>(s.size()), fill) {
        if (s.frames < 0 || s.channels < 0 || s.height < 0 || s.width < 0)
            throw ShapeError("negative tensor dimension");
    }

    static Tensor zeros_like(const Tensor& other) { return Tensor(other.shape_); }

    const Shape& shape() const { return shape_; }
    std::int64_t size() const { return static_cast<std::int64_t>(data_.size()); }

    double* data() { return data_.data(); }
    const double* data() const { return data_.data(); }

    double& operator[](std::int64_t i) { return data_[static_cast<std::size_t>(i)]; }
    double operator[](std::int64_t i) const { return data_[static_cast<std::size_t>(i)]; }

    double& at(int f, int c, int y, int x) {
        return data_[static_cast<std::size_t>(index(f, c, y, x))];
    }
    double at(int f, int c, int y, int x) const {
        return data_[static_cast<std::size_t>(index(f, c, y, x))];
    }

    std::span<double> frame(int f) {
        return {data_.data() + f * shape_.frame_size(),
                static_cast<std::size_t>(shape_.frame_size())};
    }
    std::span<const double> frame(int f) const {
        return {data_.data() + f * shape_.frame_size(),
                static_cast<std::size_t>(shape_.frame_size())};
    }

    /// Copy of frame f as a single-frame tensor.
    Tensor frame_tensor(int f) const;
    /// Overwrite frame f from a single-frame tensor or flat span.
    void set_frame(int f, std::span<const double> values);

    bool operator==(const Tensor& other) const {
        return shape_ == other.shape_ && data_ == other.data_;
    }

private:
    std::int64_t index(int f, int c, int y, int x) const {
        return ((static_cast<std::int64_t>(f) * shape_.channels + c) * shape_.height + y) *
                   shape_.width + x;
    }

    Shape shape_;
    std::vector<double> data_;
};

inline void require_same_shape(const Tensor& a, const Tensor& b, const char* what) {
    if (!(a.shape() == b.shape()))
        throw ShapeError(std::string(what) + ": tensor shapes differ");
}

bool all_finite(const Tensor& t);

/// Mean over all elements.
double mean(const Tensor& t);
/// Population variance over all elements (mean-centered, divide by n).
double population_variance(const Tensor& t);
double min_value(const Tensor& t);
double max_value(const Tensor& t);

/// Mean squared difference over all elements.
double mean_squared_error(const Tensor& a, const Tensor& b);

} // namespace gvcc
