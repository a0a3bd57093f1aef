#include "gvcc/tensor.hpp"

#include <algorithm>
#include <cmath>

namespace gvcc {

Tensor Tensor::frame_tensor(int f) const {
    if (f < 0 || f >= shape_.frames) throw ShapeError("frame index out of range");
    Tensor out(Shape{1, shape_.channels, shape_.height, shape_.width});
    auto src = frame(f);
    std::copy(src.begin(), src.end(), out.data());
    return out;
}

void Tensor::set_frame(int f, std::span<const double> values) {
    if (f < 0 || f >= shape_.frames) throw ShapeError("frame index out of range");
    if (static_cast<std::int64_t>(values.size()) != shape_.frame_size())
        throw ShapeError("frame size mismatch");
    std::copy(values.begin(), values.end(), data_.data() + f * shape_.frame_size());
}

bool all_finite(const Tensor& t) {
    const double* p = t.data();
    for (std::int64_t i = 0; i < t.size(); ++i)
        if (!std::isfinite(p[i])) return false;
    return true;
}

double mean(const Tensor& t) {
    if (t.size() == 0) return 0.0;
    double acc = 0.0;
    for (std::int64_t i = 0; i < t.size(); ++i) acc += t[i];
    return acc / static_cast<double>(t.size());
}

double population_variance(const Tensor& t) {
    if (t.size() == 0) return 0.0;
    const double m = mean(t);
    double acc = 0.0;
    for (std::int64_t i = 0; i < t.size(); ++i) {
        const double d = t[i] - m;
        acc += d * d;
    }
    return acc / static_cast<double>(t.size());
}

double min_value(const Tensor& t) {
    double m = t.size() ? t[0] : 0.0;
    for (std::int64_t i = 1; i < t.size(); ++i) m = std::min(m, t[i]);
    return m;
}

double max_value(const Tensor& t) {
    double m = t.size() ? t[0] : 0.0;
    for (std::int64_t i = 1; i < t.size(); ++i) m = std::max(m, t[i]);
    return m;
}

double mean_squared_error(const Tensor& a, const Tensor& b) {
    require_same_shape(a, b, "mean_squared_error");
    if (a.size() == 0) return 0.0;
    double acc = 0.0;
    for (std::int64_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        acc += d * d;
    }
    return acc / static_cast<double>(a.size());
}

} // namespace gvcc
