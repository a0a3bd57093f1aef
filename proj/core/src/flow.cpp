#include "gvcc/flow.hpp"

#include <algorithm>
#include <cmath>

namespace gvcc {

Tensor interpolate(const Tensor& x0, const Tensor& x1, double t,
                   const InterpolantSchedule& sched) {
    require_same_shape(x0, x1, "interpolate");
    if (t < 0.0 || t > 1.0) throw ConfigError("interpolation time outside [0,1]");
    const double a = sched.alpha(t);
    const double s = sched.sigma(t);
    Tensor out = Tensor::zeros_like(x0);
    for (std::int64_t i = 0; i < out.size(); ++i) out[i] = a * x0[i] + s * x1[i];
    return out;
}

Tensor score_from_velocity(const Tensor& x, double t, const Tensor& u,
                           const InterpolantSchedule& sched) {
    require_same_shape(x, u, "score_from_velocity");
    const double sigma = sched.sigma(t);
    if (sigma == 0.0)
        throw NumericError("score undefined where sigma(t) = 0");
    const double alpha = sched.alpha(t);
    const double alpha_dot = sched.alpha_dot(t);
    const double sigma_dot = sched.sigma_dot(t);
    const double denom = sigma * (alpha_dot * sigma - alpha * sigma_dot);
    Tensor out = Tensor::zeros_like(x);
    for (std::int64_t i = 0; i < out.size(); ++i)
        out[i] = (alpha * u[i] - alpha_dot * x[i]) / denom;
    return out;
}

Tensor rf_score_from_velocity(const Tensor& x, double t, const Tensor& u) {
    require_same_shape(x, u, "rf_score_from_velocity");
    if (t == 0.0) throw NumericError("score undefined at t = 0");
    Tensor out = Tensor::zeros_like(x);
    for (std::int64_t i = 0; i < out.size(); ++i)
        out[i] = -((1.0 - t) * u[i] + x[i]) / t;
    return out;
}

Tensor sde_drift(const Tensor& x, double t, const Tensor& u,
                 const DiffusionSchedule& diff, const InterpolantSchedule& sched) {
    const double g = diff.g(t);
    if (g == 0.0) return u;
    const Tensor score = score_from_velocity(x, t, u, sched);
    const double half_g2 = 0.5 * g * g;
    Tensor out = Tensor::zeros_like(u);
    for (std::int64_t i = 0; i < out.size(); ++i) out[i] = u[i] - half_g2 * score[i];
    return out;
}

LatentState ode_step(const LatentState& state, const Tensor& u, double dt) {
    require_same_shape(state.data, u, "ode_step");
    if (dt <= 0.0) throw ConfigError("ode_step requires dt > 0");
    if (state.t - dt < -1e-12) throw ConfigError("ode_step would cross t = 0");
    if (!all_finite(u)) throw NumericError("ode_step: nonfinite velocity");
    LatentState out;
    out.data = Tensor::zeros_like(state.data);
    for (std::int64_t i = 0; i < out.data.size(); ++i)
        out.data[i] = state.data[i] - u[i] * dt;
    out.t = std::max(0.0, state.t - dt);
    return out;
}

LatentState em_step(const LatentState& state, const Tensor& drift, double g_t,
                    double dt, const Tensor& z) {
    require_same_shape(state.data, drift, "em_step");
    require_same_shape(state.data, z, "em_step noise");
    if (dt <= 0.0) throw ConfigError("em_step requires dt > 0");
    if (!all_finite(drift) || !all_finite(z))
        throw NumericError("em_step: nonfinite drift or noise");
    const double noise_scale = g_t * std::sqrt(dt);
    LatentState out;
    out.data = Tensor::zeros_like(state.data);
    for (std::int64_t i = 0; i < out.data.size(); ++i)
        out.data[i] = state.data[i] - drift[i] * dt + noise_scale * z[i];
    out.t = std::max(0.0, state.t - dt);
    return out;
}

} // namespace gvcc
