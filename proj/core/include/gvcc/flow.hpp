#pragma once

#include "gvcc/schedule.hpp"
#include "gvcc/tensor.hpp"

namespace gvcc {

/// A latent tensor together with its position on the time axis.
struct LatentState {
    Tensor data;
    double t = 1.0;
};

/// alpha(t)*x0 + sigma(t)*x1. With the rectified-flow schedule this is
/// the straight-line interpolant (1-t)*x0 + t*x1.
Tensor interpolate(const Tensor& x0, const Tensor& x1, double t,
                   const InterpolantSchedule& sched);

/// Score recovered from the velocity field:
///   (1/sigma) * (alpha*u - alpha_dot*x) / (alpha_dot*sigma - alpha*sigma_dot).
/// Rejects t=0 where sigma vanishes.
Tensor score_from_velocity(const Tensor& x, double t, const Tensor& u,
                           const InterpolantSchedule& sched);

/// Hand-specialized rectified-flow form -((1-t)*u + x) / t.
Tensor rf_score_from_velocity(const Tensor& x, double t, const Tensor& u);

/// Reverse-SDE drift u - (g^2/2)*score. Returns u bitwise when the
/// diffusion coefficient is zero (the pure-ODE reduction).
Tensor sde_drift(const Tensor& x, double t, const Tensor& u,
                 const DiffusionSchedule& diff, const InterpolantSchedule& sched);

/// Backward Euler step of the probability-flow ODE: x <- x - u*dt.
LatentState ode_step(const LatentState& state, const Tensor& u, double dt);

/// Euler-Maruyama step: x <- x - drift*dt + g_t*sqrt(dt)*z.
LatentState em_step(const LatentState& state, const Tensor& drift, double g_t,
                    double dt, const Tensor& z);

} // namespace gvcc
