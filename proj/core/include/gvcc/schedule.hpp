#pragma once

#include <functional>

#include "gvcc/errors.hpp"

namespace gvcc {

/// Interpolant coefficients alpha_t, sigma_t and their derivatives.
/// Boundary conditions: alpha(0)=1, sigma(0)=0, alpha(1)=0, sigma(1)=1,
/// with alpha decreasing and sigma increasing on (0,1).
struct InterpolantSchedule {
    std::function<double(double)> alpha;
    std::function<double(double)> sigma;
    std::function<double(double)> alpha_dot;
    std::function<double(double)> sigma_dot;
};

/// The rectified-flow instance: alpha(t) = 1-t, sigma(t) = t.
inline InterpolantSchedule rectified_flow_schedule() {
    return InterpolantSchedule{
        [](double t) { return 1.0 - t; },
        [](double t) { return t; },
        [](double) { return -1.0; },
        [](double) { return 1.0; },
    };
}

/// Diffusion coefficient g(t) = g_scale * t^2. Vanishes at t=0 so the
/// drift correction stays O(t^3) and the score is never needed near the
/// data endpoint.
struct DiffusionSchedule {
    double g_scale = 3.0;

    double g(double t) const { return g_scale * t * t; }
};

/// Uniform descending grid t_k = 1 - k/T for k = 0..T; the last `tail`
/// steps of a trajectory run the deterministic ODE and transmit nothing.
class TimeGrid {
public:
    TimeGrid(int step_count, int tail_step_count)
        : steps_(step_count), tail_(tail_step_count) {
        if (steps_ < 1) throw ConfigError("time grid needs at least one step");
        if (tail_ < 0 || tail_ >= steps_)
            throw ConfigError("tail step count must satisfy 0 <= N < T");
    }

    int steps() const { return steps_; }
    int tail_steps() const { return tail_; }
    int coded_steps() const { return steps_ - tail_; }
    double dt() const { return 1.0 / steps_; }
    double node(int k) const { return 1.0 - static_cast<double>(k) / steps_; }

private:
    int steps_;
    int tail_;
};

} // namespace gvcc
