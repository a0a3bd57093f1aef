#include "gvcc/fields.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "gvcc/rng.hpp"

namespace gvcc {

Conditioning Conditioning::with_first(Tensor anchor) {
    Conditioning c;
    c.mode = CondMode::first_anchor;
    c.first = std::move(anchor);
    return c;
}

Conditioning Conditioning::with_both(Tensor first_anchor, Tensor last_anchor) {
    Conditioning c;
    c.mode = CondMode::dual_anchor;
    c.first = std::move(first_anchor);
    c.last = std::move(last_anchor);
    return c;
}

std::vector<std::uint8_t> Conditioning::temporal_mask(int frames) const {
    std::vector<std::uint8_t> mask(static_cast<std::size_t>(frames), 0);
    if (frames == 0) return mask;
    if (mode == CondMode::first_anchor || mode == CondMode::dual_anchor) mask.front() = 1;
    if (mode == CondMode::dual_anchor) mask.back() = 1;
    return mask;
}

void Conditioning::validate_against(const Shape& latent) const {
    const Shape frame{1, latent.channels, latent.height, latent.width};
    auto check = [&](const std::optional<Tensor>& a, const char* which) {
        if (!a) throw ShapeError(std::string("conditioning anchor missing: ") + which);
        if (!(a->shape() == frame))
            throw ShapeError(std::string("conditioning anchor shape mismatch: ") + which);
    };
    switch (mode) {
    case CondMode::none:
        break;
    case CondMode::first_anchor:
        check(first, "first");
        break;
    case CondMode::dual_anchor:
        check(first, "first");
        check(last, "last");
        break;
    }
}

GaussianMixturePrior::GaussianMixturePrior(std::vector<GaussianComponent> components)
    : components_(std::move(components)) {
    if (components_.empty()) throw ConfigError("mixture prior needs at least one component");
    double total = 0.0;
    for (const auto& c : components_) {
        if (c.weight < 0.0) throw ConfigError("mixture weight must be nonnegative");
        if (c.stddev < 0.0) throw ConfigError("mixture stddev must be nonnegative");
        if (!(c.mean.shape() == components_.front().mean.shape()))
            throw ShapeError("mixture component means must share a shape");
        total += c.weight;
    }
    if (std::abs(total - 1.0) > 1e-12)
        throw ConfigError("mixture weights must sum to 1 within 1e-12");
}

namespace {

// Per-component moments of the time-t marginal under the RF interpolant:
// mean (1-t)*mu_k, isotropic variance (1-t)^2 sigma_k^2 + t^2.
double component_variance(const GaussianComponent& c, double t) {
    const double a = 1.0 - t;
    return a * a * c.stddev * c.stddev + t * t;
}

std::vector<double> component_log_densities(const GaussianMixturePrior& prior,
                                            const Tensor& x, double t) {
    const auto& comps = prior.components();
    const double d = static_cast<double>(x.size());
    std::vector<double> logs(comps.size());
    for (std::size_t k = 0; k < comps.size(); ++k) {
        const double v = component_variance(comps[k], t);
        if (v <= 0.0)
            throw NumericError("degenerate mixture component at this time");
        const double a = 1.0 - t;
        double sq = 0.0;
        for (std::int64_t i = 0; i < x.size(); ++i) {
            const double diff = x[i] - a * comps[k].mean[i];
            sq += diff * diff;
        }
        logs[k] = std::log(comps[k].weight) -
                  0.5 * (sq / v + d * std::log(2.0 * std::numbers::pi * v));
    }
    return logs;
}

} // namespace

std::vector<double> GaussianMixturePrior::responsibilities(const Tensor& x, double t) const {
    auto logs = component_log_densities(*this, x, t);
    const double top = *std::max_element(logs.begin(), logs.end());
    double denom = 0.0;
    for (double& l : logs) {
        l = std::exp(l - top);
        denom += l;
    }
    for (double& l : logs) l /= denom;
    return logs;
}

Tensor GaussianMixturePrior::marginal_mean(double t) const {
    Tensor out = Tensor::zeros_like(components_.front().mean);
    const double a = 1.0 - t;
    for (const auto& c : components_)
        for (std::int64_t i = 0; i < out.size(); ++i) out[i] += c.weight * a * c.mean[i];
    return out;
}

Tensor GaussianMixturePrior::marginal_variance(double t) const {
    const Tensor m = marginal_mean(t);
    Tensor out = Tensor::zeros_like(m);
    const double a = 1.0 - t;
    for (const auto& c : components_) {
        const double v = component_variance(c, t);
        for (std::int64_t i = 0; i < out.size(); ++i) {
            const double cm = a * c.mean[i];
            out[i] += c.weight * (v + cm * cm);
        }
    }
    for (std::int64_t i = 0; i < out.size(); ++i) out[i] -= m[i] * m[i];
    return out;
}

double GaussianMixturePrior::log_marginal(const Tensor& x, double t) const {
    auto logs = component_log_densities(*this, x, t);
    const double top = *std::max_element(logs.begin(), logs.end());
    double acc = 0.0;
    for (double l : logs) acc += std::exp(l - top);
    return top + std::log(acc);
}

Tensor GaussianMixturePrior::sample(std::uint64_t seed) const {
    SplitMix64 pick(mix64(seed ^ 0x70726972ull)); // "prir"
    double u = pick.uniform();
    std::size_t chosen = components_.size() - 1;
    double acc = 0.0;
    for (std::size_t k = 0; k < components_.size(); ++k) {
        acc += components_[k].weight;
        if (u < acc) {
            chosen = k;
            break;
        }
    }
    const auto& c = components_[chosen];
    GaussianStream noise(pick.next());
    Tensor out = Tensor::zeros_like(c.mean);
    for (std::int64_t i = 0; i < out.size(); ++i)
        out[i] = c.mean[i] + c.stddev * noise.next();
    return out;
}

Tensor gmm_velocity(const Tensor& x, double t, const GaussianMixturePrior& prior) {
    if (t < 0.0 || t > 1.0) throw ConfigError("gmm_velocity time outside [0,1]");
    // At t=0 the state is x0 itself and u = E[x1] - x0 = -x0.
    if (t == 0.0) {
        Tensor out = Tensor::zeros_like(x);
        for (std::int64_t i = 0; i < out.size(); ++i) out[i] = -x[i];
        return out;
    }
    const auto gamma = prior.responsibilities(x, t);
    const auto& comps = prior.components();
    const double a = 1.0 - t;
    Tensor out = Tensor::zeros_like(x);
    for (std::size_t k = 0; k < comps.size(); ++k) {
        const double v = component_variance(comps[k], t);
        const double coeff = (t - a * comps[k].stddev * comps[k].stddev) / v;
        for (std::int64_t i = 0; i < out.size(); ++i) {
            const double centered = x[i] - a * comps[k].mean[i];
            out[i] += gamma[k] * (coeff * centered - comps[k].mean[i]);
        }
    }
    return out;
}

Tensor gmm_score(const Tensor& x, double t, const GaussianMixturePrior& prior) {
    if (t <= 0.0 || t > 1.0) throw ConfigError("gmm_score time outside (0,1]");
    const auto gamma = prior.responsibilities(x, t);
    const auto& comps = prior.components();
    const double a = 1.0 - t;
    Tensor out = Tensor::zeros_like(x);
    for (std::size_t k = 0; k < comps.size(); ++k) {
        const double v = component_variance(comps[k], t);
        for (std::int64_t i = 0; i < out.size(); ++i)
            out[i] -= gamma[k] * (x[i] - a * comps[k].mean[i]) / v;
    }
    return out;
}

GaussianMixturePrior default_test_prior(const Shape& shape) {
    auto constant = [&](double value) {
        Tensor t(shape);
        for (std::int64_t i = 0; i < t.size(); ++i) t[i] = value;
        return t;
    };
    std::vector<GaussianComponent> comps;
    comps.push_back({0.30, constant(-2.0), 0.6});
    comps.push_back({0.45, constant(0.5), 0.9});
    comps.push_back({0.25, constant(2.5), 0.5});
    return GaussianMixturePrior(std::move(comps));
}

} // namespace gvcc
