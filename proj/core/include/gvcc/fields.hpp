#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gvcc/tensor.hpp"

namespace gvcc {

enum class CondMode : std::uint8_t { none = 0, first_anchor = 1, dual_anchor = 2 };

/// Anchor frames placed at the temporal endpoints of a GOP, plus the
/// implied binary mask over temporal positions.
struct Conditioning {
    CondMode mode = CondMode::none;
    std::optional<Tensor> first; // single-frame tensor (1,C,H,W)
    std::optional<Tensor> last;

    static Conditioning unconditioned() { return {}; }
    static Conditioning with_first(Tensor anchor);
    static Conditioning with_both(Tensor first_anchor, Tensor last_anchor);

    /// 1 exactly at anchored temporal positions of an F-frame latent.
    std::vector<std::uint8_t> temporal_mask(int frames) const;
    /// Throws if anchors are missing or spatially incompatible with `latent`.
    void validate_against(const Shape& latent) const;
};

/// Uniform velocity-field interface. Analytic fields ignore conditioning;
/// the trained toy field consumes it as extra input channels.
class VelocityField {
public:
    virtual ~VelocityField() = default;
    virtual Tensor velocity(const Tensor& x, double t, const Conditioning& cond) const = 0;
};

struct GaussianComponent {
    double weight = 1.0;
    Tensor mean;
    double stddev = 1.0; // isotropic
};

/// Mixture prior over latent tensors; each component is isotropic with a
/// tensor-valued mean. Marginals under the rectified-flow interpolant are
/// again Gaussian mixtures, so velocity, score, and moments all have
/// closed forms.
class GaussianMixturePrior {
public:
    explicit GaussianMixturePrior(std::vector<GaussianComponent> components);

    const std::vector<GaussianComponent>& components() const { return components_; }
    const Shape& shape() const { return components_.front().mean.shape(); }

    /// Posterior responsibilities of the mixture components given x_t = x.
    std::vector<double> responsibilities(const Tensor& x, double t) const;

    /// Closed-form mean of the time-t marginal, per element.
    Tensor marginal_mean(double t) const;
    /// Closed-form element-wise variance of the time-t marginal.
    Tensor marginal_variance(double t) const;
    /// log p_t(x) of the time-t marginal.
    double log_marginal(const Tensor& x, double t) const;

    /// Draw a sample from the prior (t = 0 distribution).
    Tensor sample(std::uint64_t seed) const;

private:
    std::vector<GaussianComponent> components_;
};

/// E[x1 - x0 | x_t = x]: the exact flow-matching velocity of the mixture.
Tensor gmm_velocity(const Tensor& x, double t, const GaussianMixturePrior& prior);

/// Closed-form grad log p_t(x) of the mixture marginal.
Tensor gmm_score(const Tensor& x, double t, const GaussianMixturePrior& prior);

/// VelocityField adapter around the analytic mixture oracle.
class GmmField : public VelocityField {
public:
    explicit GmmField(GaussianMixturePrior prior) : prior_(std::move(prior)) {}

    Tensor velocity(const Tensor& x, double t, const Conditioning&) const override {
        return gmm_velocity(x, t, prior_);
    }
    Tensor score(const Tensor& x, double t) const { return gmm_score(x, t, prior_); }
    const GaussianMixturePrior& prior() const { return prior_; }

private:
    GaussianMixturePrior prior_;
};

/// Three-component mixture used by the CLI and the verification suites.
GaussianMixturePrior default_test_prior(const Shape& shape);

} // namespace gvcc
