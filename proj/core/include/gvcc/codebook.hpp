#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <span>
#include <vector>

#include "gvcc/fields.hpp"
#include "gvcc/flow.hpp"
#include "gvcc/schedule.hpp"
#include "gvcc/tensor.hpp"

namespace gvcc {

/// Atoms stored as rows: K x d, filled row by row from the pinned
/// per-step Gaussian stream.
using AtomMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// Largest codebook the generator will materialize (bytes).
constexpr std::int64_t kMaxCodebookBytes = std::int64_t(1) << 30;

struct CodebookParams {
    std::uint32_t atom_count = 0; // K, power of two
    std::uint32_t dim = 0;        // d, flattened latent-frame dimension
    std::uint64_t seed = 0;
    std::uint32_t gop_index = 0;
    std::uint32_t step_index = 0;

    void validate() const;
};

/// K standard-normal atoms, bit-identical for identical params within a
/// build. Both sides regenerate it; nothing of the matrix is transmitted.
AtomMatrix generate_codebook(const CodebookParams& params);

/// FNV-1a over the raw little-endian bytes of every coefficient, row-major.
/// Embedded in stream headers so decoders can fail loudly when their
/// regenerated atoms differ (wrong seed, different build).
std::uint64_t codebook_checksum(const AtomMatrix& atoms);

/// Transmitted symbols of one latent frame at one step: M distinct atom
/// indices ordered by descending |inner product| (ties by ascending
/// index), each with the sign of its inner product.
struct StepSelection {
    std::vector<std::uint32_t> indices;
    std::vector<std::int8_t> signs; // +1 or -1; exact zero maps to +1

    bool operator==(const StepSelection&) const = default;
};

/// Clean-signal estimate x - t*u.
Tensor denoise_estimate(const Tensor& x, double t, const Tensor& u);

/// Top-M atoms by |<atom, residual>|. `threads` splits the scan into row
/// blocks; every split returns the identical selection.
StepSelection select_atoms(std::span<const double> residual, const AtomMatrix& atoms,
                           int select_count, int threads = 1);

/// Signed atom sum normalized to unit element-wise standard deviation
/// (population form, mean-centered).
Eigen::VectorXd composite_noise(const StepSelection& selection, const AtomMatrix& atoms);

/// One coded SDE step of the encoder over a full latent (per-frame atom
/// selection against a step-shared codebook).
struct CodebookStepResult {
    LatentState next;
    std::vector<StepSelection> selections; // one per latent frame
    double residual_variance = 0.0;        // population variance of x0 - xhat
};

CodebookStepResult codebook_encode_step(const LatentState& state, const Tensor& x0,
                                        const VelocityField& field,
                                        const Conditioning& cond,
                                        const AtomMatrix& atoms,
                                        std::span<const int> per_frame_atoms,
                                        const DiffusionSchedule& diff,
                                        const InterpolantSchedule& sched, double dt,
                                        int threads = 1);

/// Decoder replay of the same step from received selections; bitwise
/// identical to the encoder's next state.
LatentState codebook_decode_step(const LatentState& state, const VelocityField& field,
                                 const Conditioning& cond, const AtomMatrix& atoms,
                                 std::span<const StepSelection> selections,
                                 const DiffusionSchedule& diff,
                                 const InterpolantSchedule& sched, double dt);

/// Monte Carlo estimate of c(M,d): the fraction of an isotropic Gaussian
/// residual's energy captured by projecting onto the span of the M
/// selected atoms.
double estimate_coverage(int select_count, int dim, int atom_count, int trials,
                         std::uint64_t seed);

struct BudgetRow {
    int step = 0;
    double t = 0.0;
    double innovation_energy = 0.0; // g_t^2 * dt
    double residual_variance = 0.0;
    bool pass = false;
};

struct BudgetReport {
    double coverage = 0.0; // c(M,d) used for every row
    double rho = 1.0;
    std::vector<BudgetRow> rows;
    bool all_pass = true;
};

/// Advisory check of g_t^2*dt <= rho * c(M,d) * Var(r_t) per coded step.
/// The inequality is non-strict; a report never throws.
BudgetReport validate_budget(std::span<const double> residual_variances,
                             const TimeGrid& grid, const DiffusionSchedule& diff,
                             double coverage, double rho);

} // namespace gvcc
