#include "gvcc/codebook.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <numeric>
#include <thread>

#include "gvcc/rng.hpp"

namespace gvcc {

void CodebookParams::validate() const {
    if (atom_count < 1 || !std::has_single_bit(atom_count))
        throw ConfigError("codebook atom count must be a power of two >= 1");
    if (dim < 1) throw ConfigError("codebook dimension must be >= 1");
}

AtomMatrix generate_codebook(const CodebookParams& params) {
    params.validate();
    const std::int64_t bytes =
        static_cast<std::int64_t>(params.atom_count) * params.dim * 8;
    if (bytes > kMaxCodebookBytes)
        throw ResourceError("codebook exceeds the in-memory cap");
    GaussianStream gauss(step_stream(params.seed, params.gop_index, params.step_index));
    AtomMatrix atoms(params.atom_count, params.dim);
    double* p = atoms.data(); // row-major: atom 0 first
    const std::int64_t n = static_cast<std::int64_t>(params.atom_count) * params.dim;
    for (std::int64_t i = 0; i < n; ++i) p[i] = gauss.next();
    return atoms;
}

std::uint64_t codebook_checksum(const AtomMatrix& atoms) {
    std::uint64_t hash = 0xcbf29ce484222325ull;
    const double* p = atoms.data();
    const std::int64_t n = atoms.rows() * atoms.cols();
    for (std::int64_t i = 0; i < n; ++i) {
        const std::uint64_t bits = std::bit_cast<std::uint64_t>(p[i]);
        for (int b = 0; b < 8; ++b) {
            hash ^= (bits >> (8 * b)) & 0xffu;
            hash *= 0x100000001b3ull;
        }
    }
    return hash;
}

Tensor denoise_estimate(const Tensor& x, double t, const Tensor& u) {
    require_same_shape(x, u, "denoise_estimate");
    Tensor out = Tensor::zeros_like(x);
    for (std::int64_t i = 0; i < out.size(); ++i) out[i] = x[i] - t * u[i];
    return out;
}

namespace {

void scan_rows(const AtomMatrix& atoms, const double* residual, std::int64_t begin,
               std::int64_t end, double* out) {
    const std::int64_t d = atoms.cols();
    for (std::int64_t i = begin; i < end; ++i) {
        const double* row = atoms.data() + i * d;
        double acc = 0.0;
        for (std::int64_t j = 0; j < d; ++j) acc += row[j] * residual[j];
        out[i] = acc;
    }
}

} // namespace

StepSelection select_atoms(std::span<const double> residual, const AtomMatrix& atoms,
                           int select_count, int threads) {
    const std::int64_t k_total = atoms.rows();
    if (static_cast<std::int64_t>(residual.size()) != atoms.cols())
        throw ShapeError("residual length does not match atom dimension");
    if (select_count < 1 || select_count > k_total)
        throw ConfigError("selection count must satisfy 1 <= M <= K");
    for (double v : residual)
        if (!std::isfinite(v)) throw NumericError("select_atoms: nonfinite residual");

    // Each inner product is computed over the full row regardless of the
    // partitioning, so the scores (and hence the selection) do not depend
    // on the thread count.
    std::vector<double> scores(static_cast<std::size_t>(k_total));
    const int workers = std::clamp<int>(threads, 1, static_cast<int>(k_total));
    if (workers <= 1) {
        scan_rows(atoms, residual.data(), 0, k_total, scores.data());
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        const std::int64_t chunk = (k_total + workers - 1) / workers;
        for (int w = 0; w < workers; ++w) {
            const std::int64_t begin = w * chunk;
            const std::int64_t end = std::min<std::int64_t>(k_total, begin + chunk);
            if (begin >= end) break;
            pool.emplace_back(scan_rows, std::cref(atoms), residual.data(), begin, end,
                              scores.data());
        }
        for (auto& th : pool) th.join();
    }

    std::vector<std::uint32_t> order(static_cast<std::size_t>(k_total));
    std::iota(order.begin(), order.end(), 0u);
    auto better = [&](std::uint32_t a, std::uint32_t b) {
        const double fa = std::fabs(scores[a]);
        const double fb = std::fabs(scores[b]);
        if (fa != fb) return fa > fb;
        return a < b;
    };
    std::nth_element(order.begin(), order.begin() + (select_count - 1), order.end(), better);
    std::sort(order.begin(), order.begin() + select_count, better);

    StepSelection sel;
    sel.indices.assign(order.begin(), order.begin() + select_count);
    sel.signs.resize(static_cast<std::size_t>(select_count));
    for (int m = 0; m < select_count; ++m)
        sel.signs[static_cast<std::size_t>(m)] = scores[sel.indices[m]] < 0.0 ? -1 : 1;
    return sel;
}

Eigen::VectorXd composite_noise(const StepSelection& selection, const AtomMatrix& atoms) {
    if (selection.indices.empty() || selection.indices.size() != selection.signs.size())
        throw ConfigError("invalid selection");
    const std::int64_t d = atoms.cols();
    Eigen::VectorXd sum = Eigen::VectorXd::Zero(d);
    for (std::size_t m = 0; m < selection.indices.size(); ++m) {
        const std::uint32_t idx = selection.indices[m];
        if (idx >= atoms.rows()) throw ConfigError("selection index out of range");
        const double s = selection.signs[m] < 0 ? -1.0 : 1.0;
        sum += s * atoms.row(idx).transpose();
    }
    const double mean = sum.mean();
    const double variance = (sum.array() - mean).square().sum() / static_cast<double>(d);
    const double stddev = std::sqrt(variance);
    if (!(stddev > 0.0) || !std::isfinite(stddev))
        throw NumericError("degenerate composite: zero standard deviation");
    return sum / stddev;
}

namespace {

// Shared by encoder and decoder so both sides execute the identical
// floating-point sequence for a step.
LatentState apply_coded_update(const LatentState& state, const Tensor& u,
                               const Tensor& composite, const DiffusionSchedule& diff,
                               const InterpolantSchedule& sched, double dt) {
    const Tensor drift = sde_drift(state.data, state.t, u, diff, sched);
    return em_step(state, drift, diff.g(state.t), dt, composite);
}

Tensor assemble_composite(const Tensor& like, const AtomMatrix& atoms,
                          std::span<const StepSelection> selections) {
    const Shape shape = like.shape();
    if (static_cast<int>(selections.size()) != shape.frames)
        throw ShapeError("one selection per latent frame expected");
    if (atoms.cols() != shape.frame_size())
        throw ShapeError("codebook dimension does not match the latent frame");
    Tensor z = Tensor::zeros_like(like);
    for (int f = 0; f < shape.frames; ++f) {
        const Eigen::VectorXd zf = composite_noise(selections[static_cast<std::size_t>(f)], atoms);
        z.set_frame(f, std::span<const double>(zf.data(), static_cast<std::size_t>(zf.size())));
    }
    return z;
}

} // namespace

CodebookStepResult codebook_encode_step(const LatentState& state, const Tensor& x0,
                                        const VelocityField& field,
                                        const Conditioning& cond,
                                        const AtomMatrix& atoms,
                                        std::span<const int> per_frame_atoms,
                                        const DiffusionSchedule& diff,
                                        const InterpolantSchedule& sched, double dt,
                                        int threads) {
    require_same_shape(state.data, x0, "codebook_encode_step");
    const Shape shape = state.data.shape();
    if (static_cast<int>(per_frame_atoms.size()) != shape.frames)
        throw ShapeError("per-frame atom counts must cover every latent frame");

    const Tensor u = field.velocity(state.data, state.t, cond);
    const Tensor xhat = denoise_estimate(state.data, state.t, u);
    Tensor residual = Tensor::zeros_like(x0);
    for (std::int64_t i = 0; i < residual.size(); ++i) residual[i] = x0[i] - xhat[i];

    CodebookStepResult result;
    result.residual_variance = population_variance(residual);
    result.selections.reserve(static_cast<std::size_t>(shape.frames));
    for (int f = 0; f < shape.frames; ++f)
        result.selections.push_back(select_atoms(residual.frame(f), atoms,
                                                 per_frame_atoms[static_cast<std::size_t>(f)],
                                                 threads));
    const Tensor z = assemble_composite(state.data, atoms, result.selections);
    result.next = apply_coded_update(state, u, z, diff, sched, dt);
    return result;
}

LatentState codebook_decode_step(const LatentState& state, const VelocityField& field,
                                 const Conditioning& cond, const AtomMatrix& atoms,
                                 std::span<const StepSelection> selections,
                                 const DiffusionSchedule& diff,
                                 const InterpolantSchedule& sched, double dt) {
    const Tensor u = field.velocity(state.data, state.t, cond);
    const Tensor z = assemble_composite(state.data, atoms, selections);
    return apply_coded_update(state, u, z, diff, sched, dt);
}

double estimate_coverage(int select_count, int dim, int atom_count, int trials,
                         std::uint64_t seed) {
    if (trials < 100) throw ConfigError("coverage estimate needs at least 100 trials");
    CodebookParams params;
    params.atom_count = static_cast<std::uint32_t>(atom_count);
    params.dim = static_cast<std::uint32_t>(dim);
    params.seed = seed;
    params.gop_index = 0;
    params.step_index = 0;
    const AtomMatrix atoms = generate_codebook(params);

    GaussianStream gauss(mix64(seed ^ 0x636f7665ull)); // "cove"
    double total = 0.0;
    Eigen::VectorXd r(dim);
    for (int trial = 0; trial < trials; ++trial) {
        for (int i = 0; i < dim; ++i) r[i] = gauss.next();
        const StepSelection sel =
            select_atoms(std::span<const double>(r.data(), static_cast<std::size_t>(dim)),
                         atoms, select_count);
        Eigen::MatrixXd basis(dim, select_count);
        for (int m = 0; m < select_count; ++m)
            basis.col(m) = atoms.row(sel.indices[static_cast<std::size_t>(m)]).transpose();
        const Eigen::MatrixXd gram = basis.transpose() * basis;
        const Eigen::VectorXd coeff = gram.ldlt().solve(basis.transpose() * r);
        const Eigen::VectorXd projected = basis * coeff;
        total += projected.squaredNorm() / r.squaredNorm();
    }
    return total / trials;
}

BudgetReport validate_budget(std::span<const double> residual_variances,
                             const TimeGrid& grid, const DiffusionSchedule& diff,
                             double coverage, double rho) {
    if (static_cast<int>(residual_variances.size()) != grid.coded_steps())
        throw ConfigError("one residual variance per coded step expected");
    BudgetReport report;
    report.coverage = coverage;
    report.rho = rho;
    report.rows.reserve(residual_variances.size());
    for (int k = 0; k < grid.coded_steps(); ++k) {
        BudgetRow row;
        row.step = k;
        row.t = grid.node(k);
        const double g = diff.g(row.t);
        row.innovation_energy = g * g * grid.dt();
        row.residual_variance = residual_variances[static_cast<std::size_t>(k)];
        row.pass = row.innovation_energy <= rho * coverage * row.residual_variance;
        report.all_pass = report.all_pass && row.pass;
        report.rows.push_back(row);
    }
    return report;
}

} // namespace gvcc
