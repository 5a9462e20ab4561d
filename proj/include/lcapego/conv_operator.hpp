#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "lcapego/transform.hpp"

namespace lcapego {

/// The convolution operator with kernel f, acting on the group's l2 space
/// by phi -> f * phi. The materialized matrix has entry
/// (x_row, y_col) = f(x-y) * haar_weight: circulant / multi-level circulant
/// on FiniteProduct, Toeplitz with zero-extension on ZWindow (deliberately
/// not wrapped: wrapping would change the spectrum to the circulant one).
class ConvolutionOperator {
public:
    static constexpr std::size_t kMaterializeCap = 4096;

    const GroupFunction& kernel() const { return kernel_; }
    const GroupModel& group() const { return kernel_.group; }
    bool materialized() const { return !matrix_.empty(); }

    /// Row-major point_count x point_count matrix; empty unless materialized.
    const std::vector<std::complex<double>>& matrix() const { return matrix_; }

    /// f * phi under the module's truncation semantics (agrees with
    /// convolve exactly).
    GroupFunction apply(const GroupFunction& phi) const;

    friend ConvolutionOperator make_operator(GroupFunction f, bool materialize);

private:
    ConvolutionOperator() = default;

    GroupFunction kernel_;
    std::vector<std::complex<double>> matrix_;
};

/// Builds the operator; materializes the matrix iff requested. Throws
/// TooLarge when materialization would exceed kMaterializeCap points.
ConvolutionOperator make_operator(GroupFunction f, bool materialize);

/// Largest singular value of the materialized matrix by dense
/// decomposition. FiniteProduct only (WrongModel otherwise; ZWindow/RealGrid
/// truncations use the power-iteration route). Materializes on demand.
double opnorm_exact(const ConvolutionOperator& op);

struct PowerIterationResult {
    double estimate = 0.0;       // sigma_max estimate
    double residual = 0.0;       // ||A*A v - lambda v||_2 / ||v||_2 at exit
    int iterations_used = 0;
    bool converged = false;      // residual <= 1e-6 within the budget
};

/// Power iteration on A*A with a deterministic seeded complex start vector
/// (mt19937_64 + Box-Muller). Exits early when the residual drops to 1e-6;
/// otherwise runs the full budget and reports converged = false
/// (NonConvergence is a flag, not an exception).
PowerIterationResult opnorm_power_iteration(const ConvolutionOperator& op, int iterations,
                                            std::uint64_t seed);

/// max_chi |f^(chi)| on the carrier's dual sample set.
double fourier_sup_norm(const GroupFunction& f, std::optional<long> dual_grid = std::nullopt);

/// ||f||_1 - ||f^||_inf. Strictly positive output certifies that the
/// convolution-operator embedding is not isometric at f; it is 0 (up to
/// grid error) for nonnegative f.
double isometry_gap(const GroupFunction& f, std::optional<long> dual_grid = std::nullopt);

} // namespace lcapego
