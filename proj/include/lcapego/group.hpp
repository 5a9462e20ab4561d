#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lcapego/errors.hpp"

namespace lcapego {

enum class GroupKind { FiniteProduct, ZWindow, RealGrid };
enum class DualKind { FiniteDual, CircleGrid, RealGridDual };

/// A point of a group model, stored as one integer coordinate per axis.
/// FiniteProduct coordinates are canonical representatives in [0, n_i);
/// ZWindow and RealGrid coordinates are signed indices centred at 0
/// (RealGrid physical position = index * cell_step).
struct GroupElement {
    std::vector<long> coords;

    bool operator==(const GroupElement&) const = default;
};

/// Desk-scale model of a locally compact abelian group with its Haar
/// weights:
///  - FiniteProduct(n_1..n_d): the finite group Z_{n_1} x ... x Z_{n_d},
///    counting measure (weight 1 per point);
///  - ZWindow(N): the integers truncated to [-N, N], counting measure;
///    functions are extended by zero outside the window and translations
///    that exit the window read 0;
///  - RealGrid(d, L, P): a uniform cell-centred grid on [-L, L]^d with an
///    odd number P of points per axis, weight (2L/P)^d per point. Addition
///    is truncated (non-periodic): this models R^d, never a torus.
///
/// Instances are immutable values; all operations are pure.
class GroupModel {
public:
    static GroupModel finite_product(std::vector<long> moduli);
    static GroupModel z_window(long half_width);
    static GroupModel real_grid(int dims, double half_extent, long points_per_axis);

    GroupKind kind() const noexcept { return kind_; }
    std::size_t point_count() const noexcept { return point_count_; }
    double haar_weight() const noexcept { return haar_weight_; }
    int dims() const noexcept { return static_cast<int>(axis_size_.size()); }

    const std::vector<long>& moduli() const { return moduli_; }
    long half_width() const { return half_width_; }
    double half_extent() const { return half_extent_; }
    long points_per_axis() const { return points_per_axis_; }

    /// Number of points along axis `a` and the smallest coordinate on it.
    long axis_size(int a) const { return axis_size_[static_cast<std::size_t>(a)]; }
    long axis_min(int a) const { return axis_min_[static_cast<std::size_t>(a)]; }

    /// Physical step per index unit (1 for FiniteProduct/ZWindow, 2L/P for
    /// RealGrid).
    double cell_step() const noexcept { return cell_step_; }

    bool is_compact() const noexcept { return kind_ == GroupKind::FiniteProduct; }
    bool is_discrete() const noexcept { return kind_ != GroupKind::RealGrid; }

    /// Canonicalizes raw coordinates: reduces mod n_i on FiniteProduct,
    /// returns nullopt when a Window/Grid coordinate falls outside.
    std::optional<GroupElement> reduce(std::span<const long> coords) const;

    /// Validated element constructor; throws InvalidSpec when `coords` does
    /// not name a point of this model.
    GroupElement element(std::vector<long> coords) const;

    GroupElement neutral() const;

    std::size_t flat_index(const GroupElement& x) const;
    GroupElement point(std::size_t flat) const;

    /// x + y and x - y under the model's semantics. A nullopt marks a
    /// window/grid exit; callers treat exited points as carrying value 0.
    std::optional<GroupElement> add(const GroupElement& x, const GroupElement& y) const;
    std::optional<GroupElement> sub(const GroupElement& x, const GroupElement& y) const;

    /// -x; always valid (windows and grids are symmetric about 0).
    GroupElement neg(const GroupElement& x) const;

    bool operator==(const GroupModel& other) const;

    std::string describe() const;

    /// Default state is the empty placeholder used inside containers; only
    /// the factory methods produce valid models.
    GroupModel() = default;

private:
    GroupKind kind_ = GroupKind::FiniteProduct;
    std::vector<long> moduli_;      // FiniteProduct
    long half_width_ = 0;           // ZWindow
    double half_extent_ = 0.0;      // RealGrid
    long points_per_axis_ = 0;      // RealGrid
    double cell_step_ = 1.0;

    std::vector<long> axis_size_;
    std::vector<long> axis_min_;
    std::size_t point_count_ = 0;
    double haar_weight_ = 1.0;
};

/// Sample set for the dual group, with normalized Haar weights on compact
/// duals:
///  - FiniteDual: index-matched dual of a FiniteProduct (same moduli,
///    weight 1/|G|);
///  - CircleGrid(M): the dual of Z sampled at alpha_j = j/M on [0,1),
///    weight 1/M (left-endpoint uniform grid, no trapezoid correction);
///  - RealGridDual: mirror of the source RealGrid, one frequency sample
///    per reciprocal cell, weight (1/(2L))^d.
///
/// Every DualModel remembers its source group so inverse transforms can
/// recover the target carrier.
class DualModel {
public:
    DualKind kind() const noexcept { return kind_; }
    std::size_t point_count() const noexcept { return point_count_; }
    double dual_haar_weight() const noexcept { return dual_weight_; }
    const GroupModel& source() const { return source_; }
    long grid_size() const { return grid_size_; }

    /// alpha_j = j/M for a CircleGrid point.
    double alpha(std::size_t j) const;

    /// Character evaluation chi_k(x): unit-modulus, exactly multiplicative
    /// up to floating precision.
    std::complex<double> character(std::size_t dual_flat, const GroupElement& x) const;

    /// Signed/canonical index tuple of a dual point (single j for
    /// CircleGrid).
    std::vector<long> dual_point(std::size_t flat) const;

    bool is_compact() const noexcept { return kind_ != DualKind::RealGridDual; }
    bool is_discrete() const noexcept { return kind_ == DualKind::FiniteDual; }

    bool operator==(const DualModel& other) const;

    std::string describe() const;

    friend DualModel dual_of(const GroupModel& g, std::optional<long> grid_size);

    DualModel() = default;

private:
    DualKind kind_ = DualKind::FiniteDual;
    GroupModel source_;
    long grid_size_ = 0;            // CircleGrid M
    std::size_t point_count_ = 0;
    double dual_weight_ = 1.0;
};

/// Builds a GroupModel from validated parameters. Throws InvalidSpec on
/// degenerate input or when the point count exceeds max_points().
GroupModel make_group(const GroupModel& spec);

/// Dual sample set of `g`. grid_size selects the CircleGrid resolution and
/// is required exactly when g is a ZWindow; it is ignored otherwise.
DualModel dual_of(const GroupModel& g, std::optional<long> grid_size = std::nullopt);

/// Translation x - y (nullopt on window exit).
inline std::optional<GroupElement> translate(const GroupModel& g, const GroupElement& x,
                                             const GroupElement& y) {
    return g.sub(x, y);
}

/// Quadrature realization of the Haar integral on the dual: sum of
/// F(chi) * dual_haar_weight over all dual points.
std::complex<double> dual_integrate(const DualModel& d,
                                    std::span<const std::complex<double>> values);

} // namespace lcapego
