#pragma once

#include <optional>

#include "lcapego/function.hpp"

namespace lcapego {

/// Fourier transform f^(chi) = sum_x f(x) conj(chi(x)) w. Exact DFT on
/// FiniteProduct (separable, radix-2 fast path on power-of-two factors);
/// direct trigonometric sum per grid point on ZWindow (O(N*M), not an FFT:
/// M and N are decoupled) and on RealGrid.
///
/// `dual_grid` selects the CircleGrid resolution and is required for
/// ZWindow carriers (InvalidSpec otherwise).
DualFunction fourier(const GroupFunction& f, std::optional<long> dual_grid = std::nullopt);
DualFunction fourier(const GroupFunction& f, const DualModel& dual);

/// Inverse transform f(x) = sum_chi F(chi) chi(x) w_dual, onto the dual's
/// source group (or an explicit target).
GroupFunction inverse_fourier(const DualFunction& F);
GroupFunction inverse_fourier(const DualFunction& F, const GroupModel& target);

/// Convolution (f*g)(x) = sum_y f(x-y) g(y) w. Cyclic on FiniteProduct;
/// zero-extended on ZWindow/RealGrid with the result reported on the same
/// window.
GroupFunction convolve(const GroupFunction& f, const GroupFunction& g);

/// Convolution plus the L1 mass of the untruncated result falling outside
/// the window, computed on a doubled window (which holds the exact support
/// of f*g for window-supported inputs). The loss is 0 on FiniteProduct.
struct ConvolutionResult {
    GroupFunction value;
    double truncation_loss = 0.0;
};
ConvolutionResult convolve_with_loss(const GroupFunction& f, const GroupFunction& g);

/// Involution f*(x) = conj(f(-x)).
GroupFunction involution(const GroupFunction& f);

/// Translation T_y f(x) = f(x-y); values shifted out of a window are
/// dropped (zero-extension semantics).
GroupFunction translate_fn(const GroupFunction& f, const GroupElement& y);

} // namespace lcapego
