#pragma once

#include "lcapego/compactness.hpp"

namespace lcapego {

/// Builtin family generators. All are prefix-stable: member i depends only
/// on (spec, i), so doubling the count extends the family without changing
/// existing members.
///
///  - indicator_shifts: single-point indicators 1_{n}, n = 1..count, on
///    ZWindow (default half_width 64). The canonical escaping-support
///    family: pointwise bounded, equicontinuity vacuous on the discrete
///    carrier, not equivanishing, and no small net exists.
///  - modulations: shifts T_n g of the kernel g = (1,1,-1), n = 0..count-1,
///    on ZWindow (default half_width 128). Under the transform these are
///    the modulations exp(-2 pi i n a) * g^(a): constant sup-norm, but the
///    equicontinuity modulus on the dual grid grows with n.
///  - span_random: random elements of a fixed 3-dimensional span on ZWindow
///    (default half_width 32). The basis functions have disjoint supports
///    near 0 and unit L1 norm; coefficients are drawn uniformly from the
///    cube vertices (+-1,+-1,+-1)/sqrt(3), scaled by 1/2. A totally bounded
///    family: covering numbers saturate once every vertex has appeared.
///  - gaussian_bumps: samples of exp(-(x-c_i)^2), c_i = i/10, on a RealGrid
///    (default d=1, half_extent 8, 257 points per axis).
FunctionFamily make_builtin_family(const GeneratorSpec& spec);

/// The fixed kernel g(0)=g(1)=1, g(2)=-1 on a ZWindow of the given
/// half-width (>= 2). ||g||_1 = 3 while sup |g^| = sqrt(5): the standard
/// witness that the convolution embedding is not isometric.
GroupFunction counterexample_kernel(long half_width);

} // namespace lcapego
