#include "lcapego/transform.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>

#include "lcapego/errors.hpp"

namespace lcapego {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// e^{sign * 2 pi i t / n} for t = 0..n-1. Indexing the table with exact
// integer products mod n keeps every twiddle accurate to one ulp; no phase
// accumulation.
std::vector<std::complex<double>> twiddle_table(long n, int sign) {
    std::vector<std::complex<double>> w(static_cast<std::size_t>(n));
    for (long t = 0; t < n; ++t)
        w[static_cast<std::size_t>(t)] =
            std::polar(1.0, sign * kTwoPi * static_cast<double>(t) / static_cast<double>(n));
    return w;
}

long mod_reduce(long v, long n) {
    long r = v % n;
    return r < 0 ? r + n : r;
}

// In-place radix-2 Cooley-Tukey on a gathered line (n a power of two),
// unnormalized.
void fft_pow2(std::vector<std::complex<double>>& a, int sign) {
    const std::size_t n = a.size();
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = sign * kTwoPi / static_cast<double>(len);
        const std::complex<double> wl = std::polar(1.0, ang);
        for (std::size_t i = 0; i < n; i += len) {
            std::complex<double> w = 1.0;
            for (std::size_t k = 0; k < len / 2; ++k) {
                const auto u = a[i + k];
                const auto v = a[i + k + len / 2] * w;
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
                w *= wl;
            }
        }
    }
}

// One separable DFT pass along axis `axis`. `offset` shifts both the input
// and output indices to coordinates (0 for cyclic axes, -(P-1)/2 for
// centred grids). sign = -1 forward, +1 inverse; unnormalized.
void dft_axis(std::vector<std::complex<double>>& data, long n, std::size_t stride,
              long offset, int sign) {
    const auto un = static_cast<std::size_t>(n);
    const std::size_t total = data.size();
    const std::size_t block = un * stride;
    std::vector<std::complex<double>> line(un), out(un);

    const bool pow2 = offset == 0 && std::has_single_bit(static_cast<unsigned long>(n));
    const auto w = pow2 ? std::vector<std::complex<double>>{} : twiddle_table(n, sign);

    for (std::size_t base = 0; base < total; base += block) {
        for (std::size_t inner = 0; inner < stride; ++inner) {
            for (std::size_t j = 0; j < un; ++j) line[j] = data[base + inner + j * stride];
            if (pow2) {
                fft_pow2(line, sign);
                for (std::size_t j = 0; j < un; ++j) data[base + inner + j * stride] = line[j];
            } else {
                for (std::size_t k = 0; k < un; ++k) {
                    std::complex<double> acc = 0.0;
                    const long kc = static_cast<long>(k) + offset;
                    for (std::size_t x = 0; x < un; ++x) {
                        const long xc = static_cast<long>(x) + offset;
                        acc += line[x] * w[static_cast<std::size_t>(mod_reduce(kc * xc, n))];
                    }
                    out[k] = acc;
                }
                for (std::size_t k = 0; k < un; ++k) data[base + inner + k * stride] = out[k];
            }
        }
    }
}

// Separable transform over all axes of a FiniteProduct or RealGrid layout.
void dft_all_axes(std::vector<std::complex<double>>& data, const GroupModel& g, int sign) {
    std::size_t stride = 1;
    for (int a = g.dims(); a-- > 0;) {
        dft_axis(data, g.axis_size(a), stride, g.axis_min(a), sign);
        stride *= static_cast<std::size_t>(g.axis_size(a));
    }
}

void require_same_group(const GroupFunction& f, const GroupFunction& g, const char* op) {
    if (!(f.group == g.group))
        throw GroupMismatch(std::string(op) + ": functions live on different groups");
}

} // namespace

DualFunction fourier(const GroupFunction& f, const DualModel& dual) {
    if (!(dual.source() == f.group))
        throw GroupMismatch("fourier: dual model was built for a different group");
    const auto& g = f.group;
    std::vector<std::complex<double>> out;

    switch (g.kind()) {
        case GroupKind::FiniteProduct: {
            out = f.values;
            dft_all_axes(out, g, -1);
            break;
        }
        case GroupKind::ZWindow: {
            const long M = dual.grid_size();
            const auto w = twiddle_table(M, -1);
            out.assign(dual.point_count(), 0.0);
            for (std::size_t i = 0; i < f.values.size(); ++i) {
                const auto v = f.values[i];
                if (v == 0.0) continue;
                const long k = g.point(i).coords[0];
                for (long j = 0; j < M; ++j)
                    out[static_cast<std::size_t>(j)] +=
                        v * w[static_cast<std::size_t>(mod_reduce(k * j, M))];
            }
            break;
        }
        case GroupKind::RealGrid: {
            out = f.values;
            dft_all_axes(out, g, -1);
            const double scale = g.haar_weight();
            for (auto& v : out) v *= scale;
            break;
        }
    }
    return DualFunction{dual, std::move(out), f.name.empty() ? "" : f.name + "_hat"};
}

DualFunction fourier(const GroupFunction& f, std::optional<long> dual_grid) {
    return fourier(f, dual_of(f.group, dual_grid));
}

GroupFunction inverse_fourier(const DualFunction& F, const GroupModel& target) {
    const auto& d = F.dual;
    std::vector<std::complex<double>> out;

    switch (d.kind()) {
        case DualKind::FiniteDual: {
            if (!(target == d.source()))
                throw GroupMismatch("inverse_fourier: target differs from the dual's source");
            out = F.values;
            dft_all_axes(out, target, +1);
            const double scale = d.dual_haar_weight();
            for (auto& v : out) v *= scale;
            break;
        }
        case DualKind::CircleGrid: {
            if (target.kind() != GroupKind::ZWindow)
                throw GroupMismatch("inverse_fourier: a CircleGrid maps back to a z_window");
            const long M = d.grid_size();
            const auto w = twiddle_table(M, +1);
            out.assign(target.point_count(), 0.0);
            for (std::size_t i = 0; i < out.size(); ++i) {
                const long k = target.point(i).coords[0];
                std::complex<double> acc = 0.0;
                for (long j = 0; j < M; ++j)
                    acc += F.values[static_cast<std::size_t>(j)] *
                           w[static_cast<std::size_t>(mod_reduce(k * j, M))];
                out[i] = acc * d.dual_haar_weight();
            }
            break;
        }
        case DualKind::RealGridDual: {
            if (!(target == d.source()))
                throw GroupMismatch("inverse_fourier: target differs from the dual's source");
            out = F.values;
            dft_all_axes(out, target, +1);
            const double scale = d.dual_haar_weight();
            for (auto& v : out) v *= scale;
            break;
        }
    }
    std::string name = F.name;
    if (name.size() > 4 && name.ends_with("_hat")) name.resize(name.size() - 4);
    return GroupFunction{target, std::move(out), std::move(name)};
}

GroupFunction inverse_fourier(const DualFunction& F) {
    return inverse_fourier(F, F.dual.source());
}

GroupFunction convolve(const GroupFunction& f, const GroupFunction& g) {
    require_same_group(f, g, "convolve");
    const auto& G = f.group;
    const std::size_t n = G.point_count();
    std::vector<std::complex<double>> out(n, 0.0);
    const double w = G.haar_weight();

    // (f*g)(x) = sum_s f(s) g(x-s) w, accumulated as out[s+y] += f(s) g(y) w
    // over the support of f. Exits of a window are dropped (zero-extension).
    if (G.dims() == 1) {
        // Index-only path: x_flat = s_flat + y_flat + axis_min (mod n when
        // cyclic). Keeps power iteration allocation-free.
        const long sz = G.axis_size(0);
        const bool wrap = G.kind() == GroupKind::FiniteProduct;
        const long shift = G.axis_min(0);
        for (long si = 0; si < sz; ++si) {
            const auto fs = f.values[static_cast<std::size_t>(si)];
            if (fs == 0.0) continue;
            for (long yi = 0; yi < sz; ++yi) {
                const auto gy = g.values[static_cast<std::size_t>(yi)];
                if (gy == 0.0) continue;
                long xi = si + yi + shift;
                if (wrap) {
                    if (xi >= sz) xi -= sz;
                } else if (xi < 0 || xi >= sz) {
                    continue;
                }
                out[static_cast<std::size_t>(xi)] += fs * gy * w;
            }
        }
        std::string name1;
        if (!f.name.empty() && !g.name.empty()) name1 = f.name + "*" + g.name;
        return GroupFunction{G, std::move(out), std::move(name1)};
    }

    for (std::size_t si = 0; si < n; ++si) {
        const auto fs = f.values[si];
        if (fs == 0.0) continue;
        const auto s = G.point(si);
        for (std::size_t yi = 0; yi < n; ++yi) {
            const auto gy = g.values[yi];
            if (gy == 0.0) continue;
            const auto x = G.add(s, G.point(yi));
            if (!x) continue;
            out[G.flat_index(*x)] += fs * gy * w;
        }
    }
    std::string name;
    if (!f.name.empty() && !g.name.empty()) name = f.name + "*" + g.name;
    return GroupFunction{G, std::move(out), std::move(name)};
}

ConvolutionResult convolve_with_loss(const GroupFunction& f, const GroupFunction& g) {
    require_same_group(f, g, "convolve");
    const auto& G = f.group;
    if (G.kind() == GroupKind::FiniteProduct)
        return ConvolutionResult{convolve(f, g), 0.0};

    // The exact support of f*g fits in the doubled window when both inputs
    // are window-supported; convolving there exposes the escaped L1 mass.
    GroupModel big = G.kind() == GroupKind::ZWindow
                         ? GroupModel::z_window(2 * G.half_width())
                         : GroupModel::real_grid(
                               G.dims(), G.cell_step() * static_cast<double>(2 * G.points_per_axis() - 1) / 2.0,
                               2 * G.points_per_axis() - 1);

    auto embed = [&](const GroupFunction& h) {
        std::vector<std::complex<double>> values(big.point_count(), 0.0);
        for (std::size_t i = 0; i < h.values.size(); ++i) {
            if (h.values[i] == 0.0) continue;
            values[big.flat_index(big.element(G.point(i).coords))] = h.values[i];
        }
        return GroupFunction{big, std::move(values), h.name};
    };

    const auto full = convolve(embed(f), embed(g));

    std::vector<std::complex<double>> restricted(G.point_count(), 0.0);
    double loss = 0.0;
    for (std::size_t i = 0; i < full.values.size(); ++i) {
        const auto p = big.point(i);
        if (auto inside = G.reduce(p.coords))
            restricted[G.flat_index(*inside)] = full.values[i];
        else
            loss += std::abs(full.values[i]) * G.haar_weight();
    }
    std::string name;
    if (!f.name.empty() && !g.name.empty()) name = f.name + "*" + g.name;
    return ConvolutionResult{GroupFunction{G, std::move(restricted), std::move(name)}, loss};
}

GroupFunction involution(const GroupFunction& f) {
    const auto& G = f.group;
    std::vector<std::complex<double>> out(f.values.size());
    for (std::size_t i = 0; i < f.values.size(); ++i)
        out[G.flat_index(G.neg(G.point(i)))] = std::conj(f.values[i]);
    std::string name = f.name.empty() ? "" : f.name + "_star";
    return GroupFunction{G, std::move(out), std::move(name)};
}

GroupFunction translate_fn(const GroupFunction& f, const GroupElement& y) {
    const auto& G = f.group;
    std::vector<std::complex<double>> out(f.values.size(), 0.0);
    for (std::size_t i = 0; i < out.size(); ++i) {
        const auto src = G.sub(G.point(i), y);
        if (src) out[i] = f.values[G.flat_index(*src)];
    }
    return GroupFunction{G, std::move(out), f.name};
}

} // namespace lcapego
