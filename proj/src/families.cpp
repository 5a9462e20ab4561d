#include "lcapego/families.hpp"

#include <cmath>

#include "lcapego/rng.hpp"
#include "lcapego/transform.hpp"

namespace lcapego {

namespace {

FunctionFamily indicator_shifts(const GeneratorSpec& spec) {
    const long N = spec.half_width.value_or(64);
    const auto g = GroupModel::z_window(N);
    if (spec.count > N)
        throw InvalidSpec("indicator_shifts: count exceeds the window half-width");
    std::vector<GroupFunction> members;
    members.reserve(static_cast<std::size_t>(spec.count));
    for (int i = 1; i <= spec.count; ++i) {
        std::vector<std::complex<double>> values(g.point_count(), 0.0);
        values[g.flat_index(g.element({i}))] = 1.0;
        members.push_back(GroupFunction{g, std::move(values), "indicator_" + std::to_string(i)});
    }
    return make_family(std::move(members), spec);
}

FunctionFamily modulations(const GeneratorSpec& spec) {
    const long N = spec.half_width.value_or(128);
    if (spec.count + 1 > N)
        throw InvalidSpec("modulations: count exceeds the window half-width");
    const auto base = counterexample_kernel(N);
    std::vector<GroupFunction> members;
    members.reserve(static_cast<std::size_t>(spec.count));
    for (int i = 0; i < spec.count; ++i) {
        auto shifted = translate_fn(base, base.group.element({i}));
        shifted.name = "shift_" + std::to_string(i);
        members.push_back(std::move(shifted));
    }
    return make_family(std::move(members), spec);
}

FunctionFamily span_random(const GeneratorSpec& spec) {
    const long N = spec.half_width.value_or(32);
    const int dim = spec.dim.value_or(3);
    if (dim != 3) throw InvalidSpec("span_random: only dim 3 is built in");
    if (N < 4) throw InvalidSpec("span_random: half_width must be at least 4");
    const auto g = GroupModel::z_window(N);

    // Fixed basis with disjoint supports near 0 and unit L1 norm, so the
    // span is l1-isometric to the coefficient space. Coefficients come from
    // the cube vertices (+-1,+-1,+-1)/sqrt(3) scaled by 1/2: a bounded set,
    // fully explored after a modest number of draws, so covering numbers of
    // growing prefixes saturate.
    const long supports[3][2] = {{-2, -1}, {0, 1}, {2, 3}};
    const double scale = 0.5;
    const double unit = 1.0 / std::sqrt(3.0);

    std::vector<GroupFunction> members;
    members.reserve(static_cast<std::size_t>(spec.count));
    for (int i = 0; i < spec.count; ++i) {
        auto gen = member_stream(spec.seed, static_cast<std::uint64_t>(i));
        const auto vertex = uniform_index(gen, 8);
        std::vector<std::complex<double>> values(g.point_count(), 0.0);
        for (int b = 0; b < 3; ++b) {
            const double c = ((vertex >> b) & 1) ? unit : -unit;
            for (long k : supports[b])
                values[g.flat_index(g.element({k}))] = scale * c * 0.5;
        }
        members.push_back(GroupFunction{g, std::move(values), "span_" + std::to_string(i)});
    }
    return make_family(std::move(members), spec);
}

FunctionFamily gaussian_bumps(const GeneratorSpec& spec) {
    const double L = spec.half_extent.value_or(8.0);
    const long P = spec.points_per_axis.value_or(257);
    const auto g = GroupModel::real_grid(1, L, P);
    std::vector<GroupFunction> members;
    members.reserve(static_cast<std::size_t>(spec.count));
    for (int i = 0; i < spec.count; ++i) {
        const double c = 0.1 * static_cast<double>(i);
        if (c > L / 2.0)
            throw InvalidSpec("gaussian_bumps: centre escapes the grid interior");
        std::vector<std::complex<double>> values(g.point_count());
        for (std::size_t p = 0; p < g.point_count(); ++p) {
            const double x = static_cast<double>(g.point(p).coords[0]) * g.cell_step();
            values[p] = std::exp(-(x - c) * (x - c));
        }
        members.push_back(GroupFunction{g, std::move(values), "gaussian_" + std::to_string(i)});
    }
    return make_family(std::move(members), spec);
}

} // namespace

GroupFunction counterexample_kernel(long half_width) {
    if (half_width < 2) throw InvalidSpec("the kernel (1,1,-1) needs half_width >= 2");
    const auto g = GroupModel::z_window(half_width);
    std::vector<std::complex<double>> values(g.point_count(), 0.0);
    values[g.flat_index(g.element({0}))] = 1.0;
    values[g.flat_index(g.element({1}))] = 1.0;
    values[g.flat_index(g.element({2}))] = -1.0;
    return GroupFunction{g, std::move(values), "g"};
}

FunctionFamily make_builtin_family(const GeneratorSpec& spec) {
    if (spec.count < 1) throw InvalidSpec("family count must be positive");
    if (spec.tag == "indicator_shifts") return indicator_shifts(spec);
    if (spec.tag == "modulations") return modulations(spec);
    if (spec.tag == "span_random") return span_random(spec);
    if (spec.tag == "gaussian_bumps") return gaussian_bumps(spec);
    throw InvalidSpec("unknown builtin family tag '" + spec.tag + "'");
}

} // namespace lcapego
