#pragma once

#include <cstdint>
#include <cstdlib>

namespace lcapego {

/// Tolerances shared by tests and runtime checks. Exact-path bounds apply to
/// identities that hold in exact arithmetic (finite groups, direct sums);
/// grid-path bounds absorb the O(1/M) error of sampled dual grids.
struct Tolerances {
    double exact_path = 1e-10;
    double grid_path = 1e-6;
};

/// Parameters pinned for the reproducibility claim suite (`paper-check`).
/// The CLI and the acceptance tests both read these, so they agree by
/// construction.
struct PaperCheckParams {
    int half_width = 512;        // ZWindow half-width N
    int dual_grid = 4096;        // CircleGrid size M
    int iterations = 500;        // power-iteration budget
    std::uint64_t seed = 42;
};

/// Point-count cap for group construction. Overridable through the
/// LCA_PEGO_MAX_POINTS environment variable.
inline std::size_t max_points() {
    if (const char* env = std::getenv("LCA_PEGO_MAX_POINTS")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && v > 0) return static_cast<std::size_t>(v);
    }
    return std::size_t{1} << 22;
}

} // namespace lcapego
