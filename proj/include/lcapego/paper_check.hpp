#pragma once

#include <string>
#include <vector>

#include "lcapego/config.hpp"

namespace lcapego {

/// One record of the fixed reproducibility claim suite.
struct ClaimResult {
    std::string id;
    std::string expected;    // expected value with its provenance
    double computed = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    std::string detail;
};

/// Runs the fixed claim suite with pinned parameters. Claim ids:
///   g_l1_norm, g_fourier_sup, isometry_gap_positive,
///   opnorm_eq_fourier_sup, nonneg_opnorm_eq_l1,
///   indicator_family_not_compact, plancherel, convolution_theorem,
///   sudakov_bound_dominates.
std::vector<ClaimResult> run_paper_check(const PaperCheckParams& params = {});

} // namespace lcapego
