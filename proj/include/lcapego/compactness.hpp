#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lcapego/function.hpp"

namespace lcapego {

/// Metadata describing the parametrized family a finite prefix samples.
/// `tag` names a builtin generator (indicator_shifts, modulations,
/// span_random, gaussian_bumps); the remaining fields are its parameters.
/// Member i depends only on (tag, params, seed, i), never on `count`, so a
/// family of count k is always a prefix of the family of count 2k.
struct GeneratorSpec {
    std::string tag;
    int count = 0;
    std::uint64_t seed = 42;
    std::optional<long> half_width;       // ZWindow carriers
    std::optional<int> dim;               // span_random
    std::optional<double> half_extent;    // gaussian_bumps
    std::optional<long> points_per_axis;  // gaussian_bumps
};

/// Ordered finite collection of GroupFunctions on one carrier, with
/// optional generator metadata. Member names are unique.
struct FunctionFamily {
    std::vector<GroupFunction> members;
    std::optional<GeneratorSpec> generator;
};

/// Validates the family invariants (nonempty, single carrier, unique
/// names). Throws CarrierMismatch / InvalidSpec.
FunctionFamily make_family(std::vector<GroupFunction> members,
                           std::optional<GeneratorSpec> generator = std::nullopt);

/// Pass/fail thresholds for the criteria checks. Radii and windows are
/// measured in grid steps (metric balls under the l_inf index distance;
/// wraparound distance on compact carriers). window < 0 selects the
/// default max_radius/4.
struct FamilyThresholds {
    double bound = 1e3;      // boundedness threshold B
    int radius = 1;          // equicontinuity radius (grid steps)
    double eps_cont = 1e-2;
    int window = -1;         // equivanishing window (grid steps)
    double eps_tail = 1e-2;
    std::vector<double> eps_schedule = {2.0, 1.0, 0.5};
};

/// Table of a modulus over a radius/window schedule.
struct ModulusTable {
    std::vector<int> arg;
    std::vector<double> value;

    double at(int a) const;   // value at the scheduled argument a (must exist)
};

struct CoveringTable {
    std::vector<double> eps;
    std::vector<int> count;
    std::vector<std::vector<int>> net_indices;
};

/// Computed moduli, covering numbers, and per-criterion verdicts for one
/// family. `equicontinuity` is the uniform modulus
///   omega(r) = max_{f, x, |y|<=r} |f(x+y) - f(x)|
/// (offsets leaving a non-wrapping carrier read 0) and `equivanishing` is
///   tau(m)  = max_f sup_{|x|>m} |f(x)|,
/// both on the criterion's carrier (dual carrier for the Fourier-side
/// check, the family's own carrier for the C0-side check). omega is
/// nondecreasing, tau nonincreasing, N(eps) nonincreasing by construction.
struct CompactnessReport {
    double sup_bound = 0.0;                // max over members of sup-norm
    std::vector<double> per_point_max;     // per-point max over members

    ModulusTable equicontinuity;
    bool equicontinuity_vacuous = false;   // discrete carrier: radius-0 neighborhoods

    ModulusTable equivanishing;
    bool equivanishing_trivial = false;    // compact carrier: complement of the
                                           // largest window is empty

    CoveringTable covering;

    bool pass_bounded = false;
    bool pass_equicontinuous = false;
    bool pass_equivanishing = false;
    bool pass_overall = false;

    std::vector<std::string> notes;
    FamilyThresholds thresholds;
};

/// Fourier-side criteria: transforms every member, then evaluates
///  (1) boundedness of the transform family,
///  (2) equicontinuity on the dual carrier,
///  (3) equivanishing on the dual carrier
/// at the given thresholds. On compact dual carriers (FiniteDual,
/// CircleGrid) criterion 3 is reported trivially satisfied; on the discrete
/// FiniteDual carrier criterion 2 is vacuous. Covering numbers are greedy
/// L1 nets of the time-domain members at the threshold eps schedule.
///
/// Members must live on FiniteProduct or ZWindow; `dual_grid` is required
/// for ZWindow (UnconfiguredDualGrid otherwise).
CompactnessReport pego_check(const FunctionFamily& fam, const FamilyThresholds& thresholds,
                             std::optional<long> dual_grid = std::nullopt);

/// C0-side criteria on the family's own carrier: pointwise boundedness,
/// equicontinuity (vacuous on discrete carriers, where one may always pick
/// the singleton neighborhood), equivanishing. Covering numbers are greedy
/// sup-norm nets of the members.
CompactnessReport aa_check(const FunctionFamily& fam, const FamilyThresholds& thresholds);

/// Largest radius r from the descending schedule {.., 4, 2, 1} of
/// power-of-two grid steps such that
///   max_{f, |y|<=r, x in K} |f(x+y) - f(x)| < eps;
/// nullopt (NoRadius) if even radius 1 fails. K holds flat point indices.
std::optional<int> uniform_equicontinuity_on_compact(const FunctionFamily& fam,
                                                     std::span<const std::size_t> K,
                                                     double eps);

/// An element x* with |x*| <= r (grid steps) whose iterates n*x* escape
/// every centred window: one grid step along the first axis on RealGrid /
/// ZWindow when r >= 1. None on FiniteProduct (compact group: nothing
/// escapes) and when r < 1 or the carrier has no nonzero point.
std::optional<GroupElement> sudakov_witness(const GroupModel& g, int radius);

struct SudakovBound {
    double bound = 0.0;        // the explicit bound n + 2
    int tail_radius = 0;       // window K with tau(K) < 1
    int equicont_radius = 0;   // radius with uniform modulus < 1
    GroupElement witness;
    int steps = 0;             // smallest n with (n*x* + K) disjoint from K
};

/// Constructive replay of the boundedness-from-equicontinuity+equivanishing
/// argument: requires the family to pass criteria 2 and 3 at the given
/// thresholds and a witness to exist; finds the tail window K with
/// tau(K) < 1, an equicontinuity radius at eps = 1, the witness, and the
/// smallest n with (n*x* + K) disjoint from K; returns the bound n + 2,
/// which dominates the family's sup-norm. nullopt = NotApplicable.
std::optional<SudakovBound> sudakov_bound(const FunctionFamily& fam,
                                          const FamilyThresholds& thresholds);

struct EpsilonNet {
    std::vector<int> net_indices;
    int covering_number = 0;
};

/// Deterministic greedy net: scan members in index order, add a member iff
/// its distance to every current net member is >= eps. Every member ends
/// within eps of some net member; net members are pairwise >= eps apart.
EpsilonNet greedy_epsilon_net(const FunctionFamily& fam, double eps, NormKind p);

/// Cross-validation of the Fourier-side verdict against the eps-net
/// total-boundedness oracle, run on the family prefix and on the doubled
/// prefix regenerated from its generator metadata. A failing verdict must
/// co-occur with covering-number growth across prefixes, a passing verdict
/// with stabilization; disagreements are listed, never reconciled.
struct ConsistencyReport {
    CompactnessReport base;
    CompactnessReport doubled;
    CoveringTable covering_base;      // L1 nets at the eps schedule
    CoveringTable covering_doubled;
    bool consistent = false;
    std::vector<std::string> inconsistencies;
};

/// Throws GeneratorUnavailable when `fam` carries no generator metadata.
ConsistencyReport oracle_cross_check(const FunctionFamily& fam,
                                     const FamilyThresholds& thresholds,
                                     std::span<const double> eps_schedule,
                                     std::optional<long> dual_grid = std::nullopt);

} // namespace lcapego
