#include "lcapego/compactness.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "lcapego/families.hpp"
#include "lcapego/transform.hpp"

namespace lcapego {

namespace {

/// Index-lattice view shared by group and dual carriers: per-axis sizes and
/// minima, wraparound flag (wrapped carriers are the compact ones), and the
/// L1 weight per point. Radii and offsets are l_inf metric balls in grid
/// steps; on wrapped axes distance is the cyclic one.
struct CarrierGeometry {
    std::vector<long> sizes;
    std::vector<long> mins;
    bool wrap = false;
    bool discrete = false;
    double weight = 1.0;
    std::size_t count = 0;
    std::string label;

    static CarrierGeometry of_group(const GroupModel& g) {
        CarrierGeometry c;
        for (int a = 0; a < g.dims(); ++a) {
            c.sizes.push_back(g.axis_size(a));
            c.mins.push_back(g.axis_min(a));
        }
        c.wrap = g.kind() == GroupKind::FiniteProduct;
        c.discrete = g.is_discrete();
        c.weight = g.haar_weight();
        c.count = g.point_count();
        c.label = g.describe();
        return c;
    }

    static CarrierGeometry of_dual(const DualModel& d) {
        CarrierGeometry c;
        switch (d.kind()) {
            case DualKind::FiniteDual:
                return of_group_as_dual(d);
            case DualKind::CircleGrid:
                c.sizes = {d.grid_size()};
                c.mins = {0};
                c.wrap = true;
                c.discrete = false;
                break;
            case DualKind::RealGridDual: {
                const auto& src = d.source();
                for (int a = 0; a < src.dims(); ++a) {
                    c.sizes.push_back(src.axis_size(a));
                    c.mins.push_back(src.axis_min(a));
                }
                c.wrap = false;
                c.discrete = false;
                break;
            }
        }
        c.weight = d.dual_haar_weight();
        c.count = d.point_count();
        c.label = d.describe();
        return c;
    }

    int dims() const { return static_cast<int>(sizes.size()); }

    /// l_inf distance from the neutral point, in grid steps.
    int radius(std::size_t flat) const {
        int r = 0;
        for (int a = dims(); a-- > 0;) {
            const long n = sizes[static_cast<std::size_t>(a)];
            const long c = static_cast<long>(flat % static_cast<std::size_t>(n)) +
                           mins[static_cast<std::size_t>(a)];
            flat /= static_cast<std::size_t>(n);
            const long d = wrap ? std::min(c, n - c) : std::labs(c);
            r = std::max(r, static_cast<int>(d));
        }
        return r;
    }

    int max_radius() const {
        long m = 0;
        for (int a = 0; a < dims(); ++a) {
            const long n = sizes[static_cast<std::size_t>(a)];
            m = std::max(m, wrap ? n / 2 : -mins[static_cast<std::size_t>(a)]);
        }
        return static_cast<int>(m);
    }

    std::optional<std::size_t> shifted(std::size_t flat, std::span<const long> offset) const {
        std::size_t out = 0;
        std::size_t mul = 1;
        // decode from the fastest axis, re-encode with the offset applied
        std::size_t rem = flat;
        for (int a = dims(); a-- > 0;) {
            const long n = sizes[static_cast<std::size_t>(a)];
            long idx = static_cast<long>(rem % static_cast<std::size_t>(n));
            rem /= static_cast<std::size_t>(n);
            idx += offset[static_cast<std::size_t>(a)];
            if (wrap) {
                idx %= n;
                if (idx < 0) idx += n;
            } else if (idx < 0 || idx >= n) {
                return std::nullopt;
            }
            out += static_cast<std::size_t>(idx) * mul;
            mul *= static_cast<std::size_t>(n);
        }
        return out;
    }

private:
    static CarrierGeometry of_group_as_dual(const DualModel& d) {
        CarrierGeometry c = of_group(d.source());
        c.wrap = true;
        c.discrete = true; // the dual of a finite group is finite discrete
        c.weight = d.dual_haar_weight();
        c.label = d.describe();
        return c;
    }
};

using ValueView = std::span<const std::complex<double>>;

/// Enumerates offset tuples with l_inf norm in (lo, hi], clamped per axis,
/// and feeds each to `fn`.
template <typename Fn>
void for_each_shell_offset(const CarrierGeometry& c, int lo, int hi, Fn&& fn) {
    const int d = c.dims();
    std::vector<long> off(static_cast<std::size_t>(d), 0);
    std::vector<long> cap(static_cast<std::size_t>(d));
    for (int a = 0; a < d; ++a) {
        const long n = c.sizes[static_cast<std::size_t>(a)];
        cap[static_cast<std::size_t>(a)] = std::min<long>(hi, c.wrap ? n / 2 : n - 1);
    }
    auto recurse = [&](auto&& self, int axis) -> void {
        if (axis == d) {
            long norm = 0;
            for (long o : off) norm = std::max(norm, std::labs(o));
            if (norm > lo && norm <= hi) fn(std::span<const long>(off));
            return;
        }
        const long k = cap[static_cast<std::size_t>(axis)];
        for (long o = -k; o <= k; ++o) {
            off[static_cast<std::size_t>(axis)] = o;
            self(self, axis + 1);
        }
    };
    recurse(recurse, 0);
}

/// max over members, offsets with norm in (lo, hi], and points x of
/// |f(x+y) - f(x)|; offsets leaving a non-wrapping carrier read 0.
double shell_modulus(const CarrierGeometry& c, const std::vector<ValueView>& members, int lo,
                     int hi, std::span<const std::size_t> points) {
    double m = 0.0;
    if (c.dims() == 1) {
        const long n = c.sizes[0];
        const long cap = std::min<long>(hi, c.wrap ? n / 2 : n - 1);
        for (long mag = std::max<long>(lo + 1, 1); mag <= cap; ++mag) {
            for (long o : {-mag, mag}) {
                for (std::size_t x : points) {
                    long xi = static_cast<long>(x) + o;
                    bool inside = true;
                    if (c.wrap) {
                        xi %= n;
                        if (xi < 0) xi += n;
                    } else if (xi < 0 || xi >= n) {
                        inside = false;
                    }
                    for (const auto& f : members) {
                        const auto fx = f[x];
                        const auto fy = inside ? f[static_cast<std::size_t>(xi)]
                                               : std::complex<double>(0.0);
                        m = std::max(m, std::abs(fy - fx));
                    }
                }
            }
        }
        return m;
    }
    for_each_shell_offset(c, lo, hi, [&](std::span<const long> off) {
        for (std::size_t x : points) {
            const auto y = c.shifted(x, off);
            for (const auto& f : members) {
                const auto fx = f[x];
                const auto fy = y ? f[*y] : std::complex<double>(0.0);
                m = std::max(m, std::abs(fy - fx));
            }
        }
    });
    return m;
}

std::vector<std::size_t> all_points(std::size_t n) {
    std::vector<std::size_t> p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = i;
    return p;
}

/// Ascending schedule {0, 1, 2, 4, ...} capped at `cap`, plus `extra`.
std::vector<int> power_schedule(int cap, int extra) {
    std::set<int> s{0};
    for (int r = 1; r <= cap; r *= 2) s.insert(r);
    if (extra >= 0 && extra <= cap) s.insert(extra);
    return {s.begin(), s.end()};
}

ModulusTable equicontinuity_table(const CarrierGeometry& c, const std::vector<ValueView>& members,
                                  int threshold_radius) {
    // Small radii are where equicontinuity lives; the table stops at 64
    // steps (or the carrier radius if smaller) with the threshold radius
    // always included.
    const int cap = std::min(c.max_radius(), 64);
    std::set<int> rset{0};
    for (int r = 1; r <= cap; r *= 2) rset.insert(r);
    if (threshold_radius >= 0 && threshold_radius <= c.max_radius())
        rset.insert(threshold_radius);
    const std::vector<int> radii(rset.begin(), rset.end());

    const auto points = all_points(c.count);
    ModulusTable t;
    double acc = 0.0;
    int prev = 0;
    for (int r : radii) {
        if (r > prev) {
            acc = std::max(acc, shell_modulus(c, members, prev, r, points));
            prev = r;
        }
        t.arg.push_back(r);
        t.value.push_back(acc);
    }
    return t;
}

/// Per-point max over members of |f|, plus the family sup-norm.
std::vector<double> pointwise_max(const std::vector<ValueView>& members, std::size_t count) {
    std::vector<double> m(count, 0.0);
    for (const auto& f : members)
        for (std::size_t i = 0; i < count; ++i) m[i] = std::max(m[i], std::abs(f[i]));
    return m;
}

/// tau(m) for every m in 0..max_radius via a suffix max over radius
/// buckets; tau is 0 once the complement of the window is empty.
std::vector<double> tail_by_radius(const CarrierGeometry& c, const std::vector<double>& point_max) {
    const int R = c.max_radius();
    std::vector<double> bucket(static_cast<std::size_t>(R) + 1, 0.0);
    for (std::size_t i = 0; i < point_max.size(); ++i) {
        auto& b = bucket[static_cast<std::size_t>(c.radius(i))];
        b = std::max(b, point_max[i]);
    }
    std::vector<double> tau(static_cast<std::size_t>(R) + 1, 0.0);
    double acc = 0.0;
    for (int m = R; m-- > 0;) {
        acc = std::max(acc, bucket[static_cast<std::size_t>(m) + 1]);
        tau[static_cast<std::size_t>(m)] = acc;
    }
    tau[static_cast<std::size_t>(R)] = 0.0;
    return tau;
}

ModulusTable equivanishing_table(const CarrierGeometry& c, const std::vector<double>& tau_all,
                                 int threshold_window) {
    ModulusTable t;
    auto windows = power_schedule(c.max_radius(), threshold_window);
    if (windows.empty() || windows.back() != c.max_radius()) windows.push_back(c.max_radius());
    for (int m : windows) {
        t.arg.push_back(m);
        t.value.push_back(tau_all[static_cast<std::size_t>(m)]);
    }
    return t;
}

std::vector<ValueView> views_of(const std::vector<GroupFunction>& fs) {
    std::vector<ValueView> v;
    v.reserve(fs.size());
    for (const auto& f : fs) v.emplace_back(f.values);
    return v;
}

std::vector<ValueView> views_of(const std::vector<DualFunction>& fs) {
    std::vector<ValueView> v;
    v.reserve(fs.size());
    for (const auto& f : fs) v.emplace_back(f.values);
    return v;
}

double member_distance(ValueView a, ValueView b, NormKind p, double weight) {
    if (p == NormKind::Linf) {
        double m = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
        return m;
    }
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += std::abs(a[i] - b[i]);
    return s * weight;
}

EpsilonNet greedy_net_impl(const std::vector<ValueView>& members, double eps, NormKind p,
                           double weight) {
    EpsilonNet net;
    for (std::size_t i = 0; i < members.size(); ++i) {
        bool covered = false;
        for (int j : net.net_indices) {
            if (member_distance(members[i], members[static_cast<std::size_t>(j)], p, weight) <
                eps) {
                covered = true;
                break;
            }
        }
        if (!covered) net.net_indices.push_back(static_cast<int>(i));
    }
    net.covering_number = static_cast<int>(net.net_indices.size());
    return net;
}

CoveringTable covering_table(const std::vector<ValueView>& members,
                             std::span<const double> eps_schedule, NormKind p, double weight) {
    CoveringTable t;
    for (double eps : eps_schedule) {
        auto net = greedy_net_impl(members, eps, p, weight);
        t.eps.push_back(eps);
        t.count.push_back(net.covering_number);
        t.net_indices.push_back(std::move(net.net_indices));
    }
    return t;
}

int effective_window(const FamilyThresholds& thr, const CarrierGeometry& c) {
    if (thr.window >= 0) return std::min(thr.window, c.max_radius());
    return c.max_radius() / 4;
}

void check_monotone(const CompactnessReport& r) {
    for (std::size_t i = 1; i < r.equicontinuity.value.size(); ++i)
        if (r.equicontinuity.value[i] + 1e-15 < r.equicontinuity.value[i - 1])
            throw std::logic_error("equicontinuity modulus must be nondecreasing");
    for (std::size_t i = 1; i < r.equivanishing.value.size(); ++i)
        if (r.equivanishing.value[i] > r.equivanishing.value[i - 1] + 1e-15)
            throw std::logic_error("equivanishing tail must be nonincreasing");
    for (std::size_t i = 1; i < r.covering.count.size(); ++i)
        if (r.covering.eps[i] < r.covering.eps[i - 1] && r.covering.count[i] < r.covering.count[i - 1])
            throw std::logic_error("covering numbers must be nonincreasing in eps");
}

/// Shared criteria evaluation once the criterion carrier, its member value
/// views, and the covering-side members are fixed.
CompactnessReport build_report(const CarrierGeometry& crit, const std::vector<ValueView>& values,
                               const std::vector<ValueView>& covering_members,
                               NormKind covering_norm, double covering_weight,
                               const FamilyThresholds& thr, bool vacuous_equicont,
                               bool trivial_tail) {
    CompactnessReport r;
    r.thresholds = thr;
    r.thresholds.window = effective_window(thr, crit);

    r.per_point_max = pointwise_max(values, crit.count);
    r.sup_bound = 0.0;
    for (double v : r.per_point_max) r.sup_bound = std::max(r.sup_bound, v);

    const int radius = std::clamp(thr.radius, 0, crit.max_radius());
    r.equicontinuity = equicontinuity_table(crit, values, radius);
    r.equicontinuity_vacuous = vacuous_equicont;

    const auto tau_all = tail_by_radius(crit, r.per_point_max);
    r.equivanishing = equivanishing_table(crit, tau_all, r.thresholds.window);
    r.equivanishing_trivial = trivial_tail;

    r.covering = covering_table(covering_members, thr.eps_schedule, covering_norm,
                                covering_weight);

    r.pass_bounded = r.sup_bound <= thr.bound;
    r.pass_equicontinuous =
        vacuous_equicont ? true : r.equicontinuity.at(radius) < thr.eps_cont;
    r.pass_equivanishing =
        trivial_tail ? true : r.equivanishing.at(r.thresholds.window) < thr.eps_tail;
    r.pass_overall = r.pass_bounded && r.pass_equicontinuous && r.pass_equivanishing;

    if (vacuous_equicont)
        r.notes.push_back("equicontinuity vacuously satisfied: " + crit.label +
                          " is discrete, radius-0 neighborhoods suffice");
    if (trivial_tail)
        r.notes.push_back("equivanishing trivially satisfied: " + crit.label +
                          " is compact, the complement of the largest window is empty");
    check_monotone(r);
    return r;
}

const GroupModel& family_carrier(const FunctionFamily& fam) {
    if (fam.members.empty()) throw InvalidSpec("family must be nonempty");
    return fam.members.front().group;
}

} // namespace

double ModulusTable::at(int a) const {
    for (std::size_t i = 0; i < arg.size(); ++i)
        if (arg[i] == a) return value[i];
    throw std::logic_error("modulus table has no entry at " + std::to_string(a));
}

FunctionFamily make_family(std::vector<GroupFunction> members,
                           std::optional<GeneratorSpec> generator) {
    if (members.empty()) throw InvalidSpec("family must be nonempty");
    std::set<std::string> names;
    for (const auto& m : members) {
        if (!(m.group == members.front().group))
            throw CarrierMismatch("family members must share one carrier");
        if (!names.insert(m.name).second)
            throw InvalidSpec("family member names must be unique ('" + m.name + "')");
    }
    return FunctionFamily{std::move(members), std::move(generator)};
}

CompactnessReport pego_check(const FunctionFamily& fam, const FamilyThresholds& thresholds,
                             std::optional<long> dual_grid) {
    const auto& g = family_carrier(fam);
    if (g.kind() == GroupKind::RealGrid)
        throw CarrierMismatch("Fourier-side criteria run on finite-product or z_window carriers");
    if (g.kind() == GroupKind::ZWindow && !dual_grid)
        throw UnconfiguredDualGrid("z_window members need a dual grid size");

    const auto dual = dual_of(g, dual_grid);
    std::vector<DualFunction> transforms;
    transforms.reserve(fam.members.size());
    for (const auto& m : fam.members) transforms.push_back(fourier(m, dual));

    const auto crit = CarrierGeometry::of_dual(dual);
    const auto time_carrier = CarrierGeometry::of_group(g);
    return build_report(crit, views_of(transforms), views_of(fam.members), NormKind::L1,
                        time_carrier.weight, thresholds,
                        /*vacuous_equicont=*/crit.discrete,
                        /*trivial_tail=*/dual.is_compact());
}

CompactnessReport aa_check(const FunctionFamily& fam, const FamilyThresholds& thresholds) {
    const auto& g = family_carrier(fam);
    const auto crit = CarrierGeometry::of_group(g);
    return build_report(crit, views_of(fam.members), views_of(fam.members), NormKind::Linf, 1.0,
                        thresholds,
                        /*vacuous_equicont=*/g.is_discrete(),
                        /*trivial_tail=*/g.is_compact());
}

std::optional<int> uniform_equicontinuity_on_compact(const FunctionFamily& fam,
                                                     std::span<const std::size_t> K,
                                                     double eps) {
    const auto& g = family_carrier(fam);
    const auto c = CarrierGeometry::of_group(g);
    for (std::size_t i : K)
        if (i >= c.count) throw InvalidSpec("K contains a point outside the carrier");

    std::vector<int> schedule;
    for (int r = 1; r <= c.max_radius(); r *= 2) schedule.push_back(r);
    std::reverse(schedule.begin(), schedule.end());

    const auto values = views_of(fam.members);
    const std::vector<std::size_t> points(K.begin(), K.end());
    for (int r : schedule) {
        if (shell_modulus(c, values, 0, r, points) < eps) return r;
    }
    return std::nullopt;
}

std::optional<GroupElement> sudakov_witness(const GroupModel& g, int radius) {
    if (g.kind() == GroupKind::FiniteProduct) return std::nullopt; // compact: nothing escapes
    if (radius < 1) return std::nullopt; // only the neutral element is available
    if (g.axis_size(0) < 3) return std::nullopt;
    std::vector<long> coords(static_cast<std::size_t>(g.dims()), 0);
    coords[0] = 1; // one grid step along the first axis
    return g.element(std::move(coords));
}

std::optional<SudakovBound> sudakov_bound(const FunctionFamily& fam,
                                          const FamilyThresholds& thresholds) {
    const auto& g = family_carrier(fam);
    const auto c = CarrierGeometry::of_group(g);

    const auto aa = aa_check(fam, thresholds);
    if (!aa.pass_equicontinuous || !aa.pass_equivanishing) return std::nullopt;

    // Uniform equicontinuity at eps = 1 over the whole carrier: every
    // translate visited by the chain below then moves f by less than 1.
    const auto everything = all_points(c.count);
    const auto radius = uniform_equicontinuity_on_compact(fam, everything, 1.0);
    if (!radius) return std::nullopt;

    const auto witness = sudakov_witness(g, *radius);
    if (!witness) return std::nullopt;

    // Tail window K with tau(K) < 1, from the exact per-point maxima.
    const auto point_max = pointwise_max(views_of(fam.members), c.count);
    const auto tau_all = tail_by_radius(c, point_max);
    int tail = -1;
    for (int m = 0; m <= c.max_radius(); ++m) {
        if (tau_all[static_cast<std::size_t>(m)] < 1.0) {
            tail = m;
            break;
        }
    }
    if (tail < 0) return std::nullopt;

    std::vector<std::size_t> K;
    for (std::size_t i = 0; i < c.count; ++i)
        if (c.radius(i) <= tail) K.push_back(i);

    // Smallest n with (n x* + K) disjoint from K; iterates eventually leave
    // the window entirely, so the loop terminates.
    std::vector<long> offset(witness->coords.begin(), witness->coords.end());
    int steps = 0;
    for (int n = 1; n <= 2 * c.max_radius() + 2; ++n) {
        bool disjoint = true;
        for (std::size_t k : K) {
            std::vector<long> total(offset.size());
            for (std::size_t a = 0; a < offset.size(); ++a) total[a] = offset[a] * n;
            const auto moved = c.shifted(k, total);
            if (moved && c.radius(*moved) <= tail) {
                disjoint = false;
                break;
            }
        }
        if (disjoint) {
            steps = n;
            break;
        }
    }
    if (steps == 0) return std::nullopt;

    SudakovBound b;
    b.bound = static_cast<double>(steps) + 2.0;
    b.tail_radius = tail;
    b.equicont_radius = *radius;
    b.witness = *witness;
    b.steps = steps;
    return b;
}

EpsilonNet greedy_epsilon_net(const FunctionFamily& fam, double eps, NormKind p) {
    if (eps <= 0.0) throw InvalidSpec("eps must be positive");
    const auto& g = family_carrier(fam);
    return greedy_net_impl(views_of(fam.members), eps, p, g.haar_weight());
}

ConsistencyReport oracle_cross_check(const FunctionFamily& fam,
                                     const FamilyThresholds& thresholds,
                                     std::span<const double> eps_schedule,
                                     std::optional<long> dual_grid) {
    if (!fam.generator)
        throw GeneratorUnavailable("prefix doubling needs a family generator");

    GeneratorSpec doubled_spec = *fam.generator;
    doubled_spec.count *= 2;
    const auto doubled = make_builtin_family(doubled_spec);

    FamilyThresholds thr = thresholds;
    thr.eps_schedule.assign(eps_schedule.begin(), eps_schedule.end());

    ConsistencyReport r;
    r.base = pego_check(fam, thr, dual_grid);
    r.doubled = pego_check(doubled, thr, dual_grid);

    const auto& g = family_carrier(fam);
    r.covering_base = covering_table(views_of(fam.members), eps_schedule, NormKind::L1,
                                     g.haar_weight());
    r.covering_doubled = covering_table(views_of(doubled.members), eps_schedule, NormKind::L1,
                                        g.haar_weight());

    if (r.base.pass_overall != r.doubled.pass_overall)
        r.inconsistencies.push_back("criteria verdict changed across prefixes");

    bool growth = false;
    for (std::size_t i = 0; i < eps_schedule.size(); ++i)
        if (r.covering_doubled.count[i] > r.covering_base.count[i]) growth = true;

    if (r.base.pass_overall && growth) {
        std::ostringstream os;
        os << "criteria pass but covering numbers grow across prefixes at eps={";
        bool first = true;
        for (std::size_t i = 0; i < eps_schedule.size(); ++i) {
            if (r.covering_doubled.count[i] > r.covering_base.count[i]) {
                os << (first ? "" : ",") << eps_schedule[i];
                first = false;
            }
        }
        os << "}";
        r.inconsistencies.push_back(os.str());
    }
    if (!r.base.pass_overall && !growth)
        r.inconsistencies.push_back(
            "criteria fail but covering numbers stabilized across prefixes");

    r.consistent = r.inconsistencies.empty();
    return r;
}

} // namespace lcapego
