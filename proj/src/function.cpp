#include "lcapego/function.hpp"

#include <cmath>

#include "lcapego/errors.hpp"

namespace lcapego {

namespace {

void check_values(std::size_t expected, const std::vector<std::complex<double>>& values,
                  const std::string& what) {
    if (values.size() != expected)
        throw InvalidSpec(what + ": values length must equal the carrier point count");
    for (const auto& v : values)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw InvalidSpec(what + ": values must be finite");
}

template <typename F>
double weighted_norm(const F& f, double weight, NormKind p) {
    switch (p) {
        case NormKind::L1: {
            double s = 0.0;
            for (const auto& v : f.values) s += std::abs(v);
            return s * weight;
        }
        case NormKind::L2: {
            double s = 0.0;
            for (const auto& v : f.values) s += std::norm(v);
            return std::sqrt(s * weight);
        }
        case NormKind::Linf: {
            double m = 0.0;
            for (const auto& v : f.values) m = std::max(m, std::abs(v));
            return m;
        }
    }
    return 0.0;
}

} // namespace

GroupFunction make_function(GroupModel group, std::vector<std::complex<double>> values,
                            std::string name) {
    check_values(group.point_count(), values, "function '" + name + "'");
    return GroupFunction{std::move(group), std::move(values), std::move(name)};
}

DualFunction make_dual_function(DualModel dual, std::vector<std::complex<double>> values,
                                std::string name) {
    check_values(dual.point_count(), values, "dual function '" + name + "'");
    return DualFunction{std::move(dual), std::move(values), std::move(name)};
}

GroupFunction delta(const GroupModel& g, std::string name) {
    std::vector<std::complex<double>> values(g.point_count(), 0.0);
    values[g.flat_index(g.neutral())] = 1.0;
    return GroupFunction{g, std::move(values), std::move(name)};
}

double norm(const GroupFunction& f, NormKind p) {
    return weighted_norm(f, f.group.haar_weight(), p);
}

double norm(const DualFunction& f, NormKind p) {
    return weighted_norm(f, f.dual.dual_haar_weight(), p);
}

} // namespace lcapego
