#pragma once

#include <complex>
#include <string>
#include <vector>

#include "lcapego/group.hpp"

namespace lcapego {

/// Complex-valued function on a GroupModel's points, indexed by flat point
/// index. Carrier for L1/L2/C0 elements.
struct GroupFunction {
    GroupModel group;
    std::vector<std::complex<double>> values;
    std::string name;
};

/// Complex-valued function on a DualModel's points.
struct DualFunction {
    DualModel dual;
    std::vector<std::complex<double>> values;
    std::string name;
};

/// Validated constructors: length must match the carrier's point count and
/// every value must be finite.
GroupFunction make_function(GroupModel group, std::vector<std::complex<double>> values,
                            std::string name = {});
DualFunction make_dual_function(DualModel dual, std::vector<std::complex<double>> values,
                                std::string name = {});

/// Point mass at the neutral element.
GroupFunction delta(const GroupModel& g, std::string name = "delta_0");

enum class NormKind { L1, L2, Linf };

/// Haar-weighted p-norm (weight ignored for Linf).
double norm(const GroupFunction& f, NormKind p);
double norm(const DualFunction& f, NormKind p);

} // namespace lcapego
