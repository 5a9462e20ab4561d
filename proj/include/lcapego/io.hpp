#pragma once

#include <nlohmann/json.hpp>

#include "lcapego/compactness.hpp"
#include "lcapego/conv_operator.hpp"

namespace lcapego::io {

using ordered_json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "lca-pego/1";

/// Group spec JSON:
///   {"type":"finite","moduli":[...]}
///   {"type":"z_window","half_width":N}
///   {"type":"real_grid","dims":d,"half_extent":L,"points_per_axis":P}
GroupModel parse_group(const ordered_json& j);
ordered_json group_to_json(const GroupModel& g);

/// Function JSON: {"name":"f","values":[[re,im],...]} with values indexed
/// by flat point index, or the sparse alternative
/// {"name":"f","support":{"<coords>":[re,im],...}} with signed
/// comma-separated coordinates as keys (all other points are 0).
GroupFunction parse_function(const ordered_json& j, const GroupModel& g);
ordered_json function_to_json(const GroupFunction& f);
ordered_json dual_function_to_json(const DualFunction& f);

/// A function file: {"group":<spec>,"function":{...}} or
/// {"group":<spec>,"functions":[{...},...]}.
GroupFunction parse_function_file(const ordered_json& j);
std::vector<GroupFunction> parse_function_list_file(const ordered_json& j);

FamilyThresholds parse_thresholds(const ordered_json& j, FamilyThresholds base = {});

ordered_json report_to_json(const CompactnessReport& r);
ordered_json consistency_to_json(const ConsistencyReport& r);
ordered_json power_iteration_to_json(const PowerIterationResult& r);

/// Deterministic serialization: fixed field order (insertion order of
/// ordered_json) and floats at 17 significant digits, so identical inputs
/// produce byte-identical output.
std::string dump_deterministic(const ordered_json& j, int indent = 2);

/// Float formatting shared by the JSON and CSV writers (%.17g).
std::string format_double(double v);

/// CSV of (point index, re, im) for a group function; point index is the
/// signed coordinate tuple joined by ';'.
std::string function_to_csv(const GroupFunction& f);

/// CSV of (alpha, abs) for CircleGrid duals, (index, re, im) otherwise.
std::string dual_function_to_csv(const DualFunction& f);

/// CSV tables for omega, tau and N(eps): rows table,arg,value.
std::string report_tables_to_csv(const CompactnessReport& r);

} // namespace lcapego::io
