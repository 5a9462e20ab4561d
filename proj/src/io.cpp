#include "lcapego/io.hpp"

#include <cinttypes>
#include <cstdio>
#include <sstream>

namespace lcapego::io {

namespace {

std::complex<double> parse_complex(const ordered_json& j, const std::string& what) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
        return {j[0].get<double>(), j[1].get<double>()};
    throw InvalidSpec(what + ": complex values are [re,im] pairs");
}

std::vector<long> parse_coords(const std::string& key) {
    std::vector<long> coords;
    std::istringstream is(key);
    std::string part;
    while (std::getline(is, part, ','))
        coords.push_back(std::stol(part));
    if (coords.empty()) throw InvalidSpec("empty coordinate key");
    return coords;
}

ordered_json complex_to_json(const std::complex<double>& v) {
    return ordered_json::array({v.real(), v.imag()});
}

ordered_json values_to_json(const std::vector<std::complex<double>>& values) {
    ordered_json a = ordered_json::array();
    for (const auto& v : values) a.push_back(complex_to_json(v));
    return a;
}

ordered_json modulus_to_json(const ModulusTable& t, const char* arg_name) {
    ordered_json j;
    j[arg_name] = t.arg;
    j["value"] = t.value;
    return j;
}

ordered_json covering_to_json(const CoveringTable& t) {
    ordered_json j;
    j["eps"] = t.eps;
    j["count"] = t.count;
    j["net_indices"] = t.net_indices;
    return j;
}

void escape_string(const std::string& s, std::string& out) {
    out += '"';
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    out += '"';
}

void dump_value(const ordered_json& j, std::string& out, int indent, int depth) {
    const std::string pad(static_cast<std::size_t>(indent) * (static_cast<std::size_t>(depth) + 1),
                          ' ');
    const std::string closing(static_cast<std::size_t>(indent) * static_cast<std::size_t>(depth),
                              ' ');
    switch (j.type()) {
        case ordered_json::value_t::object: {
            if (j.empty()) {
                out += "{}";
                return;
            }
            out += "{\n";
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) out += ",\n";
                first = false;
                out += pad;
                escape_string(it.key(), out);
                out += ": ";
                dump_value(it.value(), out, indent, depth + 1);
            }
            out += "\n" + closing + "}";
            return;
        }
        case ordered_json::value_t::array: {
            if (j.empty()) {
                out += "[]";
                return;
            }
            out += "[\n";
            bool first = true;
            for (const auto& v : j) {
                if (!first) out += ",\n";
                first = false;
                out += pad;
                dump_value(v, out, indent, depth + 1);
            }
            out += "\n" + closing + "]";
            return;
        }
        case ordered_json::value_t::string:
            escape_string(j.get_ref<const std::string&>(), out);
            return;
        case ordered_json::value_t::boolean:
            out += j.get<bool>() ? "true" : "false";
            return;
        case ordered_json::value_t::number_integer: {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%" PRId64, j.get<std::int64_t>());
            out += buf;
            return;
        }
        case ordered_json::value_t::number_unsigned: {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%" PRIu64, j.get<std::uint64_t>());
            out += buf;
            return;
        }
        case ordered_json::value_t::number_float:
            out += format_double(j.get<double>());
            return;
        default:
            out += "null";
            return;
    }
}

} // namespace

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string dump_deterministic(const ordered_json& j, int indent) {
    std::string out;
    dump_value(j, out, indent, 0);
    out += "\n";
    return out;
}

GroupModel parse_group(const ordered_json& j) {
    if (!j.is_object() || !j.contains("type") || !j["type"].is_string())
        throw InvalidSpec("group spec needs a \"type\" field");
    const std::string type = j["type"].get<std::string>();
    if (type == "finite") {
        if (!j.contains("moduli") || !j["moduli"].is_array())
            throw InvalidSpec("finite group spec needs \"moduli\"");
        std::vector<long> moduli;
        for (const auto& m : j["moduli"]) {
            if (!m.is_number_integer()) throw InvalidSpec("moduli must be integers");
            moduli.push_back(m.get<long>());
        }
        return GroupModel::finite_product(std::move(moduli));
    }
    if (type == "z_window") {
        if (!j.contains("half_width") || !j["half_width"].is_number_integer())
            throw InvalidSpec("z_window spec needs an integer \"half_width\"");
        return GroupModel::z_window(j["half_width"].get<long>());
    }
    if (type == "real_grid") {
        for (const char* k : {"dims", "half_extent", "points_per_axis"})
            if (!j.contains(k)) throw InvalidSpec(std::string("real_grid spec needs \"") + k + "\"");
        return GroupModel::real_grid(j["dims"].get<int>(), j["half_extent"].get<double>(),
                                     j["points_per_axis"].get<long>());
    }
    throw InvalidSpec("unknown group type '" + type + "'");
}

ordered_json group_to_json(const GroupModel& g) {
    ordered_json j;
    switch (g.kind()) {
        case GroupKind::FiniteProduct:
            j["type"] = "finite";
            j["moduli"] = g.moduli();
            break;
        case GroupKind::ZWindow:
            j["type"] = "z_window";
            j["half_width"] = g.half_width();
            break;
        case GroupKind::RealGrid:
            j["type"] = "real_grid";
            j["dims"] = g.dims();
            j["half_extent"] = g.half_extent();
            j["points_per_axis"] = g.points_per_axis();
            break;
    }
    return j;
}

GroupFunction parse_function(const ordered_json& j, const GroupModel& g) {
    if (!j.is_object()) throw InvalidSpec("function must be a JSON object");
    std::string name = j.value("name", std::string{});
    if (j.contains("values")) {
        const auto& vals = j["values"];
        if (!vals.is_array()) throw InvalidSpec("function \"values\" must be an array");
        std::vector<std::complex<double>> values;
        values.reserve(vals.size());
        for (const auto& v : vals) values.push_back(parse_complex(v, "function '" + name + "'"));
        return make_function(g, std::move(values), std::move(name));
    }
    if (j.contains("support")) {
        const auto& supp = j["support"];
        if (!supp.is_object()) throw InvalidSpec("function \"support\" must be an object");
        std::vector<std::complex<double>> values(g.point_count(), 0.0);
        for (auto it = supp.begin(); it != supp.end(); ++it) {
            const auto e = g.element(parse_coords(it.key()));
            values[g.flat_index(e)] = parse_complex(it.value(), "function '" + name + "'");
        }
        return make_function(g, std::move(values), std::move(name));
    }
    throw InvalidSpec("function needs \"values\" or \"support\"");
}

ordered_json function_to_json(const GroupFunction& f) {
    ordered_json j;
    j["name"] = f.name;
    j["values"] = values_to_json(f.values);
    return j;
}

ordered_json dual_function_to_json(const DualFunction& f) {
    ordered_json j;
    j["name"] = f.name;
    j["values"] = values_to_json(f.values);
    return j;
}

GroupFunction parse_function_file(const ordered_json& j) {
    if (!j.is_object() || !j.contains("group"))
        throw InvalidSpec("function file needs a \"group\" spec");
    const auto g = parse_group(j["group"]);
    if (!j.contains("function")) throw InvalidSpec("function file needs a \"function\"");
    return parse_function(j["function"], g);
}

std::vector<GroupFunction> parse_function_list_file(const ordered_json& j) {
    if (!j.is_object() || !j.contains("group"))
        throw InvalidSpec("function file needs a \"group\" spec");
    const auto g = parse_group(j["group"]);
    std::vector<GroupFunction> out;
    if (j.contains("functions")) {
        for (const auto& fj : j["functions"]) out.push_back(parse_function(fj, g));
    } else if (j.contains("function")) {
        out.push_back(parse_function(j["function"], g));
    } else {
        throw InvalidSpec("function file needs \"function\" or \"functions\"");
    }
    return out;
}

FamilyThresholds parse_thresholds(const ordered_json& j, FamilyThresholds base) {
    if (!j.is_object()) throw InvalidSpec("thresholds must be a JSON object");
    if (j.contains("bound")) base.bound = j["bound"].get<double>();
    if (j.contains("radius")) base.radius = j["radius"].get<int>();
    if (j.contains("eps_cont")) base.eps_cont = j["eps_cont"].get<double>();
    if (j.contains("window")) base.window = j["window"].get<int>();
    if (j.contains("eps_tail")) base.eps_tail = j["eps_tail"].get<double>();
    if (j.contains("eps_schedule")) {
        base.eps_schedule.clear();
        for (const auto& e : j["eps_schedule"]) base.eps_schedule.push_back(e.get<double>());
    }
    return base;
}

ordered_json report_to_json(const CompactnessReport& r) {
    ordered_json j;
    j["pointwise_bound"] = ordered_json{{"sup", r.sup_bound}, {"per_point_max", r.per_point_max}};
    j["equicontinuity"] = modulus_to_json(r.equicontinuity, "radius");
    j["equicontinuity"]["vacuous"] = r.equicontinuity_vacuous;
    j["equivanishing"] = modulus_to_json(r.equivanishing, "window");
    j["equivanishing"]["trivial_compact"] = r.equivanishing_trivial;
    j["covering"] = covering_to_json(r.covering);
    j["verdicts"] = ordered_json{{"bounded", r.pass_bounded},
                                 {"equicontinuous", r.pass_equicontinuous},
                                 {"equivanishing", r.pass_equivanishing},
                                 {"overall", r.pass_overall}};
    j["thresholds"] = ordered_json{{"bound", r.thresholds.bound},
                                   {"radius", r.thresholds.radius},
                                   {"eps_cont", r.thresholds.eps_cont},
                                   {"window", r.thresholds.window},
                                   {"eps_tail", r.thresholds.eps_tail},
                                   {"eps_schedule", r.thresholds.eps_schedule}};
    j["notes"] = r.notes;
    return j;
}

ordered_json consistency_to_json(const ConsistencyReport& r) {
    ordered_json j;
    j["base"] = report_to_json(r.base);
    j["doubled"] = report_to_json(r.doubled);
    j["covering_base"] = covering_to_json(r.covering_base);
    j["covering_doubled"] = covering_to_json(r.covering_doubled);
    j["consistent"] = r.consistent;
    j["inconsistencies"] = r.inconsistencies;
    return j;
}

ordered_json power_iteration_to_json(const PowerIterationResult& r) {
    ordered_json j;
    j["estimate"] = r.estimate;
    j["residual"] = r.residual;
    j["iterations_used"] = r.iterations_used;
    j["converged"] = r.converged;
    return j;
}

std::string function_to_csv(const GroupFunction& f) {
    std::string out = "index,re,im\n";
    for (std::size_t i = 0; i < f.values.size(); ++i) {
        const auto p = f.group.point(i);
        std::string key;
        for (std::size_t a = 0; a < p.coords.size(); ++a)
            key += (a ? ";" : "") + std::to_string(p.coords[a]);
        out += key + "," + format_double(f.values[i].real()) + "," +
               format_double(f.values[i].imag()) + "\n";
    }
    return out;
}

std::string dual_function_to_csv(const DualFunction& f) {
    std::string out;
    if (f.dual.kind() == DualKind::CircleGrid) {
        out = "alpha,abs\n";
        for (std::size_t j = 0; j < f.values.size(); ++j)
            out += format_double(f.dual.alpha(j)) + "," + format_double(std::abs(f.values[j])) +
                   "\n";
        return out;
    }
    out = "index,re,im\n";
    for (std::size_t i = 0; i < f.values.size(); ++i) {
        const auto p = f.dual.dual_point(i);
        std::string key;
        for (std::size_t a = 0; a < p.size(); ++a)
            key += (a ? ";" : "") + std::to_string(p[a]);
        out += key + "," + format_double(f.values[i].real()) + "," +
               format_double(f.values[i].imag()) + "\n";
    }
    return out;
}

std::string report_tables_to_csv(const CompactnessReport& r) {
    std::string out = "table,arg,value\n";
    for (std::size_t i = 0; i < r.equicontinuity.arg.size(); ++i)
        out += "omega," + std::to_string(r.equicontinuity.arg[i]) + "," +
               format_double(r.equicontinuity.value[i]) + "\n";
    for (std::size_t i = 0; i < r.equivanishing.arg.size(); ++i)
        out += "tau," + std::to_string(r.equivanishing.arg[i]) + "," +
               format_double(r.equivanishing.value[i]) + "\n";
    for (std::size_t i = 0; i < r.covering.eps.size(); ++i)
        out += "covering," + format_double(r.covering.eps[i]) + "," +
               std::to_string(r.covering.count[i]) + "\n";
    return out;
}

} // namespace lcapego::io
