// Command-line front end: parses group/function specs, dispatches to the
// library, and emits deterministic JSON/CSV reports.
//
// Exit codes: 0 success (verdict pass), 2 parse/spec error (structured error
// on stderr, nothing written), 3 verdict or claim failure, 4 inconsistent
// oracle cross-check.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "lcapego/families.hpp"
#include "lcapego/io.hpp"
#include "lcapego/paper_check.hpp"

namespace {

using lcapego::io::ordered_json;

struct RunConfig {
    std::vector<std::string> inputs;
    std::string group_json;
    long dual_grid = 4096;
    std::string builtin_tag;
    int count = 32;
    std::string eps_list;
    std::string thresholds_json;
    int iterations = 500;
    std::uint64_t seed = 42;
    std::string output;
    std::string format = "json";
};

ordered_json load_json(const std::string& text_or_path) {
    if (!text_or_path.empty() && text_or_path.front() == '@') {
        std::ifstream in(text_or_path.substr(1));
        if (!in) throw lcapego::InvalidSpec("cannot open " + text_or_path.substr(1));
        return ordered_json::parse(in);
    }
    return ordered_json::parse(text_or_path);
}

ordered_json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw lcapego::InvalidSpec("cannot open " + path);
    return ordered_json::parse(in);
}

// --group overrides or supplies the carrier for input files that omit one.
ordered_json with_group(const RunConfig& cfg, ordered_json file) {
    if (!cfg.group_json.empty()) file["group"] = load_json(cfg.group_json);
    return file;
}

void emit(const RunConfig& cfg, const std::string& text) {
    if (cfg.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(cfg.output, std::ios::binary);
    if (!out) throw lcapego::InvalidSpec("cannot write " + cfg.output);
    out << text;
}

ordered_json report_header(const char* command) {
    ordered_json j;
    j["schema"] = lcapego::io::kSchema;
    j["command"] = command;
    return j;
}

lcapego::FamilyThresholds thresholds_from(const RunConfig& cfg) {
    lcapego::FamilyThresholds thr;
    if (!cfg.thresholds_json.empty())
        thr = lcapego::io::parse_thresholds(load_json(cfg.thresholds_json), thr);
    if (!cfg.eps_list.empty()) {
        thr.eps_schedule.clear();
        std::istringstream is(cfg.eps_list);
        std::string part;
        while (std::getline(is, part, ',')) thr.eps_schedule.push_back(std::stod(part));
        if (thr.eps_schedule.empty()) throw lcapego::InvalidSpec("--eps list is empty");
    }
    return thr;
}

lcapego::FunctionFamily family_from(const RunConfig& cfg) {
    if (!cfg.builtin_tag.empty()) {
        lcapego::GeneratorSpec spec;
        spec.tag = cfg.builtin_tag;
        spec.count = cfg.count;
        spec.seed = cfg.seed;
        return lcapego::make_builtin_family(spec);
    }
    if (cfg.inputs.empty())
        throw lcapego::InvalidSpec("need --input FILE or --builtin TAG");
    auto functions =
        lcapego::io::parse_function_list_file(with_group(cfg, load_json_file(cfg.inputs.front())));
    for (std::size_t i = 1; i < cfg.inputs.size(); ++i) {
        auto more =
            lcapego::io::parse_function_list_file(with_group(cfg, load_json_file(cfg.inputs[i])));
        for (auto& f : more) functions.push_back(std::move(f));
    }
    return lcapego::make_family(std::move(functions));
}

int cmd_fourier(const RunConfig& cfg) {
    if (cfg.inputs.size() != 1) throw lcapego::InvalidSpec("fourier needs exactly one --input");
    const auto f =
        lcapego::io::parse_function_file(with_group(cfg, load_json_file(cfg.inputs.front())));
    const auto fhat = lcapego::fourier(f, cfg.dual_grid);

    if (cfg.format == "csv") {
        emit(cfg, lcapego::io::dual_function_to_csv(fhat));
        return 0;
    }
    auto j = report_header("fourier");
    j["group"] = lcapego::io::group_to_json(f.group);
    j["dual"] = fhat.dual.describe();
    j["function"] = lcapego::io::dual_function_to_json(fhat);
    j["norms"] = ordered_json{{"l1", lcapego::norm(fhat, lcapego::NormKind::L1)},
                              {"l2", lcapego::norm(fhat, lcapego::NormKind::L2)},
                              {"linf", lcapego::norm(fhat, lcapego::NormKind::Linf)}};
    emit(cfg, lcapego::io::dump_deterministic(j));
    return 0;
}

int cmd_conv(const RunConfig& cfg) {
    std::vector<lcapego::GroupFunction> fs;
    for (const auto& path : cfg.inputs) {
        auto list = lcapego::io::parse_function_list_file(with_group(cfg, load_json_file(path)));
        for (auto& f : list) fs.push_back(std::move(f));
    }
    if (fs.size() != 2) throw lcapego::InvalidSpec("conv needs exactly two functions");
    const auto result = lcapego::convolve_with_loss(fs[0], fs[1]);

    if (cfg.format == "csv") {
        emit(cfg, lcapego::io::function_to_csv(result.value));
        return 0;
    }
    auto j = report_header("conv");
    j["group"] = lcapego::io::group_to_json(fs[0].group);
    j["function"] = lcapego::io::function_to_json(result.value);
    j["truncation_loss"] = result.truncation_loss;
    j["norms"] = ordered_json{{"l1", lcapego::norm(result.value, lcapego::NormKind::L1)},
                              {"l2", lcapego::norm(result.value, lcapego::NormKind::L2)},
                              {"linf", lcapego::norm(result.value, lcapego::NormKind::Linf)}};
    emit(cfg, lcapego::io::dump_deterministic(j));
    return 0;
}

int cmd_opnorm(const RunConfig& cfg) {
    if (cfg.inputs.size() != 1) throw lcapego::InvalidSpec("opnorm needs exactly one --input");
    const auto f =
        lcapego::io::parse_function_file(with_group(cfg, load_json_file(cfg.inputs.front())));

    auto j = report_header("opnorm");
    j["group"] = lcapego::io::group_to_json(f.group);
    j["kernel"] = f.name;
    j["seed"] = cfg.seed;

    double fourier_route = 0.0;
    double other_route = 0.0;
    if (f.group.kind() == lcapego::GroupKind::FiniteProduct) {
        fourier_route = lcapego::fourier_sup_norm(f);
        const bool can_materialize =
            f.group.point_count() <= lcapego::ConvolutionOperator::kMaterializeCap;
        const auto op = lcapego::make_operator(f, can_materialize);
        if (can_materialize) {
            other_route = lcapego::opnorm_exact(op);
            j["matrix_route"] = other_route;
        } else {
            // Too large for the dense route; power iteration stands in.
            const auto pi = lcapego::opnorm_power_iteration(op, cfg.iterations, cfg.seed);
            other_route = pi.estimate;
            j["power_iteration"] = lcapego::io::power_iteration_to_json(pi);
        }
    } else if (f.group.kind() == lcapego::GroupKind::ZWindow) {
        fourier_route = lcapego::fourier_sup_norm(f, cfg.dual_grid);
        const auto op = lcapego::make_operator(f, false);
        const auto pi = lcapego::opnorm_power_iteration(op, cfg.iterations, cfg.seed);
        other_route = pi.estimate;
        j["power_iteration"] = lcapego::io::power_iteration_to_json(pi);
    } else {
        throw lcapego::InvalidSpec("opnorm runs on finite or z_window carriers");
    }
    j["fourier_route"] = fourier_route;
    j["estimate"] = other_route;
    j["gap"] = fourier_route - other_route;
    j["l1_norm"] = lcapego::norm(f, lcapego::NormKind::L1);

    if (cfg.format == "csv") {
        std::string csv = "key,value\n";
        for (const char* k : {"fourier_route", "estimate", "gap", "l1_norm"})
            csv += std::string(k) + "," + lcapego::io::format_double(j[k].get<double>()) + "\n";
        emit(cfg, csv);
        return 0;
    }
    emit(cfg, lcapego::io::dump_deterministic(j));
    return 0;
}

int emit_criteria_report(const RunConfig& cfg, const char* command,
                         const lcapego::FunctionFamily& fam,
                         const lcapego::CompactnessReport& report,
                         const std::optional<lcapego::ConsistencyReport>& cross) {
    if (cfg.format == "csv") {
        emit(cfg, lcapego::io::report_tables_to_csv(report));
    } else {
        auto j = report_header(command);
        j["group"] = lcapego::io::group_to_json(fam.members.front().group);
        j["members"] = static_cast<int>(fam.members.size());
        if (fam.generator) j["generator"] = fam.generator->tag;
        j["seed"] = cfg.seed;
        j["report"] = lcapego::io::report_to_json(report);
        if (cross) j["cross_check"] = lcapego::io::consistency_to_json(*cross);
        emit(cfg, lcapego::io::dump_deterministic(j));
    }
    if (cross && !cross->consistent) return 4;
    return report.pass_overall ? 0 : 3;
}

int cmd_pego(const RunConfig& cfg) {
    const auto fam = family_from(cfg);
    const auto thr = thresholds_from(cfg);
    const auto report = lcapego::pego_check(fam, thr, cfg.dual_grid);
    std::optional<lcapego::ConsistencyReport> cross;
    if (fam.generator)
        cross = lcapego::oracle_cross_check(fam, thr, thr.eps_schedule, cfg.dual_grid);
    return emit_criteria_report(cfg, "pego", fam, report, cross);
}

int cmd_aa(const RunConfig& cfg) {
    const auto fam = family_from(cfg);
    const auto thr = thresholds_from(cfg);
    const auto report = lcapego::aa_check(fam, thr);
    return emit_criteria_report(cfg, "aa", fam, report, std::nullopt);
}

int cmd_paper_check(const RunConfig& cfg) {
    const auto claims = lcapego::run_paper_check(lcapego::PaperCheckParams{});
    bool all_pass = true;

    auto j = report_header("paper-check");
    auto arr = ordered_json::array();
    for (const auto& c : claims) {
        arr.push_back(ordered_json{{"claim", c.id},
                                   {"expected", c.expected},
                                   {"computed", c.computed},
                                   {"tolerance", c.tolerance},
                                   {"pass", c.pass},
                                   {"detail", c.detail}});
        all_pass = all_pass && c.pass;
    }
    j["claims"] = arr;
    j["all_pass"] = all_pass;

    if (cfg.format == "csv") {
        std::string csv = "claim,computed,tolerance,pass\n";
        for (const auto& c : claims)
            csv += c.id + "," + lcapego::io::format_double(c.computed) + "," +
                   lcapego::io::format_double(c.tolerance) + "," + (c.pass ? "1" : "0") + "\n";
        emit(cfg, csv);
    } else {
        emit(cfg, lcapego::io::dump_deterministic(j));
    }
    return all_pass ? 0 : 3;
}

void print_structured_error(const std::string& code, const std::string& message) {
    ordered_json e;
    e["error"] = ordered_json{{"code", code}, {"message", message}};
    std::cerr << lcapego::io::dump_deterministic(e);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Harmonic analysis on desk-scale abelian group models: transforms, "
                 "convolution-operator norms, and compactness diagnostics"};
    app.require_subcommand(1);

    RunConfig cfg;
    int (*handler)(const RunConfig&) = nullptr;

    auto add_common = [&cfg](CLI::App* sub) {
        sub->add_option("--group", cfg.group_json,
                        "group spec JSON (inline or @file); overrides the input file's group");
        sub->add_option("--input", cfg.inputs, "input JSON file(s)");
        sub->add_option("--dual-grid", cfg.dual_grid, "dual grid size M for z_window carriers");
        sub->add_option("--iterations", cfg.iterations, "power iteration budget");
        sub->add_option("--seed", cfg.seed, "random seed");
        sub->add_option("--output", cfg.output, "output path (default stdout)");
        sub->add_option("--format", cfg.format, "json or csv")
            ->check(CLI::IsMember({"json", "csv"}));
    };
    auto add_family = [&cfg](CLI::App* sub) {
        sub->add_option("--builtin", cfg.builtin_tag,
                        "builtin family tag (indicator_shifts, modulations, span_random, "
                        "gaussian_bumps)");
        sub->add_option("--count", cfg.count, "builtin family member count");
        sub->add_option("--eps", cfg.eps_list, "comma-separated eps schedule");
        sub->add_option("--thresholds", cfg.thresholds_json,
                        "thresholds JSON (inline or @file)");
    };

    auto* fourier_cmd = app.add_subcommand("fourier", "Fourier transform of one function");
    add_common(fourier_cmd);
    fourier_cmd->callback([&handler] { handler = cmd_fourier; });

    auto* conv_cmd = app.add_subcommand("conv", "convolution of two functions");
    add_common(conv_cmd);
    conv_cmd->callback([&handler] { handler = cmd_conv; });

    auto* opnorm_cmd = app.add_subcommand("opnorm", "convolution-operator norm, both routes");
    add_common(opnorm_cmd);
    opnorm_cmd->callback([&handler] { handler = cmd_opnorm; });

    auto* pego_cmd =
        app.add_subcommand("pego", "Fourier-side compactness criteria with the eps-net oracle");
    add_common(pego_cmd);
    add_family(pego_cmd);
    pego_cmd->callback([&handler] { handler = cmd_pego; });

    auto* aa_cmd = app.add_subcommand("aa", "sup-norm compactness criteria on the carrier");
    add_common(aa_cmd);
    add_family(aa_cmd);
    aa_cmd->callback([&handler] { handler = cmd_aa; });

    auto* paper_cmd =
        app.add_subcommand("paper-check", "reproduce the pinned numeric claim suite");
    add_common(paper_cmd);
    paper_cmd->callback([&handler] { handler = cmd_paper_check; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return 2;
    }

    try {
        return handler(cfg);
    } catch (const lcapego::Error& e) {
        print_structured_error(e.code(), e.what());
        return 2;
    } catch (const nlohmann::json::exception& e) {
        print_structured_error("json_parse", e.what());
        return 2;
    } catch (const std::exception& e) {
        print_structured_error("error", e.what());
        return 2;
    }
}
