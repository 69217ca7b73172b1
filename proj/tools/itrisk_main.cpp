// itrisk: file-driven frontend for integration-and-test risk planning.
//
// Exit codes: 0 success, 1 validation or parse error, 2 infeasible budget or
// stop-criterion failure, 3 internal invariant breach.

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "itrisk/errors.hpp"
#include "itrisk/io.hpp"
#include "itrisk/svg.hpp"

namespace {

using itrisk::io::json;

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitInternal = 3;

std::string stem_of(const std::string& path) {
    return std::filesystem::path(path).stem().string();
}

// Inputs and outputs must not collide; a shared path would overwrite an input.
void require_distinct_paths(const std::vector<std::string>& paths) {
    std::vector<std::string> seen;
    for (const auto& path : paths) {
        if (path.empty()) continue;
        if (std::find(seen.begin(), seen.end(), path) != seen.end())
            throw itrisk::ArgumentError("path '" + path + "' is used more than once");
        seen.push_back(path);
    }
}

void print_issues(const itrisk::ValidationReport& report, const std::string& source) {
    for (const auto& issue : report.issues) {
        std::cerr << (issue.severity == itrisk::Severity::error ? "error" : "warning") << ": "
                  << source << ": " << issue.location << ": " << issue.message << "\n";
    }
}

itrisk::ProductModel load_model(const std::string& path) {
    const auto model = itrisk::io::model_from_json(itrisk::io::load_json_file(path), path);
    const auto report = itrisk::validate_model(model);
    print_issues(report, path);
    if (report.has_errors()) throw itrisk::ArgumentError("model '" + path + "' is invalid");
    return model;
}

// A plan comes from a file or from an inline partition, never both.
itrisk::IntegrationPlan load_plan(const itrisk::ProductModel& model, const std::string& path) {
    auto plan = itrisk::io::plan_from_json(itrisk::io::load_json_file(path), path);
    if (plan.label.empty()) plan.label = stem_of(path);
    const auto report = itrisk::validate_plan(model, plan);
    print_issues(report, path);
    if (report.has_errors()) throw itrisk::ArgumentError("plan '" + path + "' is invalid");
    return plan;
}

std::vector<std::vector<std::string>> parse_partition(const std::string& text) {
    std::vector<std::vector<std::string>> blocks;
    std::stringstream block_stream(text);
    std::string block;
    while (std::getline(block_stream, block, '/')) {
        std::vector<std::string> modules;
        std::stringstream module_stream(block);
        std::string module;
        while (std::getline(module_stream, module, ',')) {
            if (!module.empty()) modules.push_back(module);
        }
        if (!modules.empty()) blocks.push_back(std::move(modules));
    }
    if (blocks.empty()) throw itrisk::ArgumentError("empty --partition");
    return blocks;
}

itrisk::StrategyObjective parse_objective(const std::string& name) {
    if (name == "avg-risk") return itrisk::StrategyObjective::average_risk();
    if (name == "max-risk") return itrisk::StrategyObjective::max_risk();
    if (name == "duration") return itrisk::StrategyObjective::duration();
    throw itrisk::ArgumentError("unknown objective '" + name +
                                "' (expected avg-risk, max-risk, or duration)");
}

bool all_tests_full_strength(const itrisk::IntegrationPlan& plan) {
    for (const auto& cycle : plan.cycles)
        for (const auto& action : cycle.actions)
            if (action.kind == itrisk::ActionKind::test && action.effectiveness < 1.0)
                return false;
    return true;
}

struct SimulateArgs {
    std::string model_path;
    std::string plan_path;
    std::string partition;
    std::string csv_out;
    std::string report_out;
    std::string svg_out;
};

int run_simulate(const SimulateArgs& args) {
    require_distinct_paths(
        {args.model_path, args.plan_path, args.csv_out, args.report_out, args.svg_out});
    const auto model = load_model(args.model_path);
    itrisk::IntegrationPlan plan;
    if (!args.plan_path.empty()) {
        plan = load_plan(model, args.plan_path);
    } else if (!args.partition.empty()) {
        plan = itrisk::build_adaptive_plan(model, parse_partition(args.partition));
    } else {
        throw itrisk::ArgumentError("simulate needs --plan or --partition");
    }

    const auto result = itrisk::simulate(model, plan);

    if (!args.csv_out.empty())
        itrisk::io::write_file_atomic(args.csv_out,
                                      itrisk::io::profile_to_csv(result.profile));
    if (!args.report_out.empty())
        itrisk::io::write_file_atomic(
            args.report_out, itrisk::io::simulation_to_json(plan, result).dump(2) + "\n");
    if (!args.svg_out.empty()) {
        itrisk::svg::ProfileSeries series{plan.label, result.profile,
                                          result.kpis.average_risk};
        itrisk::io::write_file_atomic(args.svg_out, itrisk::svg::render_profile_svg({series}));
    }

    std::cout << "simulate " << plan.label << ": phi=" << result.kpis.phi
              << " cost=" << itrisk::io::format_fixed(result.kpis.cost, 2)
              << " max_risk=" << itrisk::io::format_fixed(result.profile.max_risk(), 2)
              << " remaining=" << itrisk::io::format_fixed(result.kpis.remaining_risk, 2)
              << " avg_risk=" << itrisk::io::format_fixed(result.kpis.average_risk, 4) << "\n";

    if (all_tests_full_strength(plan) && result.kpis.remaining_risk > 0.0) {
        std::cerr << "stop criterion not met: "
                  << itrisk::io::format_fixed(result.kpis.remaining_risk, 2)
                  << " risk units remain\n";
        return kExitInfeasible;
    }
    return kExitOk;
}

struct CompareArgs {
    std::string model_path;
    std::vector<std::string> plan_paths;
    std::vector<std::string> partitions;
    std::string objective = "avg-risk";
    std::string report_out;
    std::string svg_out;
};

int run_compare(const CompareArgs& args) {
    std::vector<std::string> paths = {args.model_path, args.report_out, args.svg_out};
    paths.insert(paths.end(), args.plan_paths.begin(), args.plan_paths.end());
    require_distinct_paths(paths);
    const auto model = load_model(args.model_path);
    std::vector<itrisk::IntegrationPlan> plans;
    for (const auto& path : args.plan_paths) plans.push_back(load_plan(model, path));
    for (std::size_t i = 0; i < args.partitions.size(); ++i) {
        auto plan = itrisk::build_adaptive_plan(model, parse_partition(args.partitions[i]));
        plan.label = "partition-" + std::to_string(i + 1);
        plans.push_back(std::move(plan));
    }

    const auto report = itrisk::compare(model, plans);

    if (!args.report_out.empty())
        itrisk::io::write_file_atomic(args.report_out,
                                      itrisk::io::comparison_to_json(report).dump(2) + "\n");
    if (!args.svg_out.empty()) {
        std::vector<itrisk::svg::ProfileSeries> series;
        for (const auto& plan : plans) {
            const auto result = itrisk::simulate(model, plan);
            series.push_back({plan.label, result.profile, result.kpis.average_risk});
        }
        std::sort(series.begin(), series.end(),
                  [](const auto& a, const auto& b) { return a.label < b.label; });
        itrisk::io::write_file_atomic(args.svg_out, itrisk::svg::render_profile_svg(series));
    }

    for (const auto& p : report.plans) {
        std::cout << p.label << ": phi=" << p.kpis.phi
                  << " cost=" << itrisk::io::format_fixed(p.kpis.cost, 2)
                  << " max_risk=" << itrisk::io::format_fixed(p.max_risk, 2)
                  << " avg_risk=" << itrisk::io::format_fixed(p.kpis.average_risk, 4) << "\n";
    }
    const auto objective = parse_objective(args.objective);
    std::cout << "winner(" << args.objective
              << ") = " << report.winners.at(itrisk::to_string(objective.kind)) << "\n";
    return kExitOk;
}

struct OptimizeArgs {
    std::string model_path;
    std::string objective = "avg-risk";
    int max_cycles = 2;
    std::string mode = "exhaustive";
    std::string report_out;
    std::string plan_out;
};

int run_optimize(const OptimizeArgs& args) {
    require_distinct_paths({args.model_path, args.report_out, args.plan_out});
    const auto model = load_model(args.model_path);
    const auto objective = parse_objective(args.objective);
    itrisk::OptimizeMode mode;
    if (args.mode == "exhaustive")
        mode = itrisk::OptimizeMode::exhaustive;
    else if (args.mode == "greedy")
        mode = itrisk::OptimizeMode::greedy;
    else
        throw itrisk::ArgumentError("unknown mode '" + args.mode + "'");

    const auto result = itrisk::optimize(model, objective, args.max_cycles, mode);

    if (!args.report_out.empty())
        itrisk::io::write_file_atomic(args.report_out,
                                      itrisk::io::optimize_to_json(result).dump(2) + "\n");
    if (!args.plan_out.empty())
        itrisk::io::write_file_atomic(args.plan_out,
                                      itrisk::io::plan_to_json(result.best).dump(2) + "\n");

    const auto sim = itrisk::simulate(model, result.best);
    std::cout << "optimize(" << args.objective << "," << args.mode << "): explored "
              << result.plans_explored << " candidates; best phi=" << sim.kpis.phi
              << " max_risk=" << itrisk::io::format_fixed(sim.profile.max_risk(), 2)
              << " avg_risk=" << itrisk::io::format_fixed(sim.kpis.average_risk, 4) << "\n";
    return kExitOk;
}

struct BudgetArgs {
    std::string pipeline_path;
    std::string bench_path;
    std::string report_out;
    std::string text_out;
};

int run_budget(const BudgetArgs& args) {
    require_distinct_paths(
        {args.pipeline_path, args.bench_path, args.report_out, args.text_out});
    const auto pipeline = itrisk::io::pipeline_from_json(
        itrisk::io::load_json_file(args.pipeline_path), args.pipeline_path);
    const auto bench = itrisk::io::benchmark_from_json(
        itrisk::io::load_json_file(args.bench_path), args.bench_path);

    const auto report = itrisk::budget::analyze_pipeline(pipeline.stages, bench,
                                                         pipeline.context);

    if (!args.report_out.empty())
        itrisk::io::write_file_atomic(args.report_out,
                                      itrisk::io::budget_to_json(report).dump(2) + "\n");
    if (!args.text_out.empty())
        itrisk::io::write_file_atomic(args.text_out, itrisk::io::budget_to_text(report));

    std::cout << "budget: " << report.stages.size() << " stages, "
              << report.total_processors << " processors on " << report.boards
              << " boards, acquisition "
              << itrisk::io::format_fixed(
                     static_cast<double>(report.acquisition_memory_bits) /
                         itrisk::budget::kBitsPerKiB,
                     1)
              << " KiB, buffers "
              << itrisk::io::format_fixed(
                     static_cast<double>(report.buffer_bits) / itrisk::budget::kBitsPerKiB, 1)
              << " KiB\n";

    if (!report.all_feasible) {
        std::cerr << "one or more stages are infeasible\n";
        return kExitInfeasible;
    }
    return kExitOk;
}

struct TestsetArgs {
    std::string registry_path;
    std::string from_version;
    std::string to_version;
    std::string version;
    std::string report_out;
};

int run_testset_reuse(const TestsetArgs& args) {
    require_distinct_paths({args.registry_path, args.report_out});
    const auto reg = itrisk::io::registry_from_json(
        itrisk::io::load_json_file(args.registry_path), args.registry_path);
    const auto validation = itrisk::testset::validate_registry(reg);
    print_issues(validation, args.registry_path);
    if (validation.has_errors())
        throw itrisk::ArgumentError("registry '" + args.registry_path + "' is invalid");

    const auto delta = itrisk::testset::reuse_delta(reg, args.from_version, args.to_version);
    if (!args.report_out.empty())
        itrisk::io::write_file_atomic(args.report_out,
                                      itrisk::io::reuse_to_json(delta).dump(2) + "\n");
    std::cout << "reuse " << args.from_version << " -> " << args.to_version << ": "
              << delta.reusable.size() << " cases reusable, " << delta.uncovered_tags.size()
              << " tags uncovered\n";
    return kExitOk;
}

int run_testset_cover(const TestsetArgs& args) {
    require_distinct_paths({args.registry_path, args.report_out});
    const auto reg = itrisk::io::registry_from_json(
        itrisk::io::load_json_file(args.registry_path), args.registry_path);
    const auto validation = itrisk::testset::validate_registry(reg);
    print_issues(validation, args.registry_path);
    if (validation.has_errors())
        throw itrisk::ArgumentError("registry '" + args.registry_path + "' is invalid");

    const auto cover = itrisk::testset::minimal_cover(reg, args.version);
    if (!args.report_out.empty())
        itrisk::io::write_file_atomic(args.report_out,
                                      itrisk::io::cover_to_json(cover).dump(2) + "\n");
    std::cout << "cover " << args.version << ": " << cover.cases.size() << " cases";
    for (const auto& id : cover.cases) std::cout << " " << id;
    std::cout << " (" << cover.overlaps.size() << " overlapping pairs)\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"integration-and-test risk simulator, comparator, and optimizer"};
    app.require_subcommand(1);

    SimulateArgs sim_args;
    auto* sim = app.add_subcommand("simulate", "replay one plan and emit its risk profile");
    sim->add_option("--model", sim_args.model_path, "product model JSON")->required();
    sim->add_option("--plan", sim_args.plan_path, "integration plan JSON");
    sim->add_option("--partition", sim_args.partition,
                    "inline adaptive partition, e.g. \"DSP2,DAQ2,FFT/DSP4,CACFAR2,PDP2\"");
    sim->add_option("--profile-csv", sim_args.csv_out, "write the risk profile CSV here");
    sim->add_option("--report", sim_args.report_out, "write the JSON report here");
    sim->add_option("--svg", sim_args.svg_out, "write the profile plot here");

    CompareArgs cmp_args;
    auto* cmp = app.add_subcommand("compare", "simulate several plans and rank them");
    cmp->add_option("--model", cmp_args.model_path, "product model JSON")->required();
    cmp->add_option("--plan", cmp_args.plan_paths, "plan JSON (repeatable)");
    cmp->add_option("--partition", cmp_args.partitions, "inline partition (repeatable)");
    cmp->add_option("--objective", cmp_args.objective, "avg-risk | max-risk | duration");
    cmp->add_option("--report", cmp_args.report_out, "write the JSON report here");
    cmp->add_option("--svg", cmp_args.svg_out, "write the overlaid profiles here");

    OptimizeArgs opt_args;
    auto* opt = app.add_subcommand("optimize", "search for the best integration plan");
    opt->add_option("--model", opt_args.model_path, "product model JSON")->required();
    opt->add_option("--objective", opt_args.objective, "avg-risk | max-risk | duration");
    opt->add_option("--max-cycles", opt_args.max_cycles, "cycle budget for the search");
    opt->add_option("--mode", opt_args.mode, "exhaustive | greedy");
    opt->add_option("--report", opt_args.report_out, "write the JSON report here");
    opt->add_option("--plan-out", opt_args.plan_out, "write the winning plan JSON here");

    BudgetArgs bud_args;
    auto* bud = app.add_subcommand("budget", "size a processing pipeline against a benchmark");
    bud->add_option("--pipeline", bud_args.pipeline_path, "pipeline JSON")->required();
    bud->add_option("--bench", bud_args.bench_path, "processor benchmark JSON")->required();
    bud->add_option("--report", bud_args.report_out, "write the JSON report here");
    bud->add_option("--text", bud_args.text_out, "write the aligned text report here");

    TestsetArgs ts_args;
    auto* ts = app.add_subcommand("testset", "test-set reuse and minimal cover");
    auto* reuse = ts->add_subcommand("reuse", "cases reusable between two versions");
    reuse->add_option("--registry", ts_args.registry_path, "registry JSON")->required();
    reuse->add_option("--from", ts_args.from_version, "source version")->required();
    reuse->add_option("--to", ts_args.to_version, "target version")->required();
    reuse->add_option("--report", ts_args.report_out, "write the JSON report here");
    auto* cover = ts->add_subcommand("cover", "greedy minimal cover for a version");
    cover->add_option("--registry", ts_args.registry_path, "registry JSON")->required();
    cover->add_option("--version", ts_args.version, "version to cover")->required();
    cover->add_option("--report", ts_args.report_out, "write the JSON report here");
    ts->require_subcommand(1);

    CLI11_PARSE(app, argc, argv);

    try {
        if (sim->parsed()) return run_simulate(sim_args);
        if (cmp->parsed()) return run_compare(cmp_args);
        if (opt->parsed()) return run_optimize(opt_args);
        if (bud->parsed()) return run_budget(bud_args);
        if (ts->parsed()) {
            if (reuse->parsed()) return run_testset_reuse(ts_args);
            if (cover->parsed()) return run_testset_cover(ts_args);
        }
        std::cerr << "no subcommand\n";
        return kExitInvalid;
    } catch (const itrisk::InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const itrisk::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}
