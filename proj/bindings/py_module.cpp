// Python bindings. Composite operations speak JSON text on both sides; the
// itrisk python package wraps them with json.loads/dumps so callers see
// plain dicts. Scalar budget helpers bind directly.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "itrisk/budget.hpp"
#include "itrisk/engine.hpp"
#include "itrisk/errors.hpp"
#include "itrisk/io.hpp"
#include "itrisk/strategy.hpp"
#include "itrisk/svg.hpp"
#include "itrisk/testset.hpp"

namespace py = pybind11;

namespace {

using itrisk::io::json;

json parse(const std::string& text, const char* what) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw itrisk::ParseError(what, "", e.what());
    }
}

itrisk::StrategyObjective objective_from_name(const std::string& name) {
    if (name == "avg-risk" || name == "average_risk")
        return itrisk::StrategyObjective::average_risk();
    if (name == "max-risk" || name == "max_risk") return itrisk::StrategyObjective::max_risk();
    if (name == "duration") return itrisk::StrategyObjective::duration();
    throw itrisk::ArgumentError("unknown objective '" + name + "'");
}

std::string simulate_json(const std::string& model_text, const std::string& plan_text) {
    const auto model = itrisk::io::model_from_json(parse(model_text, "model"), "model");
    const auto plan = itrisk::io::plan_from_json(parse(plan_text, "plan"), "plan");
    const auto result = itrisk::simulate(model, plan);
    return itrisk::io::simulation_to_json(plan, result).dump();
}

std::string validate_model_json(const std::string& model_text) {
    const auto model = itrisk::io::model_from_json(parse(model_text, "model"), "model");
    return itrisk::io::validation_to_json(itrisk::validate_model(model)).dump();
}

std::string validate_plan_json(const std::string& model_text, const std::string& plan_text) {
    const auto model = itrisk::io::model_from_json(parse(model_text, "model"), "model");
    const auto plan = itrisk::io::plan_from_json(parse(plan_text, "plan"), "plan");
    return itrisk::io::validation_to_json(itrisk::validate_plan(model, plan)).dump();
}

std::string build_conventional_json(const std::string& model_text,
                                    const std::vector<std::vector<std::string>>& order) {
    const auto model = itrisk::io::model_from_json(parse(model_text, "model"), "model");
    return itrisk::io::plan_to_json(itrisk::build_conventional_plan(model, order)).dump();
}

std::string build_adaptive_json(const std::string& model_text,
                                const std::vector<std::vector<std::string>>& partition) {
    const auto model = itrisk::io::model_from_json(parse(model_text, "model"), "model");
    return itrisk::io::plan_to_json(itrisk::build_adaptive_plan(model, partition)).dump();
}

std::string compare_json(const std::string& model_text,
                         const std::vector<std::string>& plan_texts) {
    const auto model = itrisk::io::model_from_json(parse(model_text, "model"), "model");
    std::vector<itrisk::IntegrationPlan> plans;
    for (const auto& text : plan_texts)
        plans.push_back(itrisk::io::plan_from_json(parse(text, "plan"), "plan"));
    return itrisk::io::comparison_to_json(itrisk::compare(model, plans)).dump();
}

std::string optimize_json(const std::string& model_text, const std::string& objective,
                          int max_cycles, const std::string& mode) {
    const auto model = itrisk::io::model_from_json(parse(model_text, "model"), "model");
    const auto result = itrisk::optimize(
        model, objective_from_name(objective), max_cycles,
        mode == "greedy" ? itrisk::OptimizeMode::greedy : itrisk::OptimizeMode::exhaustive);
    return itrisk::io::optimize_to_json(result).dump();
}

std::string analyze_pipeline_json(const std::string& pipeline_text,
                                  const std::string& bench_text) {
    const auto pipeline =
        itrisk::io::pipeline_from_json(parse(pipeline_text, "pipeline"), "pipeline");
    const auto bench =
        itrisk::io::benchmark_from_json(parse(bench_text, "benchmark"), "benchmark");
    return itrisk::io::budget_to_json(
               itrisk::budget::analyze_pipeline(pipeline.stages, bench, pipeline.context))
        .dump();
}

std::string reuse_delta_json(const std::string& registry_text, const std::string& from,
                             const std::string& to) {
    const auto reg =
        itrisk::io::registry_from_json(parse(registry_text, "registry"), "registry");
    return itrisk::io::reuse_to_json(itrisk::testset::reuse_delta(reg, from, to)).dump();
}

std::string minimal_cover_json(const std::string& registry_text, const std::string& version) {
    const auto reg =
        itrisk::io::registry_from_json(parse(registry_text, "registry"), "registry");
    return itrisk::io::cover_to_json(itrisk::testset::minimal_cover(reg, version)).dump();
}

std::string profile_csv(const std::string& model_text, const std::string& plan_text) {
    const auto model = itrisk::io::model_from_json(parse(model_text, "model"), "model");
    const auto plan = itrisk::io::plan_from_json(parse(plan_text, "plan"), "plan");
    return itrisk::io::profile_to_csv(itrisk::simulate(model, plan).profile);
}

std::string profile_svg(const std::string& model_text,
                        const std::vector<std::string>& plan_texts) {
    const auto model = itrisk::io::model_from_json(parse(model_text, "model"), "model");
    std::vector<itrisk::svg::ProfileSeries> series;
    for (const auto& text : plan_texts) {
        const auto plan = itrisk::io::plan_from_json(parse(text, "plan"), "plan");
        const auto result = itrisk::simulate(model, plan);
        series.push_back({plan.label, result.profile, result.kpis.average_risk});
    }
    return itrisk::svg::render_profile_svg(series);
}

} // namespace

PYBIND11_MODULE(_itrisk, m) {
    m.doc() = "integration-and-test risk planning core";

    py::register_exception<itrisk::Error>(m, "ItriskError", PyExc_ValueError);

    m.def("simulate_json", &simulate_json, py::arg("model"), py::arg("plan"),
          "Replay a plan; returns the simulation report as JSON text.");
    m.def("validate_model_json", &validate_model_json, py::arg("model"));
    m.def("validate_plan_json", &validate_plan_json, py::arg("model"), py::arg("plan"));
    m.def("build_conventional_json", &build_conventional_json, py::arg("model"),
          py::arg("order"));
    m.def("build_adaptive_json", &build_adaptive_json, py::arg("model"), py::arg("partition"));
    m.def("compare_json", &compare_json, py::arg("model"), py::arg("plans"));
    m.def("optimize_json", &optimize_json, py::arg("model"), py::arg("objective"),
          py::arg("max_cycles"), py::arg("mode"));
    m.def("analyze_pipeline_json", &analyze_pipeline_json, py::arg("pipeline"),
          py::arg("benchmark"));
    m.def("reuse_delta_json", &reuse_delta_json, py::arg("registry"), py::arg("from_version"),
          py::arg("to_version"));
    m.def("minimal_cover_json", &minimal_cover_json, py::arg("registry"), py::arg("version"));
    m.def("profile_csv", &profile_csv, py::arg("model"), py::arg("plan"));
    m.def("profile_svg", &profile_svg, py::arg("model"), py::arg("plans"));

    m.def("per_unit_deadline", &itrisk::budget::per_unit_deadline);
    m.def("correlation_op_count", &itrisk::budget::correlation_op_count);
    m.def("cfar_op_count", &itrisk::budget::cfar_op_count);
    m.def("time_per_op", &itrisk::budget::time_per_op);
    m.def("required_processors", &itrisk::budget::required_processors);
    m.def("acquisition_memory_bits", &itrisk::budget::acquisition_memory_bits);
    m.def("range_resolution_to_deadline", &itrisk::budget::range_resolution_to_deadline);
    m.def("doppler_reference_count", &itrisk::budget::doppler_reference_count);
    m.def("board_count", &itrisk::budget::board_count);
    m.def(
        "fft_time_scaled",
        [](double fft_1k_time, std::uint64_t n) {
            itrisk::budget::ProcessorBenchmark bench;
            bench.fft_1k_complex_time = fft_1k_time;
            return itrisk::budget::fft_time_scaled(bench, n);
        },
        py::arg("fft_1k_time"), py::arg("n"));
    m.def(
        "buffer_bits",
        [](double rate, double interval, int word_bits, std::uint64_t channels) {
            const auto sizing = itrisk::budget::buffer_bits(rate, interval, word_bits, channels);
            return py::make_tuple(sizing.samples, sizing.bits);
        },
        py::arg("sample_rate"), py::arg("interval"), py::arg("word_bits"), py::arg("channels"));

    m.attr("__version__") = "0.1.0";
}
