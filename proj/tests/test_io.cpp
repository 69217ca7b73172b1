#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "itrisk/engine.hpp"
#include "itrisk/errors.hpp"
#include "itrisk/io.hpp"
#include "itrisk/svg.hpp"

using namespace itrisk;
using itrisk::io::json;

namespace {

const std::string kData = ITRISK_DATA_DIR;

ProductModel mds_model() {
    return io::model_from_json(io::load_json_file(kData + "/mds_model.json"));
}

} // namespace

TEST_CASE("the bundled model parses with defaults applied") {
    const auto model = mds_model();
    CHECK(model.modules.size() == 6);
    CHECK(model.interfaces.size() == 4);
    CHECK(model.precedence.size() == 3);
    for (const auto& m : model.modules) {
        CHECK(m.fault_probability == 1.0);
        CHECK(m.fault_impact == 1.0);
    }
    CHECK(validate_model(model).clean());
}

TEST_CASE("model and plan documents round-trip through their serializers") {
    const auto model = mds_model();
    const auto again = io::model_from_json(io::model_to_json(model));
    CHECK(io::model_to_json(again).dump() == io::model_to_json(model).dump());

    const auto plan =
        io::plan_from_json(io::load_json_file(kData + "/scheme2_plan.json"));
    const auto plan_again = io::plan_from_json(io::plan_to_json(plan));
    CHECK(io::plan_to_json(plan_again).dump() == io::plan_to_json(plan).dump());
}

TEST_CASE("reports re-parse as JSON and carry the expected fields") {
    const auto model = mds_model();
    const auto plan = io::plan_from_json(io::load_json_file(kData + "/scheme1_plan.json"));
    const auto result = simulate(model, plan);
    const auto doc = json::parse(io::simulation_to_json(plan, result).dump());
    CHECK(doc["kpis"]["phi"] == 9);
    CHECK(doc["kpis"]["max_risk"] == 7.0);
    CHECK(doc["profile"].size() == 9);
}

TEST_CASE("missing fields fail with file, path, and violation") {
    try {
        io::model_from_json(json::parse(R"({"modules":[{"name":"x"}]})"), "m.json");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        const std::string what = e.what();
        CHECK(what.find("m.json") != std::string::npos);
        CHECK(what.find("modules[0]") != std::string::npos);
        CHECK(what.find("id") != std::string::npos);
    }

    CHECK_THROWS_AS(
        io::plan_from_json(json::parse(R"({"cycles":[{"actions":[{"type":"noop"}]}]})")),
        ParseError);
}

TEST_CASE("profile CSV prints six decimal places") {
    const auto model = mds_model();
    const auto plan = io::plan_from_json(io::load_json_file(kData + "/scheme1_plan.json"));
    const auto result = simulate(model, plan);
    const auto csv = io::profile_to_csv(result.profile);
    CHECK(csv.substr(0, 10) == "tick,risk\n");
    CHECK(csv.find("1,6.000000\n") != std::string::npos);
    CHECK(csv.find("9,0.000000\n") != std::string::npos);
    // 9 rows + header + trailing newline
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 10);
}

TEST_CASE("svg renderer is deterministic and draws one step line per profile") {
    const auto model = mds_model();
    std::vector<svg::ProfileSeries> series;
    for (const char* file : {"scheme1_plan.json", "scheme2_plan.json"}) {
        const auto plan = io::plan_from_json(io::load_json_file(kData + "/" + file));
        const auto result = simulate(model, plan);
        series.push_back({plan.label, result.profile, result.kpis.average_risk});
    }
    const auto a = svg::render_profile_svg(series);
    const auto b = svg::render_profile_svg(series);
    CHECK(a == b);
    CHECK(a.find("viewBox=\"0 0 800 400\"") != std::string::npos);
    CHECK(std::count(a.begin(), a.end(), '\n') > 10);

    std::size_t polylines = 0, dashes = 0;
    for (std::size_t at = a.find("<polyline"); at != std::string::npos;
         at = a.find("<polyline", at + 1))
        ++polylines;
    for (std::size_t at = a.find("stroke-dasharray"); at != std::string::npos;
         at = a.find("stroke-dasharray", at + 1))
        ++dashes;
    CHECK(polylines == 2);
    CHECK(dashes == 2);
    CHECK(a.find("avg 3.556") != std::string::npos);
    CHECK(a.find("avg 2.200") != std::string::npos);
}

TEST_CASE("a flat-zero profile still renders a polyline on the axis") {
    RiskProfile flat;
    for (int t = 1; t <= 4; ++t) flat.samples.push_back({t, 0.0});
    const auto out = svg::render_profile_svg({{"flat", flat, 0.0}});
    CHECK(out.find("<polyline") != std::string::npos);
}

TEST_CASE("atomic write leaves no temp file behind") {
    namespace fs = std::filesystem;
    const auto dir = fs::temp_directory_path() / "itrisk-io-test";
    fs::create_directories(dir);
    const auto target = dir / "out.txt";
    io::write_file_atomic(target.string(), "payload\n");
    std::ifstream in(target);
    std::string content((std::istreambuf_iterator<char>(in)),
                        std::istreambuf_iterator<char>());
    CHECK(content == "payload\n");
    CHECK_FALSE(fs::exists(target.string() + ".tmp"));
    fs::remove_all(dir);
}

TEST_CASE("registry, pipeline, and benchmark documents parse") {
    const auto reg =
        io::registry_from_json(io::load_json_file(kData + "/mds_registry.json"));
    CHECK(reg.versions.size() == 2);
    CHECK(reg.cases.size() == 8);

    const auto pipeline =
        io::pipeline_from_json(io::load_json_file(kData + "/mds_pipeline.json"));
    CHECK(pipeline.stages.size() == 4);
    CHECK(pipeline.context.sample_rate == 16000.0);

    const auto bench =
        io::benchmark_from_json(io::load_json_file(kData + "/ts201_benchmark.json"));
    CHECK(bench.fft_1k_complex_time == doctest::Approx(16e-6));
    CHECK(bench.cores_per_board == 2);
}
