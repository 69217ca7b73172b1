#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "itrisk/budget.hpp"
#include "itrisk/engine.hpp"
#include "itrisk/model.hpp"
#include "itrisk/plan.hpp"
#include "itrisk/strategy.hpp"
#include "itrisk/testset.hpp"

namespace itrisk::io {

using json = nlohmann::json;

// ---- parsing (ParseError on schema violations; `source` names the file) ----

ProductModel model_from_json(const json& doc, const std::string& source = "<model>");
IntegrationPlan plan_from_json(const json& doc, const std::string& source = "<plan>");
testset::TestSetRegistry registry_from_json(const json& doc,
                                            const std::string& source = "<registry>");
budget::ProcessorBenchmark benchmark_from_json(const json& doc,
                                               const std::string& source = "<benchmark>");

struct PipelineDoc {
    std::vector<budget::PipelineStage> stages;
    budget::SignalContext context;
};
PipelineDoc pipeline_from_json(const json& doc, const std::string& source = "<pipeline>");

json load_json_file(const std::string& path);

// ---- serialization (stable key order, no timestamps) ----

json model_to_json(const ProductModel& model);
json plan_to_json(const IntegrationPlan& plan);

json validation_to_json(const ValidationReport& report);
json simulation_to_json(const IntegrationPlan& plan, const SimulationResult& result);
json comparison_to_json(const ComparisonReport& report);
json optimize_to_json(const OptimizeResult& result);
json budget_to_json(const budget::BudgetReport& report);
json reuse_to_json(const testset::ReuseDelta& delta);
json cover_to_json(const testset::CoverResult& cover);

/// Aligned fixed-width text rendering of a budget report.
std::string budget_to_text(const budget::BudgetReport& report);

/// header `tick,risk`, one row per tick, risk with 6 decimal places.
std::string profile_to_csv(const RiskProfile& profile);

/// Write via temp file + rename so readers never see a partial file.
void write_file_atomic(const std::string& path, const std::string& content);

std::string format_fixed(double value, int decimals);

} // namespace itrisk::io
