#include "itrisk/io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "itrisk/errors.hpp"

namespace itrisk::io {

namespace {

[[noreturn]] void fail(const std::string& source, const std::string& where,
                       const std::string& what) {
    throw ParseError(source, where, what);
}

const json& expect(const json& doc, const char* key, const std::string& source,
                   const std::string& where) {
    auto it = doc.find(key);
    if (it == doc.end()) fail(source, where, std::string("missing field '") + key + "'");
    return *it;
}

std::string get_string(const json& doc, const char* key, const std::string& source,
                       const std::string& where) {
    const auto& v = expect(doc, key, source, where);
    if (!v.is_string()) fail(source, where, std::string("field '") + key + "' must be a string");
    return v.get<std::string>();
}

double get_number(const json& doc, const char* key, const std::string& source,
                  const std::string& where, double fallback, bool required = false) {
    auto it = doc.find(key);
    if (it == doc.end()) {
        if (required) fail(source, where, std::string("missing field '") + key + "'");
        return fallback;
    }
    if (!it->is_number()) fail(source, where, std::string("field '") + key + "' must be a number");
    return it->get<double>();
}

std::vector<std::string> get_string_array(const json& v, const std::string& source,
                                          const std::string& where) {
    if (!v.is_array()) fail(source, where, "expected an array of strings");
    std::vector<std::string> out;
    for (const auto& item : v) {
        if (!item.is_string()) fail(source, where, "expected an array of strings");
        out.push_back(item.get<std::string>());
    }
    return out;
}

InterfacePair pair_from_json(const json& v, const std::string& source,
                             const std::string& where) {
    if (!v.is_array() || v.size() != 2 || !v[0].is_string() || !v[1].is_string())
        fail(source, where, "interface must be a two-string array");
    return {v[0].get<std::string>(), v[1].get<std::string>()};
}

} // namespace

std::string format_fixed(double value, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", decimals, value);
    return buf;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path, "", "cannot open file");
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw ParseError(path, "", e.what());
    }
    return doc;
}

ProductModel model_from_json(const json& doc, const std::string& source) {
    ProductModel model;
    const auto& modules = expect(doc, "modules", source, "$");
    if (!modules.is_array()) fail(source, "modules", "must be an array");
    for (std::size_t i = 0; i < modules.size(); ++i) {
        const std::string where = "modules[" + std::to_string(i) + "]";
        const auto& m = modules[i];
        ModuleDef def;
        def.id = get_string(m, "id", source, where);
        def.name = m.contains("name") ? get_string(m, "name", source, where) : def.id;
        def.fault_probability = get_number(m, "p", source, where, 1.0);
        def.fault_impact = get_number(m, "impact", source, where, 1.0);
        model.modules.push_back(std::move(def));
    }
    if (doc.contains("interfaces")) {
        const auto& interfaces = doc["interfaces"];
        if (!interfaces.is_array()) fail(source, "interfaces", "must be an array");
        for (std::size_t i = 0; i < interfaces.size(); ++i) {
            const std::string where = "interfaces[" + std::to_string(i) + "]";
            const auto& f = interfaces[i];
            InterfaceDef def;
            def.ends.a = get_string(f, "a", source, where);
            def.ends.b = get_string(f, "b", source, where);
            def.fault_probability = get_number(f, "p", source, where, 1.0);
            def.fault_impact = get_number(f, "impact", source, where, 1.0);
            model.interfaces.push_back(std::move(def));
        }
    }
    if (doc.contains("precedence")) {
        const auto& precedence = doc["precedence"];
        if (!precedence.is_array()) fail(source, "precedence", "must be an array");
        for (std::size_t i = 0; i < precedence.size(); ++i) {
            const std::string where = "precedence[" + std::to_string(i) + "]";
            const auto p = pair_from_json(precedence[i], source, where);
            model.precedence.emplace_back(p.a, p.b);
        }
    }
    return model;
}

IntegrationPlan plan_from_json(const json& doc, const std::string& source) {
    IntegrationPlan plan;
    if (doc.contains("label")) plan.label = get_string(doc, "label", source, "$");
    const auto& cycles = expect(doc, "cycles", source, "$");
    if (!cycles.is_array()) fail(source, "cycles", "must be an array");
    for (std::size_t ci = 0; ci < cycles.size(); ++ci) {
        const std::string cyc = "cycles[" + std::to_string(ci) + "]";
        const auto& c = cycles[ci];
        DesignCycle cycle;
        cycle.label =
            c.contains("label") ? get_string(c, "label", source, cyc) : "k" + std::to_string(ci + 1);
        if (c.contains("available"))
            cycle.available_modules = get_string_array(c["available"], source, cyc);
        if (c.contains("carry_in"))
            cycle.carried_assemblies = get_string_array(c["carry_in"], source, cyc);
        if (c.contains("actions")) {
            const auto& actions = c["actions"];
            if (!actions.is_array()) fail(source, cyc, "actions must be an array");
            for (std::size_t ai = 0; ai < actions.size(); ++ai) {
                const std::string where = cyc + ".actions[" + std::to_string(ai) + "]";
                const auto& a = actions[ai];
                PlanAction action;
                const std::string type = get_string(a, "type", source, where);
                if (type == "integrate")
                    action.kind = ActionKind::integrate;
                else if (type == "test")
                    action.kind = ActionKind::test;
                else
                    fail(source, where, "type must be 'integrate' or 'test', got '" + type + "'");
                action.id = get_string(a, "id", source, where);
                action.target_assembly = get_string(a, "assembly", source, where);
                if (a.contains("add"))
                    action.added_modules = get_string_array(a["add"], source, where);
                if (a.contains("merge"))
                    action.merged_assemblies = get_string_array(a["merge"], source, where);
                if (a.contains("interfaces")) {
                    const auto& ifs = a["interfaces"];
                    if (!ifs.is_array()) fail(source, where, "interfaces must be an array");
                    for (const auto& p : ifs)
                        action.introduced_interfaces.push_back(
                            pair_from_json(p, source, where));
                }
                action.duration =
                    static_cast<int>(get_number(a, "duration", source, where, 1.0));
                action.cost = get_number(a, "cost", source, where, 1.0);
                action.effectiveness = get_number(a, "effectiveness", source, where, 1.0);
                cycle.actions.push_back(std::move(action));
            }
        }
        plan.cycles.push_back(std::move(cycle));
    }
    return plan;
}

testset::TestSetRegistry registry_from_json(const json& doc, const std::string& source) {
    testset::TestSetRegistry reg;
    reg.versions = get_string_array(expect(doc, "versions", source, "$"), source, "versions");
    if (doc.contains("requirements")) {
        const auto& reqs = doc["requirements"];
        if (!reqs.is_object()) fail(source, "requirements", "must be an object");
        for (const auto& [version, tags] : reqs.items()) {
            const auto list = get_string_array(tags, source, "requirements." + version);
            reg.requirements[version] = std::set<std::string>(list.begin(), list.end());
        }
    }
    if (doc.contains("cases")) {
        const auto& cases = doc["cases"];
        if (!cases.is_array()) fail(source, "cases", "must be an array");
        for (std::size_t i = 0; i < cases.size(); ++i) {
            const std::string where = "cases[" + std::to_string(i) + "]";
            const auto& c = cases[i];
            testset::TestCase tc;
            tc.id = get_string(c, "id", source, where);
            const auto tags = get_string_array(expect(c, "tags", source, where), source, where);
            tc.tags = std::set<std::string>(tags.begin(), tags.end());
            tc.introduced_in = get_string(c, "introduced_in", source, where);
            reg.cases.push_back(std::move(tc));
        }
    }
    return reg;
}

budget::ProcessorBenchmark benchmark_from_json(const json& doc, const std::string& source) {
    budget::ProcessorBenchmark bench;
    bench.name = doc.contains("name") ? get_string(doc, "name", source, "$") : "benchmark";
    bench.fft_1k_complex_time =
        get_number(doc, "fft_1k_complex_time", source, "$", 0.0, true);
    bench.fir_per_tap_time = get_number(doc, "fir_per_tap_time", source, "$", 0.0, true);
    bench.io_rate = get_number(doc, "io_rate", source, "$", 0.0);
    bench.cores_per_board =
        static_cast<int>(get_number(doc, "cores_per_board", source, "$", 1.0));
    return bench;
}

PipelineDoc pipeline_from_json(const json& doc, const std::string& source) {
    PipelineDoc out;
    if (doc.contains("context")) {
        const auto& c = doc["context"];
        out.context.sample_rate = get_number(c, "sample_rate", source, "context", 0.0);
        out.context.sound_speed = get_number(c, "sound_speed", source, "context", 1500.0);
        out.context.pri = get_number(c, "pri", source, "context", 0.0);
        out.context.beams =
            static_cast<std::uint64_t>(get_number(c, "beams", source, "context", 1.0));
    }
    const auto& stages = expect(doc, "stages", source, "$");
    if (!stages.is_array()) fail(source, "stages", "must be an array");
    for (std::size_t i = 0; i < stages.size(); ++i) {
        const std::string where = "stages[" + std::to_string(i) + "]";
        const auto& s = stages[i];
        budget::PipelineStage stage;
        stage.name = get_string(s, "name", source, where);
        const std::string kind = get_string(s, "kind", source, where);
        if (kind == "fft")
            stage.kind = budget::StageKind::fft;
        else if (kind == "correlation")
            stage.kind = budget::StageKind::correlation;
        else if (kind == "cfar")
            stage.kind = budget::StageKind::cfar;
        else if (kind == "pdp")
            stage.kind = budget::StageKind::pdp;
        else if (kind == "custom")
            stage.kind = budget::StageKind::custom;
        else
            fail(source, where, "unknown stage kind '" + kind + "'");
        stage.channels =
            static_cast<std::uint64_t>(get_number(s, "channels", source, where, 1.0));
        stage.deadline = get_number(s, "deadline", source, where, 0.0, true);
        stage.word_bits = static_cast<int>(get_number(s, "word_bits", source, where, 16.0));
        if (s.contains("params")) {
            const auto& p = s["params"];
            if (!p.is_object()) fail(source, where, "params must be an object");
            auto take = [&](const char* key) -> std::optional<std::uint64_t> {
                if (!p.contains(key)) return std::nullopt;
                if (!p[key].is_number())
                    fail(source, where, std::string("param '") + key + "' must be a number");
                return static_cast<std::uint64_t>(p[key].get<double>());
            };
            stage.n_points = take("n_points");
            stage.points = take("points");
            stage.refs = take("refs");
            stage.window_cells = take("window_cells");
            stage.max_targets = take("max_targets");
            stage.op_count = take("op_count");
            if (p.contains("via_fft")) {
                if (!p["via_fft"].is_boolean())
                    fail(source, where, "param 'via_fft' must be a boolean");
                stage.via_fft = p["via_fft"].get<bool>();
            }
        }
        out.stages.push_back(std::move(stage));
    }
    return out;
}

json model_to_json(const ProductModel& model) {
    json doc;
    doc["modules"] = json::array();
    for (const auto& m : model.modules) {
        json j;
        j["id"] = m.id;
        j["name"] = m.name;
        j["p"] = m.fault_probability;
        j["impact"] = m.fault_impact;
        doc["modules"].push_back(j);
    }
    doc["interfaces"] = json::array();
    for (const auto& f : model.interfaces) {
        json j;
        j["a"] = f.ends.a;
        j["b"] = f.ends.b;
        j["p"] = f.fault_probability;
        j["impact"] = f.fault_impact;
        doc["interfaces"].push_back(j);
    }
    doc["precedence"] = json::array();
    for (const auto& [from, to] : model.precedence)
        doc["precedence"].push_back(json::array({from, to}));
    return doc;
}

json plan_to_json(const IntegrationPlan& plan) {
    json doc;
    doc["label"] = plan.label;
    doc["cycles"] = json::array();
    for (const auto& cycle : plan.cycles) {
        json c;
        c["label"] = cycle.label;
        c["available"] = cycle.available_modules;
        c["carry_in"] = cycle.carried_assemblies;
        c["actions"] = json::array();
        for (const auto& action : cycle.actions) {
            json a;
            a["type"] = action.kind == ActionKind::integrate ? "integrate" : "test";
            a["id"] = action.id;
            a["assembly"] = action.target_assembly;
            if (action.kind == ActionKind::integrate) {
                a["add"] = action.added_modules;
                json ifs = json::array();
                for (const auto& p : action.introduced_interfaces)
                    ifs.push_back(json::array({p.a, p.b}));
                a["interfaces"] = ifs;
                if (!action.merged_assemblies.empty()) a["merge"] = action.merged_assemblies;
            } else {
                a["effectiveness"] = action.effectiveness;
            }
            a["duration"] = action.duration;
            a["cost"] = action.cost;
            c["actions"].push_back(a);
        }
        doc["cycles"].push_back(c);
    }
    return doc;
}

json validation_to_json(const ValidationReport& report) {
    json doc = json::array();
    for (const auto& issue : report.issues) {
        json j;
        j["severity"] = issue.severity == Severity::error ? "error" : "warning";
        j["location"] = issue.location;
        j["message"] = issue.message;
        doc.push_back(j);
    }
    return doc;
}

namespace {

json kpis_to_json(const KpiReport& kpis, double max_risk) {
    json j;
    j["phi"] = kpis.phi;
    j["cost"] = kpis.cost;
    j["remaining_risk"] = kpis.remaining_risk;
    j["total_risk_area"] = kpis.total_risk_area;
    j["average_risk"] = kpis.average_risk;
    j["max_risk"] = max_risk;
    return j;
}

} // namespace

json simulation_to_json(const IntegrationPlan& plan, const SimulationResult& result) {
    json doc;
    doc["plan"] = plan.label;
    doc["kpis"] = kpis_to_json(result.kpis, result.profile.max_risk());
    doc["cycles"] = json::array();
    for (const auto& c : result.cycle_kpis) {
        json j;
        j["label"] = c.label;
        j["phi_cumulative"] = c.phi_cumulative;
        j["cost_cumulative"] = c.cost_cumulative;
        j["remaining_risk"] = c.remaining_risk;
        doc["cycles"].push_back(j);
    }
    doc["profile"] = json::array();
    for (const auto& s : result.profile.samples)
        doc["profile"].push_back(json::array({s.tick, s.risk}));
    doc["events"] = json::array();
    for (const auto& e : result.events) {
        json j;
        j["tick"] = e.tick;
        switch (e.kind) {
        case EventKind::availability: j["kind"] = "availability"; break;
        case EventKind::integrate: j["kind"] = "integrate"; break;
        case EventKind::test: j["kind"] = "test"; break;
        case EventKind::warning: j["kind"] = "warning"; break;
        }
        j["action"] = e.action_id;
        j["risk_after"] = e.risk_after;
        if (!e.note.empty()) j["note"] = e.note;
        doc["events"].push_back(j);
    }
    return doc;
}

json comparison_to_json(const ComparisonReport& report) {
    json doc;
    doc["plans"] = json::array();
    for (const auto& p : report.plans) {
        json j;
        j["label"] = p.label;
        j["kpis"] = kpis_to_json(p.kpis, p.max_risk);
        doc["plans"].push_back(j);
    }
    doc["deltas"] = json::array();
    for (const auto& d : report.deltas) {
        json j;
        j["label"] = d.label;
        j["phi"] = d.phi;
        j["cost"] = d.cost;
        j["total_risk_area"] = d.total_risk_area;
        j["average_risk"] = d.average_risk;
        j["max_risk"] = d.max_risk;
        doc["deltas"].push_back(j);
    }
    doc["winners"] = json::object();
    for (const auto& [objective, label] : report.winners) doc["winners"][objective] = label;
    return doc;
}

json optimize_to_json(const OptimizeResult& result) {
    json doc = comparison_to_json(result.report);
    doc["best_plan"] = plan_to_json(result.best);
    doc["plans_explored"] = result.plans_explored;
    return doc;
}

json budget_to_json(const budget::BudgetReport& report) {
    json doc;
    doc["stages"] = json::array();
    for (const auto& s : report.stages) {
        json j;
        j["name"] = s.name;
        j["kind"] = budget::to_string(s.kind);
        j["op_count"] = s.op_count;
        j["units"] = s.units;
        j["per_unit_deadline"] = s.per_unit_deadline;
        j["time_per_op"] = s.time_per_op;
        j["scaled_stage_time"] = s.scaled_stage_time;
        j["required_processors"] = s.required_processors;
        j["feasible"] = s.feasible;
        j["acquisition_bits"] = s.acquisition_bits;
        j["buffer_bits"] = s.buffer_bits;
        j["data_rate"] = s.data_rate;
        doc["stages"].push_back(j);
    }
    json totals;
    totals["processors"] = report.total_processors;
    totals["boards"] = report.boards;
    totals["acquisition_memory_bits"] = report.acquisition_memory_bits;
    totals["acquisition_memory_kib"] =
        static_cast<double>(report.acquisition_memory_bits) / budget::kBitsPerKiB;
    totals["buffer_bits"] = report.buffer_bits;
    totals["buffer_kib"] = static_cast<double>(report.buffer_bits) / budget::kBitsPerKiB;
    totals["aggregate_data_rate"] = report.aggregate_data_rate;
    totals["io_rate"] = report.io_rate;
    totals["all_feasible"] = report.all_feasible;
    doc["totals"] = totals;
    return doc;
}

json reuse_to_json(const testset::ReuseDelta& delta) {
    json doc;
    doc["reusable"] = delta.reusable;
    doc["uncovered_tags"] =
        std::vector<std::string>(delta.uncovered_tags.begin(), delta.uncovered_tags.end());
    return doc;
}

json cover_to_json(const testset::CoverResult& cover) {
    json doc;
    doc["cases"] = cover.cases;
    doc["overlaps"] = json::array();
    for (const auto& o : cover.overlaps) {
        json j;
        j["case_a"] = o.case_a;
        j["case_b"] = o.case_b;
        j["shared_tags"] = o.shared_tags;
        doc["overlaps"].push_back(j);
    }
    return doc;
}

std::string budget_to_text(const budget::BudgetReport& report) {
    std::ostringstream os;
    char line[256];
    std::snprintf(line, sizeof(line), "%-20s %-12s %14s %12s %14s %14s %6s %9s\n", "stage",
                  "kind", "ops", "units", "deadline/unit", "time/unit", "procs", "feasible");
    os << line;
    for (const auto& s : report.stages) {
        std::snprintf(line, sizeof(line), "%-20s %-12s %14llu %12llu %12.4gs %12.4gs %6d %9s\n",
                      s.name.c_str(), budget::to_string(s.kind).c_str(),
                      static_cast<unsigned long long>(s.op_count),
                      static_cast<unsigned long long>(s.units), s.per_unit_deadline,
                      s.scaled_stage_time, s.required_processors, s.feasible ? "yes" : "NO");
        os << line;
    }
    os << "\n";
    os << "total processors:    " << report.total_processors << "\n";
    os << "boards:              " << report.boards << "\n";
    os << "acquisition memory:  " << report.acquisition_memory_bits << " bits ("
       << format_fixed(static_cast<double>(report.acquisition_memory_bits) /
                           budget::kBitsPerKiB,
                       1)
       << " KiB)\n";
    os << "buffer memory:       " << report.buffer_bits << " bits ("
       << format_fixed(static_cast<double>(report.buffer_bits) / budget::kBitsPerKiB, 1)
       << " KiB)\n";
    os << "aggregate data rate: " << format_fixed(report.aggregate_data_rate, 0)
       << " B/s against io rate " << format_fixed(report.io_rate, 0) << " B/s\n";
    return os.str();
}

std::string profile_to_csv(const RiskProfile& profile) {
    std::string out = "tick,risk\n";
    for (const auto& s : profile.samples) {
        out += std::to_string(s.tick);
        out += ",";
        out += format_fixed(s.risk, 6);
        out += "\n";
    }
    return out;
}

void write_file_atomic(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error("cannot write to " + tmp.string());
        out << content;
        if (!out.good()) throw Error("short write to " + tmp.string());
    }
    fs::rename(tmp, target);
}

} // namespace itrisk::io
