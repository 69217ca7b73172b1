#include "itrisk/engine.hpp"

#include <map>

#include "itrisk/errors.hpp"

namespace itrisk {

namespace {

// Replay state: every hypothesis lives in one sorted map so tick totals and
// clearing sweeps are deterministic.
struct ReplayState {
    const ProductModel& model;
    std::map<std::string, FaultHypothesis> hypotheses;
    std::map<std::string, Assembly> assemblies;
    // residual hypothesis keys currently homed in each assembly
    std::map<std::string, std::vector<std::string>> residuals_of;

    explicit ReplayState(const ProductModel& m) : model(m) {}

    static std::string module_key(const std::string& id) { return "m:" + id; }
    static std::string iface_key(const InterfacePair& p) { return "i:" + p.key(); }
    static std::string residual_key(const std::string& assembly) { return "r:" + assembly; }

    double total_risk() const {
        double sum = 0.0;
        for (const auto& [_, h] : hypotheses) sum += h.risk();
        return sum;
    }

    void open_module(const std::string& id) {
        const ModuleDef* def = model.find_module(id);
        if (def == nullptr)
            throw PlanReferenceError("availability names unknown module '" + id + "'");
        FaultHypothesis h;
        h.location = HypothesisLocation::module;
        h.location_id = id;
        h.probability = def->fault_probability;
        h.impact = def->fault_impact;
        hypotheses.emplace(module_key(id), h);
    }

    // One residual per carry-in event; the same assembly carried into a later
    // cycle opens a fresh hypothesis, hence the cycle ordinal in the key.
    // Impact is the mean member impact: exactly one risk unit with default
    // impacts, and it keeps risk linear under uniform impact scaling.
    void open_residual(const std::string& assembly_id, int cycle_ordinal) {
        auto it = assemblies.find(assembly_id);
        if (it == assemblies.end())
            throw PlanReferenceError("carry_in names unknown assembly '" + assembly_id + "'");
        FaultHypothesis h;
        h.location = HypothesisLocation::assembly_residual;
        h.location_id = assembly_id;
        h.impact = mean_member_impact(it->second);
        const std::string key =
            residual_key(assembly_id) + "@" + std::to_string(cycle_ordinal);
        hypotheses.emplace(key, h);
        residuals_of[assembly_id].push_back(key);
    }

    double mean_member_impact(const Assembly& assembly) const {
        if (assembly.members.empty()) return 1.0;
        double sum = 0.0;
        for (const auto& m : assembly.members) {
            const ModuleDef* def = model.find_module(m);
            sum += def != nullptr ? def->fault_impact : 1.0;
        }
        return sum / static_cast<double>(assembly.members.size());
    }

    void open_interface(const InterfacePair& p) {
        const InterfaceDef* def = model.find_interface(p);
        if (def == nullptr)
            throw PlanReferenceError("interface " + p.key() + " is not in the model catalog");
        FaultHypothesis h;
        h.location = HypothesisLocation::interface;
        h.location_id = p.key();
        h.probability = def->fault_probability;
        h.impact = def->fault_impact;
        hypotheses.emplace(iface_key(p), h);
    }

    Assembly& assembly_for_integration(const std::string& id) {
        auto it = assemblies.find(id);
        if (it == assemblies.end()) {
            Assembly a;
            a.id = id;
            it = assemblies.emplace(id, std::move(a)).first;
        }
        return it->second;
    }

    void integrate(const PlanAction& action) {
        Assembly& target = assembly_for_integration(action.target_assembly);
        for (const auto& merged_id : action.merged_assemblies) {
            auto it = assemblies.find(merged_id);
            if (it == assemblies.end() || merged_id == target.id)
                throw PlanReferenceError("action " + action.id + " merges unknown assembly '" +
                                         merged_id + "'");
            target.members.insert(it->second.members.begin(), it->second.members.end());
            target.internal_interfaces.insert(it->second.internal_interfaces.begin(),
                                              it->second.internal_interfaces.end());
            auto res = residuals_of.find(merged_id);
            if (res != residuals_of.end()) {
                auto& keys = residuals_of[target.id];
                keys.insert(keys.end(), res->second.begin(), res->second.end());
                residuals_of.erase(res);
            }
            assemblies.erase(it);
        }
        for (const auto& m : action.added_modules) {
            if (!model.has_module(m))
                throw PlanReferenceError("action " + action.id + " adds unknown module '" + m +
                                         "'");
            target.members.insert(m);
        }
        for (const auto& p : action.introduced_interfaces) {
            open_interface(p);
            target.internal_interfaces.insert(p.canonical());
        }
    }

    // Returns the number of hypotheses touched; 0 on an empty assembly.
    int run_test(const PlanAction& action) {
        auto it = assemblies.find(action.target_assembly);
        if (it == assemblies.end())
            throw PlanReferenceError("action " + action.id + " tests unknown assembly '" +
                                     action.target_assembly + "'");
        const Assembly& target = it->second;

        std::vector<std::string> keys;
        for (const auto& m : target.members) keys.push_back(module_key(m));
        for (const auto& p : target.internal_interfaces) keys.push_back(iface_key(p));
        auto res = residuals_of.find(target.id);
        if (res != residuals_of.end())
            keys.insert(keys.end(), res->second.begin(), res->second.end());

        const double remainder = 1.0 - action.effectiveness;
        int touched = 0;
        for (const auto& key : keys) {
            auto h = hypotheses.find(key);
            if (h == hypotheses.end() || h->second.state != HypothesisState::open) continue;
            ++touched;
            if (remainder <= 0.0)
                h->second.state = HypothesisState::cleared;
            else
                h->second.probability *= remainder;
        }
        return touched;
    }
};

} // namespace

SimulationResult simulate(const ProductModel& model, const IntegrationPlan& plan) {
    if (plan.cycles.empty())
        throw ArgumentError("plan has no cycles; a zero-length timeline is invalid");

    ReplayState state(model);
    SimulationResult result;
    int tick = 0;
    double cost = 0.0;

    auto sample = [&](int at) {
        result.profile.samples.push_back({at, state.total_risk()});
    };

    for (std::size_t ci = 0; ci < plan.cycles.size(); ++ci) {
        const auto& cycle = plan.cycles[ci];
        // Availability tick: new modules plus one residual per carried assembly.
        ++tick;
        for (const auto& m : cycle.available_modules) state.open_module(m);
        for (const auto& a : cycle.carried_assemblies)
            state.open_residual(a, static_cast<int>(ci));
        sample(tick);
        result.events.push_back({tick, EventKind::availability, "", state.total_risk(),
                                 "cycle " + cycle.label + " availability"});

        for (const auto& action : cycle.actions) {
            if (action.duration < 1)
                throw ArgumentError("action " + action.id + " has non-positive duration");
            // Occupied ticks before completion carry the unchanged risk level.
            for (int i = 1; i < action.duration; ++i) sample(++tick);
            ++tick;
            if (action.kind == ActionKind::integrate) {
                state.integrate(action);
                sample(tick);
                result.events.push_back({tick, EventKind::integrate, action.id,
                                         state.total_risk(), ""});
            } else {
                const int touched = state.run_test(action);
                sample(tick);
                result.events.push_back({tick, EventKind::test, action.id, state.total_risk(),
                                         ""});
                if (touched == 0)
                    result.events.push_back({tick, EventKind::warning, action.id,
                                             state.total_risk(),
                                             "test cleared nothing in assembly '" +
                                                 action.target_assembly + "'"});
            }
            cost += action.cost;
        }

        result.cycle_kpis.push_back(
            {cycle.label, tick, cost, state.total_risk()});
    }

    result.kpis = kpis(result.profile, plan);
    return result;
}

KpiReport kpis(const RiskProfile& profile, const IntegrationPlan& plan) {
    KpiReport report;
    report.phi = static_cast<int>(profile.samples.size());
    for (const auto& cycle : plan.cycles)
        for (const auto& action : cycle.actions) report.cost += action.cost;
    report.remaining_risk = profile.final_risk();
    for (const auto& s : profile.samples) report.total_risk_area += s.risk;
    report.average_risk = report.phi > 0 ? report.total_risk_area / report.phi : 0.0;
    return report;
}

} // namespace itrisk
