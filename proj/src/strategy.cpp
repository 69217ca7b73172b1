#include "itrisk/strategy.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "itrisk/errors.hpp"

namespace itrisk {

namespace {

constexpr const char* kAssemblyId = "A1";

// Catalog interfaces introduced by adding `step` to an assembly whose member
// set is `members`: both endpoints inside members+step, at least one in step.
std::vector<InterfacePair> interfaces_for_step(const ProductModel& model,
                                               const std::vector<std::string>& step,
                                               const std::set<std::string>& members) {
    const std::set<std::string> added(step.begin(), step.end());
    std::vector<InterfacePair> out;
    for (const auto& iface : model.interfaces) {
        const bool a_new = added.count(iface.ends.a) > 0;
        const bool b_new = added.count(iface.ends.b) > 0;
        const bool a_in = a_new || members.count(iface.ends.a) > 0;
        const bool b_in = b_new || members.count(iface.ends.b) > 0;
        if (a_in && b_in && (a_new || b_new)) out.push_back(iface.ends);
    }
    return out;
}

// Every module of `step` needs its predecessors integrated already or
// co-added in the same step. Returns the first violated (pred, module) pair.
std::optional<std::pair<std::string, std::string>> precedence_violation(
    const ProductModel& model, const std::vector<std::string>& step,
    const std::set<std::string>& integrated) {
    const std::set<std::string> added(step.begin(), step.end());
    for (const auto& m : step) {
        for (const auto& pred : model.predecessors_of(m)) {
            if (!integrated.count(pred) && !added.count(pred))
                return std::make_pair(pred, m);
        }
    }
    return std::nullopt;
}

struct CycleSpec {
    std::vector<std::string> available;
    IntegrationSteps steps;
};

// Shared plan assembler behind both builders and the optimizer. Each cycle
// spec lists its availability block and its integration steps; steps grow
// the single assembly chain with one test after each integrate.
IntegrationPlan build_plan_core(const ProductModel& model, const std::vector<CycleSpec>& cycles,
                                const std::string& label, bool require_full_integration) {
    IntegrationPlan plan;
    plan.label = label;

    std::set<std::string> available_so_far;
    std::set<std::string> integrated;
    int action_counter = 0;
    bool assembly_exists = false;

    for (std::size_t ci = 0; ci < cycles.size(); ++ci) {
        const auto& spec = cycles[ci];
        DesignCycle cycle;
        cycle.label = "k" + std::to_string(ci + 1);
        cycle.available_modules = spec.available;
        if (assembly_exists) cycle.carried_assemblies.push_back(kAssemblyId);

        for (const auto& m : spec.available) {
            if (!model.has_module(m))
                throw BuildError("unknown module '" + m + "' in cycle " + cycle.label);
            if (!available_so_far.insert(m).second)
                throw BuildError("module '" + m + "' appears in more than one cycle");
        }

        for (const auto& step : spec.steps) {
            if (step.empty()) throw BuildError("empty integration step in cycle " + cycle.label);
            for (const auto& m : step) {
                if (!available_so_far.count(m))
                    throw BuildError("step integrates '" + m + "' before it is available");
                if (integrated.count(m))
                    throw BuildError("module '" + m + "' integrated twice");
            }
            if (const auto violation = precedence_violation(model, step, integrated))
                throw BuildError("precedence violation: '" + violation->first +
                                 "' must be integrated before '" + violation->second + "'");
            const auto interfaces = interfaces_for_step(model, step, integrated);
            if (interfaces.empty())
                throw BuildError("step adding '" + step.front() +
                                 "' introduces no catalog interface");

            ++action_counter;
            PlanAction integrate;
            integrate.kind = ActionKind::integrate;
            integrate.id = "I" + std::to_string(action_counter);
            integrate.target_assembly = kAssemblyId;
            integrate.added_modules = step;
            integrate.introduced_interfaces = interfaces;
            cycle.actions.push_back(integrate);

            PlanAction test;
            test.kind = ActionKind::test;
            test.id = "T" + std::to_string(action_counter);
            test.target_assembly = kAssemblyId;
            cycle.actions.push_back(test);

            integrated.insert(step.begin(), step.end());
            assembly_exists = true;
        }

        plan.cycles.push_back(std::move(cycle));
    }

    if (require_full_integration && model.modules.size() > 1 &&
        integrated.size() != available_so_far.size()) {
        for (const auto& m : available_so_far)
            if (!integrated.count(m))
                throw BuildError("module '" + m + "' is never integrated");
    }

    return plan;
}

void fill_deltas(ComparisonReport& report) {
    const auto& base = report.plans.front();
    for (std::size_t i = 1; i < report.plans.size(); ++i) {
        const auto& p = report.plans[i];
        PlanDelta d;
        d.label = p.label;
        d.phi = p.kpis.phi - base.kpis.phi;
        d.cost = p.kpis.cost - base.kpis.cost;
        d.total_risk_area = p.kpis.total_risk_area - base.kpis.total_risk_area;
        d.average_risk = p.kpis.average_risk - base.kpis.average_risk;
        d.max_risk = p.max_risk - base.max_risk;
        report.deltas.push_back(d);
    }
}

std::string canonical_identity(const IntegrationPlan& plan) {
    std::ostringstream os;
    for (const auto& cycle : plan.cycles) {
        os << '[';
        for (const auto& m : cycle.available_modules) os << m << ',';
        os << '!';
        for (const auto& action : cycle.actions) {
            os << (action.kind == ActionKind::integrate ? 'I' : 'T') << ':';
            for (const auto& m : action.added_modules) os << m << ',';
            os << ';';
        }
        os << ']';
    }
    return os.str();
}

} // namespace

std::string to_string(ObjectiveKind kind) {
    switch (kind) {
    case ObjectiveKind::average_risk: return "average_risk";
    case ObjectiveKind::max_risk: return "max_risk";
    case ObjectiveKind::duration: return "duration";
    case ObjectiveKind::weighted: return "weighted";
    }
    return "?";
}

double objective_value(const StrategyObjective& objective, const KpiReport& kpis,
                       const RiskProfile& profile) {
    switch (objective.kind) {
    case ObjectiveKind::average_risk: return kpis.average_risk;
    case ObjectiveKind::max_risk: return profile.max_risk();
    case ObjectiveKind::duration: return static_cast<double>(kpis.phi);
    case ObjectiveKind::weighted: {
        double positive = 0.0;
        double value = 0.0;
        for (const auto& [kind, weight] : objective.weights) {
            if (kind == ObjectiveKind::weighted)
                throw ArgumentError("weighted objective cannot weight itself");
            if (weight < 0.0) throw ArgumentError("objective weights must be nonnegative");
            positive += weight;
            StrategyObjective base{kind, {}};
            value += weight * objective_value(base, kpis, profile);
        }
        if (positive <= 0.0)
            throw ArgumentError("weighted objective needs at least one positive weight");
        return value;
    }
    }
    throw ArgumentError("unknown objective kind");
}

IntegrationSteps default_step_grouping(const ProductModel& model,
                                       const std::vector<std::string>& pending,
                                       const std::set<std::string>& integrated) {
    IntegrationSteps steps;
    std::set<std::string> members = integrated;
    std::size_t consumed = 0;
    while (consumed < pending.size()) {
        // Grow the step until it introduces a catalog interface; modules left
        // over when that never happens are deferred to a later cycle.
        std::vector<std::string> step;
        std::size_t take = consumed;
        step.push_back(pending[take++]);
        while (interfaces_for_step(model, step, members).empty() && take < pending.size())
            step.push_back(pending[take++]);
        if (interfaces_for_step(model, step, members).empty()) break;
        members.insert(step.begin(), step.end());
        steps.push_back(std::move(step));
        consumed = take;
    }
    return steps;
}

IntegrationPlan build_conventional_plan(const ProductModel& model,
                                        const IntegrationSteps& order) {
    std::set<std::string> covered;
    for (const auto& step : order) covered.insert(step.begin(), step.end());
    for (const auto& m : model.modules)
        if (!covered.count(m.id) && model.modules.size() > 1)
            throw BuildError("order does not cover module '" + m.id + "'");

    CycleSpec spec;
    spec.available = model.module_ids();
    if (model.modules.size() > 1) spec.steps = order;
    return build_plan_core(model, {spec}, "conventional", true);
}

IntegrationPlan build_adaptive_plan(const ProductModel& model,
                                    const std::vector<std::vector<std::string>>& partition,
                                    const std::vector<IntegrationSteps>* per_cycle_steps) {
    if (partition.empty()) throw BuildError("partition has no blocks");
    if (per_cycle_steps && per_cycle_steps->size() != partition.size())
        throw BuildError("per-cycle steps must match the partition block count");

    std::set<std::string> seen;
    for (const auto& block : partition) {
        if (block.empty()) throw BuildError("partition has an empty block");
        for (const auto& m : block) {
            if (!model.has_module(m)) throw BuildError("unknown module '" + m + "' in partition");
            if (!seen.insert(m).second)
                throw BuildError("module '" + m + "' appears in two partition blocks");
        }
    }
    for (const auto& m : model.modules)
        if (!seen.count(m.id)) throw BuildError("partition does not cover module '" + m.id + "'");

    std::vector<CycleSpec> cycles;
    std::vector<std::string> pending;
    std::set<std::string> integrated;
    for (std::size_t ci = 0; ci < partition.size(); ++ci) {
        CycleSpec spec;
        spec.available = partition[ci];
        pending.insert(pending.end(), partition[ci].begin(), partition[ci].end());
        if (per_cycle_steps) {
            spec.steps = (*per_cycle_steps)[ci];
            std::set<std::string> used;
            for (const auto& step : spec.steps) used.insert(step.begin(), step.end());
            std::vector<std::string> next;
            for (const auto& m : pending)
                if (!used.count(m)) next.push_back(m);
            pending = std::move(next);
        } else {
            spec.steps = default_step_grouping(model, pending, integrated);
            std::size_t grouped = 0;
            for (const auto& step : spec.steps) grouped += step.size();
            pending.erase(pending.begin(), pending.begin() + grouped);
        }
        for (const auto& step : spec.steps) integrated.insert(step.begin(), step.end());
        cycles.push_back(std::move(spec));
    }

    return build_plan_core(model, cycles, "adaptive", true);
}

ValidationReport validate_plan(const ProductModel& model, const IntegrationPlan& plan) {
    ValidationReport report;
    if (plan.cycles.empty()) {
        report.add_error("plan", "plan has no cycles");
        return report;
    }

    std::set<std::string> available;
    std::set<std::string> integrated;
    std::set<std::string> assemblies_seen;
    std::set<std::string> interfaces_introduced;
    std::map<std::string, std::set<std::string>> assembly_members;
    bool all_full_effectiveness = true;

    for (const auto& cycle : plan.cycles) {
        const std::string cyc = "cycle " + cycle.label;
        for (const auto& m : cycle.available_modules) {
            if (!model.has_module(m))
                report.add_error(cyc, "availability names unknown module '" + m + "'");
            else if (!available.insert(m).second)
                report.add_error(cyc, "module '" + m + "' made available twice");
        }
        for (const auto& a : cycle.carried_assemblies) {
            if (!assemblies_seen.count(a))
                report.add_error(cyc, "carry_in names assembly '" + a +
                                          "' that no earlier cycle created");
        }

        for (const auto& action : cycle.actions) {
            const std::string where = cyc + "/action " + action.id;
            if (action.duration < 1) report.add_error(where, "duration must be >= 1");
            if (action.cost < 0.0) report.add_error(where, "cost must be nonnegative");
            if (action.target_assembly.empty())
                report.add_error(where, "missing target assembly");

            if (action.kind == ActionKind::integrate) {
                if (action.added_modules.empty() && action.merged_assemblies.empty())
                    report.add_error(where, "integrate adds no module and merges no assembly");
                if (action.introduced_interfaces.empty())
                    report.add_error(where, "integrate declares no interface");
                for (const auto& merged : action.merged_assemblies) {
                    if (!assemblies_seen.count(merged))
                        report.add_error(where, "merges unknown assembly '" + merged + "'");
                    else {
                        auto& target = assembly_members[action.target_assembly];
                        auto& source = assembly_members[merged];
                        target.insert(source.begin(), source.end());
                        source.clear();
                    }
                }
                for (const auto& m : action.added_modules) {
                    if (!model.has_module(m)) {
                        report.add_error(where, "adds unknown module '" + m + "'");
                        continue;
                    }
                    if (!available.count(m))
                        report.add_error(where, "adds module '" + m + "' before it is available");
                    if (!integrated.insert(m).second)
                        report.add_error(where, "module '" + m + "' already integrated");
                }
                if (const auto violation =
                        precedence_violation(model, action.added_modules, integrated))
                    report.add_error(where, "precedence violation: '" + violation->first +
                                                "' must precede '" + violation->second + "'");
                for (const auto& p : action.introduced_interfaces) {
                    if (!model.find_interface(p))
                        report.add_error(where, "interface " + p.key() + " is not in the catalog");
                    if (!interfaces_introduced.insert(p.key()).second)
                        report.add_error(where, "interface " + p.key() + " introduced twice");
                }
                assemblies_seen.insert(action.target_assembly);
                auto& members = assembly_members[action.target_assembly];
                members.insert(action.added_modules.begin(), action.added_modules.end());
            } else {
                if (!assemblies_seen.count(action.target_assembly))
                    report.add_error(where, "tests assembly '" + action.target_assembly +
                                                "' before any integration creates it");
                else if (assembly_members[action.target_assembly].empty())
                    report.add_warning(where, "tests an empty assembly");
                if (!(action.effectiveness > 0.0 && action.effectiveness <= 1.0))
                    report.add_error(where, "effectiveness must be in (0,1]");
                else if (action.effectiveness < 1.0)
                    all_full_effectiveness = false;
            }
        }
    }

    for (const auto& m : model.modules) {
        if (!available.count(m.id))
            report.add_error("plan", "module '" + m.id + "' is never made available");
        else if (!integrated.count(m.id))
            report.add_warning("plan", "module '" + m.id + "' is never integrated");
    }

    // Stop criterion: with nothing but full-strength tests the plan must end
    // at zero remaining risk.
    if (!report.has_errors() && all_full_effectiveness) {
        const auto result = simulate(model, plan);
        if (result.kpis.remaining_risk > 0.0) {
            std::ostringstream os;
            os << "stop criterion not met: " << result.kpis.remaining_risk
               << " risk units remain open at the end of the plan";
            report.add_warning("plan", os.str());
        }
    }

    return report;
}

ComparisonReport compare(const ProductModel& model, const std::vector<IntegrationPlan>& plans) {
    if (plans.size() < 2) throw ArgumentError("compare needs at least two plans");

    std::vector<const IntegrationPlan*> ordered;
    for (const auto& plan : plans) {
        const auto validation = validate_plan(model, plan);
        if (validation.has_errors())
            throw ArgumentError("plan '" + plan.label + "' fails validation: " +
                                validation.issues.front().message);
        ordered.push_back(&plan);
    }
    std::stable_sort(ordered.begin(), ordered.end(),
                     [](const auto* a, const auto* b) { return a->label < b->label; });

    ComparisonReport report;
    std::vector<RiskProfile> profiles;
    for (const auto* plan : ordered) {
        const auto result = simulate(model, *plan);
        report.plans.push_back({plan->label, result.kpis, result.profile.max_risk()});
        profiles.push_back(result.profile);
    }

    fill_deltas(report);

    for (const auto kind :
         {ObjectiveKind::average_risk, ObjectiveKind::max_risk, ObjectiveKind::duration}) {
        const StrategyObjective objective{kind, {}};
        std::size_t best = 0;
        double best_value = 0.0;
        for (std::size_t i = 0; i < report.plans.size(); ++i) {
            const double value =
                objective_value(objective, report.plans[i].kpis, profiles[i]);
            if (i == 0 || value < best_value) {
                best = i;
                best_value = value;
            }
        }
        report.winners[to_string(kind)] = report.plans[best].label;
    }

    return report;
}

namespace {

struct SearchBest {
    bool set = false;
    double value = 0.0;
    std::string identity;
    IntegrationPlan plan;
    KpiReport kpis;
    RiskProfile profile;

    void offer(double candidate_value, const IntegrationPlan& candidate,
               const SimulationResult& result) {
        const std::string identity_now = canonical_identity(candidate);
        if (!set || candidate_value < value ||
            (candidate_value == value && identity_now < identity)) {
            set = true;
            value = candidate_value;
            identity = identity_now;
            plan = candidate;
            kpis = result.kpis;
            profile = result.profile;
        }
    }
};

// Depth-first walk over every ordered partition of the modules into at most
// max_cycles cycles and every feasible ordered grouping of integration steps
// inside each cycle. Availability equals the integration cycle; making a
// module available earlier than its integration only adds risk area, so such
// plans are dominated and excluded from the universe.
struct ExhaustiveSearch {
    const ProductModel& model;
    const StrategyObjective& objective;
    int max_cycles;
    std::vector<std::string> all_modules;
    std::vector<CycleSpec> cycles;
    std::set<std::string> integrated;
    std::size_t explored = 0;
    SearchBest best;
    SearchBest best_avg, best_max, best_dur;

    ExhaustiveSearch(const ProductModel& m, const StrategyObjective& obj, int mc)
        : model(m), objective(obj), max_cycles(mc), all_modules(m.module_ids()) {
        std::sort(all_modules.begin(), all_modules.end());
    }

    void score_terminal() {
        std::vector<CycleSpec> specs = cycles;
        for (auto& spec : specs) {
            spec.available.clear();
            for (const auto& step : spec.steps)
                spec.available.insert(spec.available.end(), step.begin(), step.end());
        }
        const auto plan = build_plan_core(model, specs, "optimized", true);
        const auto result = simulate(model, plan);
        ++explored;
        best.offer(objective_value(objective, result.kpis, result.profile), plan, result);
        best_avg.offer(result.kpis.average_risk, plan, result);
        best_max.offer(result.profile.max_risk(), plan, result);
        best_dur.offer(static_cast<double>(result.kpis.phi), plan, result);
    }

    void recurse() {
        std::vector<std::string> remaining;
        for (const auto& m : all_modules)
            if (!integrated.count(m)) remaining.push_back(m);
        if (remaining.empty()) {
            score_terminal();
            return;
        }

        // Cycle break before the next step.
        if (!cycles.back().steps.empty() &&
            static_cast<int>(cycles.size()) < max_cycles) {
            cycles.push_back({});
            recurse();
            cycles.pop_back();
        }

        // Every nonempty subset of the remaining modules as the next step.
        const std::size_t n = remaining.size();
        for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
            std::vector<std::string> step;
            for (std::size_t i = 0; i < n; ++i)
                if (mask & (std::size_t{1} << i)) step.push_back(remaining[i]);
            if (precedence_violation(model, step, integrated)) continue;
            if (interfaces_for_step(model, step, integrated).empty()) continue;
            cycles.back().steps.push_back(step);
            integrated.insert(step.begin(), step.end());
            recurse();
            for (const auto& m : step) integrated.erase(m);
            cycles.back().steps.pop_back();
        }
    }
};

} // namespace

OptimizeResult optimize(const ProductModel& model, const StrategyObjective& objective,
                        int max_cycles, OptimizeMode mode) {
    if (max_cycles < 1) throw ArgumentError("max_cycles must be at least 1");
    const auto model_report = validate_model(model);
    if (model_report.has_errors())
        throw ArgumentError("model fails validation: " + model_report.issues.front().message);
    if (model.modules.empty()) throw ArgumentError("model has no modules");

    OptimizeResult out;

    if (model.modules.size() == 1) {
        CycleSpec spec;
        spec.available = model.module_ids();
        out.best = build_plan_core(model, {spec}, "optimized", false);
        const auto result = simulate(model, out.best);
        out.report.plans.push_back({out.best.label, result.kpis, result.profile.max_risk()});
        for (const auto kind :
             {ObjectiveKind::average_risk, ObjectiveKind::max_risk, ObjectiveKind::duration})
            out.report.winners[to_string(kind)] = out.best.label;
        out.plans_explored = 1;
        return out;
    }

    if (mode == OptimizeMode::exhaustive) {
        if (model.modules.size() > 8)
            throw ArgumentError("exhaustive search is limited to 8 modules; use greedy mode");
        ExhaustiveSearch search(model, objective, max_cycles);
        search.cycles.push_back({});
        search.recurse();
        if (!search.best.set)
            throw BuildError("no feasible integration plan exists for this model");
        out.best = search.best.plan;
        out.plans_explored = search.explored;

        // Report: the chosen plan plus the per-objective bests that differ.
        out.report.plans.push_back(
            {"optimized", search.best.kpis, search.best.profile.max_risk()});
        std::vector<std::pair<std::string, SearchBest*>> alts = {
            {"alt-avg-risk", &search.best_avg},
            {"alt-duration", &search.best_dur},
            {"alt-max-risk", &search.best_max},
        };
        const std::string chosen_identity = canonical_identity(out.best);
        std::set<std::string> emitted{chosen_identity};
        for (auto& [label, alt] : alts) {
            if (emitted.insert(alt->identity).second) {
                alt->plan.label = label;
                out.report.plans.push_back(
                    {label, alt->kpis, alt->profile.max_risk()});
            }
        }
        std::stable_sort(out.report.plans.begin(), out.report.plans.end(),
                         [](const auto& a, const auto& b) { return a.label < b.label; });
        fill_deltas(out.report);
        auto label_of = [&](const SearchBest& b) {
            if (b.identity == chosen_identity) return std::string("optimized");
            for (const auto& [label, alt] : alts)
                if (alt->identity == b.identity) return label;
            return std::string("optimized");
        };
        out.report.winners["average_risk"] = label_of(search.best_avg);
        out.report.winners["max_risk"] = label_of(search.best_max);
        out.report.winners["duration"] = label_of(search.best_dur);
        return out;
    }

    // Greedy: grow the plan one integrate+test step at a time, scoring each
    // candidate by the total risk area of the simulated partial plan.
    std::vector<CycleSpec> cycles(1);
    std::set<std::string> integrated;
    std::vector<std::string> modules = model.module_ids();
    std::sort(modules.begin(), modules.end());
    std::size_t evaluations = 0;

    auto score_candidate = [&](bool with_break, const std::vector<std::string>& step) {
        std::vector<CycleSpec> candidate = cycles;
        if (with_break) candidate.push_back({});
        candidate.back().steps.push_back(step);
        for (auto& spec : candidate) {
            spec.available.clear();
            for (const auto& s : spec.steps)
                spec.available.insert(spec.available.end(), s.begin(), s.end());
        }
        const auto plan = build_plan_core(model, candidate, "greedy-partial", false);
        ++evaluations;
        return simulate(model, plan).kpis.total_risk_area;
    };

    while (integrated.size() < modules.size()) {
        std::vector<std::string> remaining;
        for (const auto& m : modules)
            if (!integrated.count(m)) remaining.push_back(m);

        bool found = false;
        double best_score = 0.0;
        bool best_break = false;
        std::vector<std::string> best_step;

        // Smallest step size that yields any feasible candidate: single
        // modules first, then minimal groups (a lone module with no catalog
        // edge into the assembly needs its counterpart in the same step).
        const bool break_possible = !cycles.back().steps.empty() &&
                                    static_cast<int>(cycles.size()) < max_cycles;
        for (std::size_t step_size = 1; step_size <= remaining.size() && !found;
             ++step_size) {
            std::vector<std::vector<std::string>> step_candidates;
            std::vector<std::size_t> idx(step_size);
            auto emit = [&](auto&& self, std::size_t depth, std::size_t from) -> void {
                if (depth == step_size) {
                    std::vector<std::string> step;
                    for (const auto i : idx) step.push_back(remaining[i]);
                    step_candidates.push_back(std::move(step));
                    return;
                }
                for (std::size_t i = from; i < remaining.size(); ++i) {
                    idx[depth] = i;
                    self(self, depth + 1, i + 1);
                }
            };
            emit(emit, 0, 0);

            for (const bool with_break : {false, true}) {
                if (with_break && !break_possible) continue;
                for (const auto& step : step_candidates) {
                    if (precedence_violation(model, step, integrated)) continue;
                    if (interfaces_for_step(model, step, integrated).empty()) continue;
                    const double score = score_candidate(with_break, step);
                    if (!found || score < best_score) {
                        found = true;
                        best_score = score;
                        best_break = with_break;
                        best_step = step;
                    }
                }
            }
        }
        if (!found)
            throw BuildError("greedy search is stuck: no feasible next module");

        if (best_break) cycles.push_back({});
        cycles.back().steps.push_back(best_step);
        integrated.insert(best_step.begin(), best_step.end());
    }

    for (auto& spec : cycles) {
        spec.available.clear();
        for (const auto& s : spec.steps)
            spec.available.insert(spec.available.end(), s.begin(), s.end());
    }
    out.best = build_plan_core(model, cycles, "optimized", true);
    const auto result = simulate(model, out.best);
    out.plans_explored = evaluations;
    out.report.plans.push_back({out.best.label, result.kpis, result.profile.max_risk()});
    for (const auto kind :
         {ObjectiveKind::average_risk, ObjectiveKind::max_risk, ObjectiveKind::duration})
        out.report.winners[to_string(kind)] = out.best.label;
    return out;
}

} // namespace itrisk
