#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "itrisk/engine.hpp"
#include "itrisk/model.hpp"
#include "itrisk/plan.hpp"

namespace itrisk {

enum class ObjectiveKind { average_risk, max_risk, duration, weighted };

std::string to_string(ObjectiveKind kind);

/// What a comparison or search minimizes. `weighted` blends the three base
/// indicators with nonnegative weights, at least one positive.
struct StrategyObjective {
    ObjectiveKind kind = ObjectiveKind::average_risk;
    std::map<ObjectiveKind, double> weights; // weighted only

    static StrategyObjective average_risk() { return {ObjectiveKind::average_risk, {}}; }
    static StrategyObjective max_risk() { return {ObjectiveKind::max_risk, {}}; }
    static StrategyObjective duration() { return {ObjectiveKind::duration, {}}; }
};

double objective_value(const StrategyObjective& objective, const KpiReport& kpis,
                       const RiskProfile& profile);

/// Ordered integration steps: each inner vector is one integrate action's
/// module set (followed by one test).
using IntegrationSteps = std::vector<std::vector<std::string>>;

/// Single cycle, all modules available up front, alternating integrate/test
/// actions per step. Throws BuildError on precedence violations, unknown
/// modules, or steps that introduce no catalog interface.
IntegrationPlan build_conventional_plan(const ProductModel& model,
                                        const IntegrationSteps& order);

/// One cycle per partition block; cycle n >= 2 carries the growing assembly
/// of the previous cycles. Integration steps default to the smallest groups
/// of consecutive pending modules that introduce a catalog interface; pass
/// explicit per-cycle steps to override. Pending modules that cannot connect
/// yet are deferred to the next cycle.
IntegrationPlan build_adaptive_plan(const ProductModel& model,
                                    const std::vector<std::vector<std::string>>& partition,
                                    const std::vector<IntegrationSteps>* per_cycle_steps = nullptr);

/// Default grouping used by build_adaptive_plan and the CLI --partition flag.
IntegrationSteps default_step_grouping(const ProductModel& model,
                                       const std::vector<std::string>& pending,
                                       const std::set<std::string>& integrated);

/// Structural checks (coverage, references, precedence, interface catalog,
/// alternation shape is NOT required) plus the stop criterion: when every
/// test has effectiveness 1, the final remaining risk must be zero or the
/// plan gets a stop-criterion warning.
ValidationReport validate_plan(const ProductModel& model, const IntegrationPlan& plan);

struct PlanScore {
    std::string label;
    KpiReport kpis;
    double max_risk = 0.0;
};

struct PlanDelta {
    std::string label; // plan whose values are compared against the first
    int phi = 0;
    double cost = 0.0;
    double total_risk_area = 0.0;
    double average_risk = 0.0;
    double max_risk = 0.0;
};

struct ComparisonReport {
    std::vector<PlanScore> plans;        // sorted by label
    std::vector<PlanDelta> deltas;       // each plan minus the first
    std::map<std::string, std::string> winners; // objective name -> plan label
};

/// KPI table, deltas against the first plan (by label order), and the winner
/// per base objective. Requires at least two valid plans.
ComparisonReport compare(const ProductModel& model, const std::vector<IntegrationPlan>& plans);

enum class OptimizeMode { exhaustive, greedy };

struct OptimizeResult {
    IntegrationPlan best;
    ComparisonReport report; // best plan per base objective over the explored set
    std::size_t plans_explored = 0;
};

/// Search for the plan minimizing the objective over partitions into at most
/// max_cycles cycles.
///
/// exhaustive: enumerates every ordered partition of the modules into cycles
/// and every feasible ordered grouping of each cycle's integration steps;
/// global argmin, ties broken by serialized plan identity. Refuses models
/// with more than 8 modules.
///
/// greedy: grows one plan step by step, at each point appending the feasible
/// module (optionally after a cycle break) whose simulated partial plan has
/// the smallest total risk area; when no lone module can attach, the
/// smallest connectable module group stands in. Ties prefer no break, then
/// the lexicographically smallest module list.
OptimizeResult optimize(const ProductModel& model, const StrategyObjective& objective,
                        int max_cycles, OptimizeMode mode);

} // namespace itrisk
