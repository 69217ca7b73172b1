#pragma once

#include <string>
#include <vector>

#include "itrisk/model.hpp"
#include "itrisk/plan.hpp"

namespace itrisk {

struct RiskSample {
    int tick = 0;
    double risk = 0.0;
};

/// Risk as a step function of time: one sample per tick 1..phi, each the
/// total open risk after all events of that tick.
struct RiskProfile {
    std::vector<RiskSample> samples;

    double max_risk() const {
        double m = 0.0;
        for (const auto& s : samples) m = std::max(m, s.risk);
        return m;
    }

    double final_risk() const { return samples.empty() ? 0.0 : samples.back().risk; }
};

/// The five indicators: duration, cost, remaining risk, risk area, average.
struct KpiReport {
    int phi = 0;
    double cost = 0.0;
    double remaining_risk = 0.0;
    double total_risk_area = 0.0;
    double average_risk = 0.0;
};

/// Cumulative indicators at the end of each cycle.
struct CycleKpis {
    std::string label;
    int phi_cumulative = 0;
    double cost_cumulative = 0.0;
    double remaining_risk = 0.0;
};

enum class EventKind { availability, integrate, test, warning };

struct SimEvent {
    int tick = 0;
    EventKind kind = EventKind::availability;
    std::string action_id; // empty for availability/warnings
    double risk_after = 0.0;
    std::string note;
};

struct SimulationResult {
    RiskProfile profile;
    KpiReport kpis;
    std::vector<CycleKpis> cycle_kpis;
    std::vector<SimEvent> events;
};

/// Deterministic replay of a plan against a model.
///
/// Tick semantics: each cycle spends one availability tick (module and
/// carried-residual hypotheses open), then actions run back to back, each
/// occupying `duration` ticks with its effect at the completion tick.
/// Integration opens one hypothesis per introduced interface; a test scales
/// every open hypothesis inside its target assembly by (1 - effectiveness),
/// clearing outright at effectiveness 1.
///
/// Throws ArgumentError on an empty plan and PlanReferenceError when an
/// action names an unknown module, assembly, or uncataloged interface.
/// Structural plan quality is validate_plan's job (strategy module); the
/// replay itself accepts partial plans.
SimulationResult simulate(const ProductModel& model, const IntegrationPlan& plan);

/// Recompute the report from a profile plus the plan's action costs:
/// phi = sample count, cost = sum of action costs, remaining = last sample,
/// area = rectangle sum of samples, average = area / phi.
KpiReport kpis(const RiskProfile& profile, const IntegrationPlan& plan);

} // namespace itrisk
