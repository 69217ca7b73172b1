#pragma once

#include <string>
#include <vector>

#include "itrisk/model.hpp"

namespace itrisk {

enum class ActionKind { integrate, test };

/// One integration or test step. Integration opens interface hypotheses at
/// its completion tick; a test clears everything inside its target assembly.
struct PlanAction {
    ActionKind kind = ActionKind::integrate;
    std::string id;              // "I1", "T1", ...
    std::string target_assembly; // assembly the action grows or tests
    std::vector<std::string> added_modules;        // integrate only
    std::vector<InterfacePair> introduced_interfaces; // integrate only
    std::vector<std::string> merged_assemblies;    // integrate only, absorbed into target
    int duration = 1;            // ticks, >= 1
    double cost = 1.0;           // >= 0
    double effectiveness = 1.0;  // test only, in (0, 1]
};

/// One adaptive iteration. Its first tick is the availability event: every
/// module in available_modules and one residual per carried assembly open
/// as fault hypotheses.
struct DesignCycle {
    std::string label; // version string, e.g. "k1"
    std::vector<std::string> available_modules;
    std::vector<std::string> carried_assemblies;
    std::vector<PlanAction> actions;
};

struct IntegrationPlan {
    std::string label; // used for deterministic ordering in comparisons
    std::vector<DesignCycle> cycles;
};

} // namespace itrisk
