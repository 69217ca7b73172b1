#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "itrisk/validation.hpp"

namespace itrisk {

/// A module of the product under development. With the defaults every open
/// fault hypothesis on it is worth exactly one risk unit.
struct ModuleDef {
    std::string id;
    std::string name;
    double fault_probability = 1.0; // in (0, 1]
    double fault_impact = 1.0;      // > 0, risk units
};

/// Unordered pair of endpoint ids; (a,b) and (b,a) are the same interface.
struct InterfacePair {
    std::string a;
    std::string b;

    InterfacePair() = default;
    InterfacePair(std::string ea, std::string eb) : a(std::move(ea)), b(std::move(eb)) {}

    InterfacePair canonical() const {
        return a <= b ? InterfacePair{a, b} : InterfacePair{b, a};
    }

    std::string key() const {
        const auto c = canonical();
        return c.a + "|" + c.b;
    }

    bool operator==(const InterfacePair& o) const {
        const auto x = canonical();
        const auto y = o.canonical();
        return x.a == y.a && x.b == y.b;
    }

    bool operator<(const InterfacePair& o) const {
        const auto x = canonical();
        const auto y = o.canonical();
        return x.a != y.a ? x.a < y.a : x.b < y.b;
    }
};

struct InterfaceDef {
    InterfacePair ends;
    double fault_probability = 1.0;
    double fault_impact = 1.0;
};

/// The product: modules, the catalog of allowed interfaces, and the data-flow
/// precedence DAG (edges first -> second).
struct ProductModel {
    std::vector<ModuleDef> modules;
    std::vector<InterfaceDef> interfaces;
    std::vector<std::pair<std::string, std::string>> precedence;

    const ModuleDef* find_module(const std::string& id) const {
        for (const auto& m : modules)
            if (m.id == id) return &m;
        return nullptr;
    }

    bool has_module(const std::string& id) const { return find_module(id) != nullptr; }

    const InterfaceDef* find_interface(const InterfacePair& p) const {
        for (const auto& i : interfaces)
            if (i.ends == p) return &i;
        return nullptr;
    }

    /// Direct DAG predecessors of a module (sorted, deduplicated).
    std::vector<std::string> predecessors_of(const std::string& id) const {
        std::vector<std::string> out;
        for (const auto& [from, to] : precedence)
            if (to == id) out.push_back(from);
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    std::vector<std::string> module_ids() const {
        std::vector<std::string> out;
        out.reserve(modules.size());
        for (const auto& m : modules) out.push_back(m.id);
        return out;
    }
};

enum class HypothesisState { open, cleared };

enum class HypothesisLocation { module, interface, assembly_residual };

/// A potential fault at a module, interface, or carried-assembly residual.
/// Cleared hypotheses never reopen.
struct FaultHypothesis {
    HypothesisLocation location = HypothesisLocation::module;
    std::string location_id; // module id, interface key, or assembly id
    double probability = 1.0;
    double impact = 1.0;
    HypothesisState state = HypothesisState::open;

    double risk() const {
        return state == HypothesisState::open ? probability * impact : 0.0;
    }
};

inline double risk_of(const FaultHypothesis& h) { return h.risk(); }

/// A live integrated unit: members plus the interfaces inside it.
struct Assembly {
    std::string id;
    std::set<std::string> members;
    std::set<InterfacePair> internal_interfaces;
};

/// Structural checks: unique ids, resolvable endpoints, acyclic precedence,
/// probability/impact ranges, no duplicate interfaces. Pure; empty report
/// means the model is well formed.
ValidationReport validate_model(const ProductModel& model);

} // namespace itrisk
