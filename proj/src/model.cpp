#include "itrisk/model.hpp"

#include <map>
#include <set>

namespace itrisk {

namespace {

// Depth-first cycle search over the precedence edges.
bool has_cycle(const std::map<std::string, std::vector<std::string>>& adj,
               const std::string& node,
               std::map<std::string, int>& color) {
    color[node] = 1;
    auto it = adj.find(node);
    if (it != adj.end()) {
        for (const auto& next : it->second) {
            const int c = color.count(next) ? color[next] : 0;
            if (c == 1) return true;
            if (c == 0 && has_cycle(adj, next, color)) return true;
        }
    }
    color[node] = 2;
    return false;
}

} // namespace

ValidationReport validate_model(const ProductModel& model) {
    ValidationReport report;

    std::set<std::string> ids;
    for (std::size_t i = 0; i < model.modules.size(); ++i) {
        const auto& m = model.modules[i];
        const std::string where = "module[" + std::to_string(i) + "]";
        if (m.id.empty()) report.add_error(where, "empty module id");
        if (!ids.insert(m.id).second)
            report.add_error(where, "duplicate module id '" + m.id + "'");
        if (!(m.fault_probability > 0.0 && m.fault_probability <= 1.0))
            report.add_error(where, "fault_probability of '" + m.id + "' must be in (0,1]");
        if (!(m.fault_impact > 0.0))
            report.add_error(where, "fault_impact of '" + m.id + "' must be positive");
    }

    std::set<std::string> iface_keys;
    for (std::size_t i = 0; i < model.interfaces.size(); ++i) {
        const auto& f = model.interfaces[i];
        const std::string where = "interface[" + std::to_string(i) + "]";
        if (f.ends.a == f.ends.b)
            report.add_error(where, "endpoints must be distinct, got '" + f.ends.a + "' twice");
        for (const auto& end : {f.ends.a, f.ends.b}) {
            if (!model.has_module(end))
                report.add_error(where, "endpoint '" + end + "' names no declared module");
        }
        if (!iface_keys.insert(f.ends.key()).second)
            report.add_error(where, "duplicate interface " + f.ends.key());
        if (!(f.fault_probability > 0.0 && f.fault_probability <= 1.0))
            report.add_error(where, "fault_probability must be in (0,1]");
        if (!(f.fault_impact > 0.0))
            report.add_error(where, "fault_impact must be positive");
    }

    std::map<std::string, std::vector<std::string>> adj;
    for (std::size_t i = 0; i < model.precedence.size(); ++i) {
        const auto& [from, to] = model.precedence[i];
        const std::string where = "precedence[" + std::to_string(i) + "]";
        for (const auto& end : {from, to}) {
            if (!model.has_module(end))
                report.add_error(where, "endpoint '" + end + "' names no declared module");
        }
        adj[from].push_back(to);
    }

    std::map<std::string, int> color;
    for (const auto& [node, _] : adj) {
        if ((color.count(node) ? color[node] : 0) == 0 && has_cycle(adj, node, color)) {
            report.add_error("precedence", "precedence graph has a cycle through '" + node + "'");
            break;
        }
    }

    return report;
}

} // namespace itrisk
