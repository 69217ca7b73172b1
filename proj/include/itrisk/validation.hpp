#pragma once

#include <string>
#include <vector>

namespace itrisk {

enum class Severity { warning, error };

struct ValidationIssue {
    Severity severity = Severity::error;
    std::string location; // "module[3]", "cycle k2/action I3", ...
    std::string message;
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;

    bool clean() const { return issues.empty(); }

    bool has_errors() const {
        for (const auto& i : issues)
            if (i.severity == Severity::error) return true;
        return false;
    }

    bool has_warnings() const {
        for (const auto& i : issues)
            if (i.severity == Severity::warning) return true;
        return false;
    }

    void add_error(std::string location, std::string message) {
        issues.push_back({Severity::error, std::move(location), std::move(message)});
    }

    void add_warning(std::string location, std::string message) {
        issues.push_back({Severity::warning, std::move(location), std::move(message)});
    }
};

} // namespace itrisk
