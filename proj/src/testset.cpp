#include "itrisk/testset.hpp"

#include <algorithm>

#include "itrisk/errors.hpp"

namespace itrisk::testset {

std::size_t TestSetRegistry::version_index(const std::string& label) const {
    for (std::size_t i = 0; i < versions.size(); ++i)
        if (versions[i] == label) return i;
    throw ArgumentError("unknown version '" + label + "'");
}

ValidationReport validate_registry(const TestSetRegistry& reg) {
    ValidationReport report;

    std::set<std::string> labels;
    for (const auto& v : reg.versions)
        if (!labels.insert(v).second)
            report.add_error("versions", "duplicate version label '" + v + "'");

    for (const auto& [version, _] : reg.requirements)
        if (!labels.count(version))
            report.add_error("requirements", "requirements for unknown version '" + version +
                                                 "'");

    std::set<std::string> all_required;
    for (const auto& [_, tags] : reg.requirements)
        all_required.insert(tags.begin(), tags.end());

    std::set<std::string> ids;
    for (std::size_t i = 0; i < reg.cases.size(); ++i) {
        const auto& c = reg.cases[i];
        const std::string where = "case[" + std::to_string(i) + "]";
        if (!ids.insert(c.id).second)
            report.add_error(where, "duplicate case id '" + c.id + "'");
        if (c.tags.empty()) report.add_error(where, "case '" + c.id + "' has no tags");
        if (!labels.count(c.introduced_in))
            report.add_error(where, "case '" + c.id + "' introduced in unknown version '" +
                                        c.introduced_in + "'");
        for (const auto& tag : c.tags)
            if (!all_required.count(tag))
                report.add_error(where, "tag '" + tag +
                                            "' appears in no version's requirement set");
    }

    return report;
}

ReuseDelta reuse_delta(const TestSetRegistry& reg, const std::string& from,
                       const std::string& to) {
    const std::size_t from_idx = reg.version_index(from);
    const std::size_t to_idx = reg.version_index(to);
    if (from_idx > to_idx)
        throw ArgumentError("version '" + from + "' does not precede '" + to + "'");

    const auto req_it = reg.requirements.find(to);
    const std::set<std::string> required =
        req_it != reg.requirements.end() ? req_it->second : std::set<std::string>{};

    ReuseDelta out;
    std::set<std::string> covered_by_any;
    for (const auto& c : reg.cases) {
        covered_by_any.insert(c.tags.begin(), c.tags.end());
        if (reg.version_index(c.introduced_in) > from_idx) continue;
        const bool all_still_required = std::all_of(
            c.tags.begin(), c.tags.end(),
            [&](const std::string& tag) { return required.count(tag) > 0; });
        if (all_still_required) out.reusable.push_back(c.id);
    }
    for (const auto& tag : required)
        if (!covered_by_any.count(tag)) out.uncovered_tags.insert(tag);

    return out;
}

CoverResult minimal_cover(const TestSetRegistry& reg, const std::string& version) {
    reg.version_index(version); // validates the label
    const auto req_it = reg.requirements.find(version);
    const std::set<std::string> required =
        req_it != reg.requirements.end() ? req_it->second : std::set<std::string>{};

    std::set<std::string> coverable;
    for (const auto& c : reg.cases) coverable.insert(c.tags.begin(), c.tags.end());
    std::vector<std::string> gap;
    for (const auto& tag : required)
        if (!coverable.count(tag)) gap.push_back(tag);
    if (!gap.empty()) {
        std::string msg = "requirements of '" + version + "' are uncoverable; missing tags:";
        for (const auto& tag : gap) msg += " " + tag;
        throw ArgumentError(msg);
    }

    // Candidates sorted by id so ties resolve lexicographically.
    std::vector<const TestCase*> candidates;
    for (const auto& c : reg.cases) candidates.push_back(&c);
    std::sort(candidates.begin(), candidates.end(),
              [](const TestCase* a, const TestCase* b) { return a->id < b->id; });

    CoverResult result;
    std::set<std::string> uncovered = required;
    std::vector<const TestCase*> chosen;
    while (!uncovered.empty()) {
        const TestCase* best = nullptr;
        std::size_t best_gain = 0;
        for (const auto* c : candidates) {
            std::size_t gain = 0;
            for (const auto& tag : c->tags)
                if (uncovered.count(tag)) ++gain;
            if (gain > best_gain) {
                best = c;
                best_gain = gain;
            }
        }
        if (best == nullptr) break; // unreachable given the gap check above
        for (const auto& tag : best->tags) uncovered.erase(tag);
        result.cases.push_back(best->id);
        chosen.push_back(best);
    }

    for (std::size_t i = 0; i < chosen.size(); ++i) {
        for (std::size_t j = i + 1; j < chosen.size(); ++j) {
            std::vector<std::string> shared;
            for (const auto& tag : chosen[i]->tags)
                if (chosen[j]->tags.count(tag)) shared.push_back(tag);
            if (!shared.empty())
                result.overlaps.push_back({chosen[i]->id, chosen[j]->id, shared});
        }
    }

    return result;
}

} // namespace itrisk::testset
