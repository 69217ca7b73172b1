#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "itrisk/validation.hpp"

namespace itrisk::testset {

struct TestCase {
    std::string id;
    std::set<std::string> tags; // requirement tags the case verifies
    std::string introduced_in;  // version label
};

/// Versioned registry of tagged test cases. Versions are ordered oldest
/// first; requirements maps each version to the tags its prototype must
/// cover.
struct TestSetRegistry {
    std::vector<std::string> versions;
    std::vector<TestCase> cases;
    std::map<std::string, std::set<std::string>> requirements;

    /// Index of a version label; throws ArgumentError on unknown labels.
    std::size_t version_index(const std::string& label) const;
};

/// id uniqueness, nonempty tag sets, known introduced_in labels, and every
/// case tag appearing in some version's requirement set.
ValidationReport validate_registry(const TestSetRegistry& reg);

struct ReuseDelta {
    std::vector<std::string> reusable;     // case ids, registry order
    std::set<std::string> uncovered_tags;  // required by `to`, covered by no case
};

/// Cases existing at version `from` whose tags all remain required at
/// version `to`, plus the `to` tags no case in the registry covers at all.
ReuseDelta reuse_delta(const TestSetRegistry& reg, const std::string& from,
                       const std::string& to);

struct CoverOverlap {
    std::string case_a;
    std::string case_b;
    std::vector<std::string> shared_tags;
};

struct CoverResult {
    std::vector<std::string> cases; // greedy pick order
    std::vector<CoverOverlap> overlaps;
};

/// Greedy minimum-cardinality cover of the version's requirement tags:
/// largest uncovered gain first, ties by lexicographic case id. Overlapping
/// tag sets among the chosen cases are reported alongside. Throws
/// ArgumentError listing the gap when the requirements are uncoverable.
CoverResult minimal_cover(const TestSetRegistry& reg, const std::string& version);

} // namespace itrisk::testset
