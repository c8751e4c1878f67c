#pragma once

#include "bhj/manifest.hpp"
#include "bhj/report.hpp"

#include <nlohmann/json_fwd.hpp>

#include <string>
#include <vector>

namespace bhj {

inline constexpr const char* kToolVersion = "bhj 0.1.0";

/// Maximum violations echoed per identity; the full count is always kept.
inline constexpr std::size_t kViolationCap = 100;

/// Deterministic audit of a set of identity checks: stable ordering, content
/// digests instead of timestamps, violations capped with an explicit flag.
/// Rendering the same inputs twice yields byte-identical output.
struct AuditDocument {
    struct Input {
        std::string name, digest;
    };
    struct Check {
        std::string identity;
        bool passed = true;
        bool auxiliary = false;
        std::size_t violation_count = 0;
        std::vector<Violation> shown;
        bool truncated = false;
    };

    std::string tool = kToolVersion;
    std::vector<Input> inputs;
    std::vector<Check> checks;
    nlohmann::json* extra = nullptr; // borrowed; serialized under "extra" when set

    void add_inputs(const ObjectGraph& graph);
    void add_checks(const ReportSet& reports);

    /// True when every non-auxiliary check passed.
    bool all_passed() const;

    std::string to_machine() const; // canonical JSON, trailing newline
    std::string to_text() const;
};

} // namespace bhj
