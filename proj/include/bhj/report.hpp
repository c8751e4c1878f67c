#pragma once

#include "bhj/matrix.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace bhj {

/// One basis tuple at which an identity has a nonzero residual.
struct Violation {
    std::vector<std::size_t> where;
    Vec residual;
};

/// Exact audit of one identity on all homogeneous basis tuples. Violations
/// are listed in lexicographic tuple order and every recorded residual is
/// nonzero, so the identity holds exactly when the list is empty.
struct Report {
    std::string identity;
    std::vector<Violation> violations;

    // Auxiliary checks are reported but do not gate the overall verdict
    // (consequence conditions rather than defining ones).
    bool auxiliary = false;

    bool passed() const { return violations.empty(); }
};

struct ReportSet {
    std::vector<Report> reports;

    bool passed() const {
        for (const auto& r : reports)
            if (!r.auxiliary && !r.passed()) return false;
        return true;
    }

    const Report* find(std::string_view identity) const {
        for (const auto& r : reports)
            if (r.identity == identity) return &r;
        return nullptr;
    }

    void append(Report r) { reports.push_back(std::move(r)); }
    void append(ReportSet rs) {
        for (auto& r : rs.reports) reports.push_back(std::move(r));
    }
};

} // namespace bhj
