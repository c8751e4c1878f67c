#include "bhj/audit.hpp"

#include <nlohmann/json.hpp>

#include <sstream>

namespace bhj {

using nlohmann::json;

void AuditDocument::add_inputs(const ObjectGraph& graph) {
    for (const auto& [name, digest] : graph.digests) inputs.push_back({name, digest});
}

void AuditDocument::add_checks(const ReportSet& reports) {
    for (const auto& r : reports.reports) {
        Check c;
        c.identity = r.identity;
        c.passed = r.passed();
        c.auxiliary = r.auxiliary;
        c.violation_count = r.violations.size();
        c.truncated = r.violations.size() > kViolationCap;
        const std::size_t shown = std::min(r.violations.size(), kViolationCap);
        c.shown.assign(r.violations.begin(), r.violations.begin() + shown);
        checks.push_back(std::move(c));
    }
}

bool AuditDocument::all_passed() const {
    for (const auto& c : checks)
        if (!c.auxiliary && !c.passed) return false;
    return true;
}

namespace {

json violation_to_json(const Violation& v) {
    json at = json::array();
    for (auto i : v.where) at.push_back(i);
    json res = json::array();
    for (const auto& s : v.residual) res.push_back(s.str());
    return json{{"at", std::move(at)}, {"residual", std::move(res)}};
}

} // namespace

std::string AuditDocument::to_machine() const {
    json doc;
    doc["tool"] = tool;
    json ins = json::array();
    for (const auto& in : inputs) ins.push_back(json{{"name", in.name}, {"digest", in.digest}});
    doc["inputs"] = std::move(ins);
    json cks = json::array();
    for (const auto& c : checks) {
        json jc{{"identity", c.identity},
                {"passed", c.passed},
                {"violations", c.violation_count},
                {"truncated", c.truncated}};
        if (c.auxiliary) jc["auxiliary"] = true;
        json shown = json::array();
        for (const auto& v : c.shown) shown.push_back(violation_to_json(v));
        jc["shown"] = std::move(shown);
        cks.push_back(std::move(jc));
    }
    doc["checks"] = std::move(cks);
    doc["passed"] = all_passed();
    if (extra) doc["extra"] = *extra;
    return doc.dump(2) + "\n";
}

std::string AuditDocument::to_text() const {
    std::ostringstream os;
    os << tool << "\n";
    for (const auto& in : inputs) os << "input " << in.name << " fnv1a64:" << in.digest << "\n";
    for (const auto& c : checks) {
        os << "check " << c.identity << ": " << (c.passed ? "PASS" : "FAIL");
        if (c.auxiliary) os << " (auxiliary)";
        if (!c.passed) os << " (" << c.violation_count << " violations)";
        os << "\n";
        for (const auto& v : c.shown) {
            os << "  at (";
            for (std::size_t i = 0; i < v.where.size(); ++i)
                os << (i ? "," : "") << v.where[i];
            os << "): residual (";
            for (std::size_t i = 0; i < v.residual.size(); ++i)
                os << (i ? ", " : "") << v.residual[i].str();
            os << ")\n";
        }
        if (c.truncated)
            os << "  ... " << (c.violation_count - kViolationCap) << " more\n";
    }
    os << "result: " << (all_passed() ? "PASS" : "FAIL") << "\n";
    return os.str();
}

} // namespace bhj
