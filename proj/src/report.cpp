#include "qgroupoid/report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace qgroupoid {

void Report::add(std::string name, bool passed, std::string witness, std::string detail) {
    checks_.push_back({std::move(name), passed, false, std::move(witness), std::move(detail)});
}

void Report::diagnostic(std::string name, bool holds, std::string detail) {
    checks_.push_back({std::move(name), holds, true, {}, std::move(detail)});
}

void Report::skip(std::string name, std::string reason) {
    checks_.push_back({std::move(name), true, true, {}, "skipped: " + std::move(reason)});
}

void Report::merge(const Report& other, const std::string& prefix) {
    for (Check c : other.checks_) {
        if (!prefix.empty()) c.name = prefix + ": " + c.name;
        checks_.push_back(std::move(c));
    }
}

bool Report::ok() const { return failures() == 0; }

std::size_t Report::failures() const {
    return static_cast<std::size_t>(
        std::count_if(checks_.begin(), checks_.end(), [](const Check& c) { return !c.passed && !c.diagnostic; }));
}

const Check* Report::find(const std::string& name) const {
    for (const auto& c : checks_)
        if (c.name == name) return &c;
    return nullptr;
}

bool Report::passed(const std::string& name) const {
    const Check* c = find(name);
    return c && c->passed;
}

std::string Report::text() const {
    std::ostringstream out;
    if (!subject_.empty()) out << "# " << subject_ << "\n";
    for (const auto& c : checks_) {
        const char* tag = c.diagnostic ? (c.passed ? "INFO " : "NOTE ") : (c.passed ? "PASS " : "FAIL ");
        out << tag << c.name;
        if (!c.witness.empty()) out << "  witness=" << c.witness;
        if (!c.detail.empty()) out << "  " << c.detail;
        out << "\n";
    }
    out << (ok() ? "OK" : "FAILED") << " (" << failures() << " failure" << (failures() == 1 ? "" : "s") << ")\n";
    return out.str();
}

std::string Report::json() const {
    nlohmann::ordered_json j;
    j["subject"] = subject_;
    j["ok"] = ok();
    j["failures"] = failures();
    auto& arr = j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : checks_) {
        nlohmann::ordered_json e;
        e["name"] = c.name;
        e["passed"] = c.passed;
        e["diagnostic"] = c.diagnostic;
        if (!c.witness.empty()) e["witness"] = c.witness;
        if (!c.detail.empty()) e["detail"] = c.detail;
        arr.push_back(std::move(e));
    }
    return j.dump(2) + "\n";
}

}  // namespace qgroupoid
