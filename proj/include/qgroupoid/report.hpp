#pragma once

#include <string>
#include <vector>

namespace qgroupoid {

struct Check {
    std::string name;
    bool passed = true;
    bool diagnostic = false;  // informational; never counts as a failure
    std::string witness;
    std::string detail;
};

class Report {
public:
    explicit Report(std::string subject = {}) : subject_(std::move(subject)) {}

    void add(std::string name, bool passed, std::string witness = {}, std::string detail = {});
    void diagnostic(std::string name, bool holds, std::string detail = {});
    void skip(std::string name, std::string reason);
    // Appends other's checks with names prefixed by "prefix: ".
    void merge(const Report& other, const std::string& prefix = {});

    bool ok() const;
    std::size_t failures() const;
    const Check* find(const std::string& name) const;
    bool passed(const std::string& name) const;
    const std::vector<Check>& checks() const { return checks_; }
    const std::string& subject() const { return subject_; }

    std::string text() const;
    std::string json() const;

private:
    std::string subject_;
    std::vector<Check> checks_;
};

}  // namespace qgroupoid
