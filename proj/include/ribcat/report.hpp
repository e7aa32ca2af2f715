#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

namespace ribcat {

struct CheckFailure {
    std::string instance;  // index tuple, rendered with label names
    std::string lhs;
    std::string rhs;
    double residual = 0.0;
};

struct CheckResult {
    std::string name;
    bool pass = true;
    std::size_t instances = 0;  // equation instances swept
    std::vector<CheckFailure> failures;
    std::string note;
};

/// Aggregated verdicts of a verifier sweep. Instances are enumerated in
/// lexicographic index order, so reports are deterministic.
struct ValidationReport {
    std::vector<CheckResult> checks;
    std::vector<std::string> warnings;

    bool passed() const {
        return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
    }
    CheckResult& add(std::string name) {
        checks.push_back(CheckResult{std::move(name), true, 0, {}, {}});
        return checks.back();
    }
    void merge(const ValidationReport& other) {
        checks.insert(checks.end(), other.checks.begin(), other.checks.end());
        warnings.insert(warnings.end(), other.warnings.begin(), other.warnings.end());
    }
};

}  // namespace ribcat
