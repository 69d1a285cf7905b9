#pragma once

#include <string>
#include <utility>
#include <vector>

namespace asq {

struct CheckResult {
    std::string name;
    double max_residual = 0.0;
    double threshold = 0.0;
    bool passed = false;
};

// Named checks with residuals; overall passes iff every check does.
// Residuals are nonnegative: numeric checks report a max |.| deviation,
// discrete checks report a violation count against threshold 0.
struct VerificationReport {
    std::vector<CheckResult> checks;
    std::vector<std::pair<std::string, std::string>> metadata;

    void add(std::string name, double residual, double threshold) {
        checks.push_back({std::move(name), residual, threshold, residual <= threshold});
    }
    void note(std::string key, std::string value) {
        metadata.emplace_back(std::move(key), std::move(value));
    }
    void merge(const VerificationReport& other) {
        checks.insert(checks.end(), other.checks.begin(), other.checks.end());
    }
    bool overall() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }
    double max_residual() const {
        double r = 0.0;
        for (const auto& c : checks) r = std::max(r, c.max_residual);
        return r;
    }
};

}  // namespace asq
