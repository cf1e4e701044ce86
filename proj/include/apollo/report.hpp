#pragma once

#include <string>
#include <vector>

namespace apollo {

struct CheckResult {
    std::string name;
    bool ok;
    std::string detail;  // empty on success
};

struct VerificationReport {
    std::vector<CheckResult> checks;

    bool all_ok() const {
        for (const auto& c : checks) {
            if (!c.ok) {
                return false;
            }
        }
        return true;
    }

    void add(std::string name, bool ok, std::string detail = "") {
        checks.push_back({std::move(name), ok, std::move(detail)});
    }

    std::vector<CheckResult> failures() const {
        std::vector<CheckResult> out;
        for (const auto& c : checks) {
            if (!c.ok) {
                out.push_back(c);
            }
        }
        return out;
    }
};

}  // namespace apollo
