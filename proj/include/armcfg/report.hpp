#pragma once

#include <string>
#include <utility>
#include <vector>

namespace armcfg {

/// Outcome of one exhaustive verification. `detail` carries the first
/// counterexample found when `passed` is false.
struct CheckReport {
    std::string name;
    bool passed = true;
    std::string detail;

    static CheckReport pass(std::string name, std::string detail = {}) {
        return {std::move(name), true, std::move(detail)};
    }
    static CheckReport fail(std::string name, std::string detail) {
        return {std::move(name), false, std::move(detail)};
    }

    explicit operator bool() const noexcept { return passed; }
};

inline bool all_passed(const std::vector<CheckReport>& reports) {
    for (const auto& r : reports)
        if (!r.passed) return false;
    return true;
}

}  // namespace armcfg
