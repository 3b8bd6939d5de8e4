#pragma once

#include <string>
#include <vector>

namespace frobalg {

/// Outcome of one named verification.
struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

using CheckResults = std::vector<CheckResult>;

inline bool all_passed(const CheckResults& results)
{
    for (const auto& r : results)
        if (!r.passed) return false;
    return true;
}

} // namespace frobalg
