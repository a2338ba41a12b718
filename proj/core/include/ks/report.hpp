#pragma once

#include <string>
#include <vector>

namespace ks {

/// Outcome of a law or axiom check: empty when every check held.
struct Report {
    std::vector<std::string> violations;

    [[nodiscard]] bool passed() const { return violations.empty(); }
    void fail(std::string message) { violations.push_back(std::move(message)); }
};

}  // namespace ks
