#pragma once

#include <string>
#include <utility>
#include <vector>

namespace eres {

// A check outcome: named pass/fail lines plus free-form table rows.
struct CheckReport {
    std::vector<std::pair<std::string, bool>> checks;
    std::vector<std::string> rows;
    std::vector<std::string> failures;  // invariant name and offending element
    void check(const std::string& name, bool ok) { checks.emplace_back(name, ok); }
    size_t suppressed = 0;  // failures beyond the listing cap
    void fail(const std::string& invariant, const std::string& element) {
        if (failures.size() < 40)
            failures.push_back("FAIL " + invariant + ": " + element);
        else
            ++suppressed;
    }
    void merge(const CheckReport& o);
    bool ok() const;
    std::string format() const;
};

}  // namespace eres
