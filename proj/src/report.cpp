#include "eres/report.hpp"

#include <sstream>

namespace eres {

bool CheckReport::ok() const {
    if (!failures.empty() || suppressed) return false;
    for (auto& c : checks)
        if (!c.second) return false;
    return true;
}

std::string CheckReport::format() const {
    std::ostringstream os;
    for (auto& r : rows) os << r << "\n";
    for (auto& c : checks) os << (c.second ? "PASS " : "FAIL ") << c.first << "\n";
    for (auto& f : failures) os << f << "\n";
    if (suppressed) os << "FAIL ... " << suppressed << " further failures not listed\n";
    return os.str();
}

void CheckReport::merge(const CheckReport& o) {
    checks.insert(checks.end(), o.checks.begin(), o.checks.end());
    rows.insert(rows.end(), o.rows.begin(), o.rows.end());
    for (auto& f : o.failures) failures.push_back(f);
    suppressed += o.suppressed;
}

}  // namespace eres
