#ifndef SYNKIT_CHECK_HPP
#define SYNKIT_CHECK_HPP

#include <algorithm>
#include <string>
#include <vector>

namespace synkit {

/// One named verification step inside an itemized report.
struct CheckItem {
    std::string name;
    bool pass = false;
    std::string detail;
};

inline bool all_pass(const std::vector<CheckItem>& checks) {
    return std::all_of(checks.begin(), checks.end(), [](const CheckItem& c) { return c.pass; });
}

}  // namespace synkit

#endif  // SYNKIT_CHECK_HPP
