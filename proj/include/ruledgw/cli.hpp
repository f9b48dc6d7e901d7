#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cli {

struct VerifyItem {
    std::string name;
    bool passed = false;
    std::string detail;  // failure description, empty when passed
};

struct VerifyReport {
    std::vector<VerifyItem> items;

    int passed() const;
    int failed() const;
    bool all_passed() const { return failed() == 0; }
};

/// Runs every cross-module invariant for k <= kmax and degrees <= cap.
/// Checks are independent and fan out concurrently; the report order is
/// fixed regardless of completion order.
VerifyReport verify_all(int cap, int kmax);

/// Executes one subcommand from argv (program name excluded). Exit codes:
/// 0 success, 1 internal identity violation, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cli
