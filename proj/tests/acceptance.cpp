// Acceptance battery: one pass/fail line per criterion, nonzero exit on any
// failure. The same checks back the CLI's verify-all subcommand.

#include <cstdio>

#include "sl3cv/acceptance.hpp"

int main() {
    bool all = true;
    for (const auto& r : sl3cv::run_acceptance()) {
        std::printf("%s  [%2d] %s — %s\n", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(),
                    r.detail.c_str());
        all = all && r.pass;
    }
    std::printf("%s\n", all ? "acceptance: all criteria passed" : "acceptance: FAILURES present");
    return all ? 0 : 1;
}
