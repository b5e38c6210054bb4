// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <cstdio>

#include "phidescent/selftest.hpp"

int main() {
    const auto results = phidescent::selftest::run_all();
    bool all_passed = true;
    for (const auto& r : results) {
        std::printf("%s  %s  [%s]\n", r.passed ? "PASS" : "FAIL",
                    r.name.c_str(), r.detail.c_str());
        std::fflush(stdout);
        all_passed = all_passed && r.passed;
    }
    std::printf("%s\n", all_passed ? "acceptance: all criteria passed"
                                   : "acceptance: FAILURES PRESENT");
    return all_passed ? 0 : 1;
}
