// Runs every verification suite and prints one pass/fail line per criterion.
#include <cstdio>

#include "graphlap/suites.hpp"

int main() {
    bool ok = true;
    for (const auto& r : graphlap::run_all_suites()) {
        std::printf("[%s] %-20s %s\n", r.pass ? "PASS" : "FAIL", r.name.c_str(),
                    r.detail.c_str());
        ok = ok && r.pass;
    }
    std::printf("%s\n", ok ? "acceptance: all criteria satisfied"
                           : "acceptance: FAILURES above");
    return ok ? 0 : 1;
}
