// Runs the acceptance criteria and prints one PASS/FAIL line per criterion.
// Usage: acceptance [criterion ids...]   (no ids: all of them)
#include "repstab/verify.hpp"

#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

int main(int argc, char** argv) {
    std::vector<int> ids;
    for (int i = 1; i < argc; ++i) ids.push_back(std::atoi(argv[i]));
    if (ids.empty()) ids = repstab::verify::suite_criteria("all");
    int failed = 0;
    for (int id : ids) {
        const auto r = repstab::verify::run_criterion(id);
        std::printf("criterion %2d %s  %s  [%.2fs / %.0fs]  %s\n", r.id, r.passed ? "PASS" : "FAIL", r.title.c_str(), r.seconds,
                    r.budget_seconds, r.detail.c_str());
        std::fflush(stdout);
        if (!r.passed) ++failed;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(ids.size()) - failed, ids.size());
    return failed == 0 ? 0 : 1;
}
