#ifndef REPSTAB_VERIFY_HPP
#define REPSTAB_VERIFY_HPP

#include <string>
#include <vector>

namespace repstab::verify {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool passed = false;
    std::string detail;
    double seconds = 0;
    double budget_seconds = 0;
};

inline constexpr int criterion_count = 10;

/// paper-example, ranges, algebra or all.
std::vector<int> suite_criteria(const std::string& suite);
const std::vector<std::string>& suite_names();

std::string criterion_title(int id);
/// Runs one criterion; exceptions become failures with the error text as detail.
CriterionResult run_criterion(int id);
std::vector<CriterionResult> run_suite(const std::string& suite);

}  // namespace repstab::verify

#endif
