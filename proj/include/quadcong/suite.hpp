#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace quadcong {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

constexpr int kCriterionCount = 11;

CriterionResult run_criterion(int id, std::uint64_t seed);
std::vector<CriterionResult> run_acceptance(std::uint64_t seed);
// calls the operations the criteria do not reach
CriterionResult run_coverage(std::uint64_t seed);

std::string format_line(const CriterionResult& r);

}  // namespace quadcong
