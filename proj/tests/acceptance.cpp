#include "quadcong/suite.hpp"

#include <cstdlib>
#include <iostream>

int main(int argc, char** argv) {
    std::uint64_t seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 20240611;
    int failed = 0;
    for (int id = 1; id <= quadcong::kCriterionCount; ++id) {
        auto r = quadcong::run_criterion(id, seed);
        std::cout << quadcong::format_line(r) << std::endl;
        failed += !r.pass;
    }
    return failed ? 1 : 0;
}
