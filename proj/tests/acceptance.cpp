#include <cstdlib>
#include <iomanip>
#include <iostream>

#include "macd/suites.hpp"

int main(int argc, char** argv) {
    std::uint64_t seed = 1;
    if (argc > 1) seed = std::strtoull(argv[1], nullptr, 10);
    int failed = 0;
    double total = 0;
    for (int c = 1; c <= 11; ++c) {
        auto r = macd::run_criterion(c, seed);
        total += r.seconds;
        if (!r.passed) ++failed;
        std::cout << (r.passed ? "PASS" : "FAIL") << "  criterion " << std::setw(2) << c << "  " << r.name << "  ("
                  << r.detail << ", " << std::fixed << std::setprecision(2) << r.seconds << " s)" << std::endl;
    }
    std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria failed") << " in "
              << std::fixed << std::setprecision(1) << total << " s" << std::endl;
    return failed == 0 ? 0 : 1;
}
