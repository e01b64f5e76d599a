#include <cstdlib>
#include <iostream>
#include <string>

#include "triwalk/verify.hpp"

// Runs one acceptance criterion (or all of them) and prints its verdict line.
int main(int argc, char** argv) {
    using namespace triwalk::verify;
    int first = 1;
    int last = kCriterionCount;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--criterion" && i + 1 < argc) {
            first = last = std::atoi(argv[++i]);
        } else {
            std::cerr << "usage: acceptance [--criterion N]\n";
            return 2;
        }
    }
    if (first < 1 || last > kCriterionCount) {
        std::cerr << "criterion must be in 1.." << kCriterionCount << '\n';
        return 2;
    }
    bool ok = true;
    for (int id = first; id <= last; ++id) {
        const CriterionResult r = run_criterion(id);
        std::cout << format(r) << std::flush;
        ok = ok && r.passed();
    }
    return ok ? 0 : 1;
}
