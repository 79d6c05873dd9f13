// Acceptance runner: one PASS/FAIL line per criterion; exits nonzero if any criterion fails.
// Usage: acceptance [--seed N] [--only ID]...

#include <cstdlib>
#include <iostream>
#include <set>
#include <string>

#include "johnsonlab/acceptance.hpp"

int main(int argc, char **argv)
{
    std::uint64_t seed = 7;
    std::set<int> which;
    for (int i = 1; i < argc; ++i) {
        const std::string a = argv[i];
        if (a == "--seed" && i + 1 < argc)
            seed = std::strtoull(argv[++i], nullptr, 10);
        else if (a == "--only" && i + 1 < argc)
            which.insert(std::atoi(argv[++i]));
        else {
            std::cerr << "usage: acceptance [--seed N] [--only ID]...\n";
            return 2;
        }
    }
    bool ok = true;
    for (const auto &r : johnsonlab::acceptance::run(seed, which)) {
        std::cout << johnsonlab::acceptance::format_line(r) << std::endl;
        ok = ok && r.passed;
    }
    return ok ? 0 : 1;
}
