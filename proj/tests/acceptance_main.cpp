// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit on any
// failure. The E7 modular-data check is opt-in via --include-e7.

#include "akg/check.hpp"
#include "akg/numeric.hpp"

#include <cstring>
#include <iostream>

int main(int argc, char** argv) {
    akg::set_precision(50);
    akg::check::Options opt;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--include-e7") == 0) opt.include_e7 = true;
        else if (std::strcmp(argv[i], "--weyl-cap") == 0 && i + 1 < argc)
            opt.weyl_cap = std::atoll(argv[++i]);
        else {
            std::cerr << "usage: akg_acceptance [--include-e7] [--weyl-cap N]\n";
            return 2;
        }
    }
    return akg::check::run_acceptance(std::cout, opt) == 0 ? 0 : 1;
}
