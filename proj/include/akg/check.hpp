#pragma once

#include <iosfwd>

namespace akg::check {

struct Options {
    bool include_e7 = false;  // E7 modular data (|W| = 2903040) is opt-in
    long long weyl_cap = 10'000'000;
};

/// Runs the full acceptance suite, printing one PASS/FAIL line per
/// criterion. Returns the number of failed criteria.
int run_acceptance(std::ostream& os, const Options& opt = {});

}  // namespace akg::check
