#pragma once

// Self-check suites run by `lcdbch verify`.

#include <string>
#include <vector>

#include "lcdbch/modmath.hpp"

namespace lcdbch {

struct CheckLine {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct VerifyReport {
    std::string suite;
    std::vector<CheckLine> lines;

    std::size_t failures() const;
    bool passed() const { return failures() == 0; }
};

/// Dimensions (exact and closed form) of every published example code.
VerifyReport verify_examples();

struct ConjectureGrid {
    std::vector<u64> qs{3};
    std::vector<unsigned> ms{4, 6, 8, 10, 12};  // even m
    u64 max_modulus = 500'000'000;
};

/// Brute-force top-4 leaders modulo q^m + 1 against the closed forms for
/// delta_1..delta_4, printing any counterexample in the line detail.
VerifyReport verify_conjecture(const ConjectureGrid& grid);

/// Cross-module invariants on small parameters.
VerifyReport verify_props(u64 seed = 20240601);

}  // namespace lcdbch
