#pragma once

// Shared test helpers: a process-wide seeded RNG so randomized property
// tests are reproducible and reseedable from the command line.

#include <random>

namespace testutil {

extern unsigned g_seed;

inline std::mt19937& rng() {
    static std::mt19937 r(g_seed);
    return r;
}

inline int rand_int(int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    return d(rng());
}

}  // namespace testutil
