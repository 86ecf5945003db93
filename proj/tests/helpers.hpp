#pragma once

#include <random>

namespace testutil {

// Seeded draws for property-style loops; top 53 bits for a uniform double.
inline double uniform(std::mt19937_64& rng, double lo, double hi) {
    return lo + (hi - lo) * static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

} // namespace testutil
