#pragma once

#include <initializer_list>
#include <random>
#include <vector>

#include "adams/numeric.hpp"

namespace testing {

inline std::vector<adams::BigInt> ints(std::initializer_list<long> xs) {
    return {xs.begin(), xs.end()};
}

inline std::vector<adams::Rational> rats(std::initializer_list<long> xs) {
    return {xs.begin(), xs.end()};
}

// Deterministic generator shared by the property tests.
inline std::mt19937_64& rng() {
    static std::mt19937_64 gen(0x5eedc0ffeeULL);
    return gen;
}

inline long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

} // namespace testing
