#pragma once

#include <vector>

#include "adams/series.hpp"

namespace adams {

// prod_{i>=1} (1 - t^i)^{-g_i} truncated at `order`; g[i-1] holds g_i and
// missing entries count as zero. Negative g_i are accepted.
RationalSeries euler_transform(const std::vector<BigInt>& g, int order);
inline RationalSeries euler_transform(const std::vector<BigInt>& g) {
    return euler_transform(g, static_cast<int>(g.size()));
}

struct InverseEuler {
    std::vector<BigInt> g; // g_1..g_M
    bool realizable = true; // every g_i >= 0
};

// Recovers g_1..g_M from h with h_0 = 1 via c_n = n [t^n] log h and Moebius
// inversion. Throws NonIntegral when some g_n is fractional, and NotRealizable
// when some g_n < 0 unless `allow_nonrealizable` is set, in which case the
// flag in the result is cleared instead.
InverseEuler inverse_euler_transform(const RationalSeries& h, bool allow_nonrealizable = false);
InverseEuler inverse_euler_transform(const std::vector<BigInt>& h, bool allow_nonrealizable = false);

} // namespace adams
