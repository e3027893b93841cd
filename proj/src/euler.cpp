#include "adams/euler.hpp"

#include "adams/errors.hpp"

namespace adams {

RationalSeries euler_transform(const std::vector<BigInt>& g, int order) {
    if (order < 0) throw Error(Errc::InvalidArgument, "negative truncation order");
    // c_n = sum_{d | n} d g_d, then n h_n = sum_{k=1}^n c_k h_{n-k}.
    std::vector<BigInt> c(static_cast<std::size_t>(order) + 1, 0);
    for (int n = 1; n <= order; ++n)
        for (long d : divisors(n))
            if (d <= static_cast<long>(g.size())) c[n] += d * g[static_cast<std::size_t>(d - 1)];
    std::vector<BigInt> h(static_cast<std::size_t>(order) + 1, 0);
    h[0] = 1;
    for (int n = 1; n <= order; ++n) {
        BigInt acc = 0;
        for (int k = 1; k <= n; ++k) acc += c[k] * h[n - k];
        if (acc % n != 0) throw Error(Errc::NonIntegral, "euler transform produced a fraction (internal)");
        h[n] = acc / n;
    }
    return series_from_integers(h);
}

InverseEuler inverse_euler_transform(const RationalSeries& h, bool allow_nonrealizable) {
    if (h[0] != 1) throw Error(Errc::InvalidConstantTerm, "dimension series needs h_0 = 1, got " + to_string(h[0]));
    for (int m = 0; m <= h.truncation(); ++m)
        if (!is_integer(h[m]))
            throw Error(Errc::NonIntegral, "h_" + std::to_string(m) + " = " + to_string(h[m]) + " is not an integer");
    const int M = h.truncation();
    RationalSeries L = log(h);
    std::vector<Rational> c(static_cast<std::size_t>(M) + 1, Rational(0));
    for (int n = 1; n <= M; ++n) c[n] = Rational(n) * L[n];
    InverseEuler out;
    out.g.reserve(static_cast<std::size_t>(M));
    for (int n = 1; n <= M; ++n) {
        Rational acc = 0;
        for (long d : divisors(n)) {
            int mu = moebius(n / d);
            if (mu) acc += Rational(mu) * c[d];
        }
        acc /= n;
        BigInt gn = to_integer(acc, "g_" + std::to_string(n));
        if (gn < 0) out.realizable = false;
        out.g.push_back(gn);
    }
    if (!out.realizable && !allow_nonrealizable) {
        std::size_t i = 0;
        while (out.g[i] >= 0) ++i;
        throw Error(Errc::NotRealizable, "inverse Euler transform gives g_" + std::to_string(i + 1) + " = " +
                                             out.g[i].str() + " < 0 (input h = " +
                                             join(h.coefficients()) + ")");
    }
    return out;
}

InverseEuler inverse_euler_transform(const std::vector<BigInt>& h, bool allow_nonrealizable) {
    return inverse_euler_transform(series_from_integers(h), allow_nonrealizable);
}

} // namespace adams
