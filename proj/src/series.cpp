#include "adams/series.hpp"

namespace adams {

namespace {

RationalSeries to_ordinary(const RationalSeries& a) {
    std::vector<Rational> c = a.coefficients();
    for (std::size_t m = 0; m < c.size(); ++m) c[m] /= Rational(factorial(static_cast<unsigned>(m)));
    return RationalSeries(std::move(c), Flavor::ordinary);
}

RationalSeries to_exponential(const RationalSeries& a) {
    std::vector<Rational> c = a.coefficients();
    for (std::size_t m = 0; m < c.size(); ++m) c[m] *= Rational(factorial(static_cast<unsigned>(m)));
    return RationalSeries(std::move(c), Flavor::exponential);
}

} // namespace

RationalSeries exp(const RationalSeries& a) {
    if (a[0] != 0) throw Error(Errc::InvalidConstantTerm, "exp needs a zero constant term, got " + to_string(a[0]));
    if (a.flavor() == Flavor::exponential) return to_exponential(exp(to_ordinary(a)));
    const int M = a.truncation();
    RationalSeries b = RationalSeries::one(M);
    // m b_m = sum_{k=1}^m k a_k b_{m-k}
    for (int m = 1; m <= M; ++m) {
        Rational acc = 0;
        for (int k = 1; k <= m; ++k)
            if (a[k] != 0) acc += Rational(k) * a[k] * b[m - k];
        b[m] = acc / m;
    }
    return b;
}

RationalSeries log(const RationalSeries& b) {
    if (b[0] != 1) throw Error(Errc::InvalidConstantTerm, "log needs constant term 1, got " + to_string(b[0]));
    if (b.flavor() == Flavor::exponential) return to_exponential(log(to_ordinary(b)));
    const int M = b.truncation();
    RationalSeries a = RationalSeries::zero(M);
    // m a_m = m b_m - sum_{k=1}^{m-1} k a_k b_{m-k}
    for (int m = 1; m <= M; ++m) {
        Rational acc = Rational(m) * b[m];
        for (int k = 1; k < m; ++k)
            if (a[k] != 0) acc -= Rational(k) * a[k] * b[m - k];
        a[m] = acc / m;
    }
    return a;
}

RationalSeries series_from_integers(const std::vector<BigInt>& values, Flavor flavor) {
    return RationalSeries(std::vector<Rational>(values.begin(), values.end()), flavor);
}

std::vector<BigInt> integer_coefficients(const RationalSeries& s, std::string_view what) {
    std::vector<BigInt> out;
    out.reserve(s.coefficients().size());
    for (int m = 0; m <= s.truncation(); ++m)
        out.push_back(to_integer(s[m], std::string(what) + "[" + std::to_string(m) + "]"));
    return out;
}

} // namespace adams
