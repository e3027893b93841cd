#include "adams/polynomial.hpp"

#include <algorithm>

namespace adams {

std::pair<Polynomial<Rational>, Polynomial<Rational>> divmod(const Polynomial<Rational>& a,
                                                             const Polynomial<Rational>& b) {
    if (b.is_zero()) throw Error(Errc::InvalidArgument, "polynomial division by zero");
    std::vector<Rational> rem = a.coefficients();
    int db = b.degree();
    if (a.degree() < db) return {Polynomial<Rational>(), a};
    std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db) + 1, Rational(0));
    const Rational lead_inv = Rational(1) / b.leading();
    for (int d = a.degree(); d >= db; --d) {
        Rational c = rem[static_cast<std::size_t>(d)] * lead_inv;
        quot[static_cast<std::size_t>(d - db)] = c;
        if (c == 0) continue;
        for (int i = 0; i <= db; ++i) rem[static_cast<std::size_t>(d - db + i)] -= c * b.coefficient(i);
    }
    return {Polynomial<Rational>(std::move(quot)), Polynomial<Rational>(std::move(rem))};
}

Polynomial<Rational> monic(const Polynomial<Rational>& p) {
    if (p.is_zero()) return p;
    return p.scaled(Rational(1) / p.leading());
}

Polynomial<Rational> gcd(Polynomial<Rational> a, Polynomial<Rational> b) {
    while (!b.is_zero()) {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

std::vector<std::pair<Polynomial<Rational>, int>> square_free_factorization(const Polynomial<Rational>& p) {
    std::vector<std::pair<Polynomial<Rational>, int>> out;
    if (p.degree() < 1) return out;
    Polynomial<Rational> f = monic(p);
    Polynomial<Rational> df = f.derivative();
    Polynomial<Rational> a = gcd(f, df);
    Polynomial<Rational> b = divmod(f, a).first;
    Polynomial<Rational> c = divmod(df, a).first;
    Polynomial<Rational> d = c - b.derivative();
    int i = 1;
    while (b.degree() >= 1) {
        Polynomial<Rational> g = gcd(b, d);
        if (g.degree() >= 1) out.emplace_back(g, i);
        b = divmod(b, g).first;
        c = divmod(d, g).first;
        d = c - b.derivative();
        ++i;
    }
    return out;
}

namespace {

std::vector<BigInt> positive_divisors(BigInt n) {
    if (n < 0) n = -n;
    std::vector<BigInt> small, large;
    for (BigInt d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        small.push_back(d);
        if (d * d != n) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

} // namespace

std::vector<Rational> rational_roots(const Polynomial<Rational>& p) {
    std::vector<Rational> roots;
    if (p.degree() < 1) return roots;
    BigInt lcm = 1;
    for (const auto& c : p.coefficients()) {
        BigInt den = denominator(c);
        lcm = lcm / boost::multiprecision::gcd(lcm, den) * den;
    }
    std::vector<BigInt> ints;
    for (const auto& c : p.coefficients()) ints.push_back(numerator(c * Rational(lcm)));
    std::size_t shift = 0;
    while (shift < ints.size() && ints[shift] == 0) ++shift;
    if (shift > 0) roots.emplace_back(0);
    ints.erase(ints.begin(), ints.begin() + static_cast<long>(shift));
    if (ints.size() < 2) return roots;
    const BigInt limit("1000000000000");
    if (abs(ints.front()) > limit || abs(ints.back()) > limit) return roots;
    Polynomial<Rational> reduced{std::vector<Rational>(ints.begin(), ints.end())};
    for (const auto& num : positive_divisors(ints.front()))
        for (const auto& den : positive_divisors(ints.back()))
            for (int sign : {1, -1}) {
                Rational r(sign * num, den);
                if (reduced.evaluate(r) == 0 && std::find(roots.begin(), roots.end(), r) == roots.end())
                    roots.push_back(r);
            }
    std::sort(roots.begin(), roots.end());
    return roots;
}

} // namespace adams
