#include "adams/cofree.hpp"

#include <map>

#include "adams/errors.hpp"

namespace adams::cofree {

using combinatorics::pal_table;
using combinatorics::WeightedCompositions;

Polynomial<Rational> CofreeSpectrum::expand() const {
    using P = Polynomial<Rational>;
    if (nopal % 2 != 0) throw Error(Errc::NonIntegral, "odd nopal (internal)");
    return P::linear(Rational(1)).pow(epal.convert_to<unsigned>()) * P::linear(Rational(-1)).pow(opal.convert_to<unsigned>()) *
           P({Rational(-1), Rational(0), Rational(1)}).pow((nopal / 2).convert_to<unsigned>());
}

std::string CofreeSpectrum::str() const {
    std::string out;
    auto add = [&](const std::string& f, const BigInt& e) {
        if (e == 0) return;
        if (!out.empty()) out += " ";
        out += f + "^" + e.str();
    };
    add("(x - 1)", epal);
    add("(x + 1)", opal);
    add("(x^2 - 1)", nopal / 2);
    return out.empty() ? "1" : out;
}

CofreeSpectrum cofree_char_poly(const WeightedAlphabet& v, int m) {
    if (m < 0) throw Error(Errc::InvalidArgument, "negative degree");
    auto t = pal_table(v, m);
    return {m, t.even[m], t.odd[m], t.nonpal[m]};
}

BigInt cofree_trace(const WeightedAlphabet& v, int m) {
    if (m < 0) throw Error(Errc::InvalidArgument, "negative degree");
    return pal_table(v, m).pal.alternating_column_sum(m);
}

namespace {

RationalSeries v_series(const WeightedAlphabet& v, int M) {
    RationalSeries s = RationalSeries::zero(M);
    for (int n = 1; n <= M; ++n) s[n] = Rational(v.v(n));
    return s;
}

template <class R>
std::pair<BivariateSeries<R>, BivariateSeries<R>> geometric_in_s(const Series<R>& odd_seed, const Series<R>& step) {
    const int M = step.truncation();
    BivariateSeries<R> even, odd;
    Series<R> power = Series<R>::one(M);
    // step has no constant term and starts at t^2, so s^k only reaches t^{2k}.
    for (int k = 0; 2 * k <= M; ++k) {
        even.by_s_power.push_back(power);
        odd.by_s_power.push_back(odd_seed * power);
        power *= step;
    }
    return {even, odd};
}

} // namespace

PalGFs pal_gfs(const WeightedAlphabet& v, int M) {
    if (M < 0) throw Error(Errc::InvalidArgument, "negative truncation order");
    v.validate();
    RationalSeries vt = v_series(v, M);
    RationalSeries vt2 = vt.substitute_power(2);
    auto [even, odd] = geometric_in_s(vt, vt2);
    RationalSeries one = RationalSeries::one(M);
    return {even, odd, (one - vt) / (one - vt2)};
}

BigInt QSpectrumFactorization::degree() const {
    BigInt d = 0;
    for (const auto& f : palindromic) d += f.mult;
    for (const auto& f : quadratic) d += 2 * f.mult;
    return d;
}

Polynomial<LaurentPoly> QSpectrumFactorization::expand() const {
    using P = Polynomial<LaurentPoly>;
    const LaurentPoly q = LaurentPoly::q();
    P out = P::constant(LaurentPoly(1));
    for (const auto& f : palindromic)
        out *= P::linear(LaurentPoly(f.sign) * q.pow(f.inv)).pow(f.mult.convert_to<unsigned>());
    for (const auto& f : quadratic)
        out *= P({-q.pow(f.exponent), LaurentPoly(0), LaurentPoly(1)}).pow(f.mult.convert_to<unsigned>());
    return out;
}

Polynomial<Rational> QSpectrumFactorization::specialize(const Rational& q) const {
    std::vector<Rational> c;
    const auto poly = expand();
    for (const auto& x : poly.coefficients()) c.push_back(x.evaluate(q));
    return Polynomial<Rational>(std::move(c));
}

CofreeSpectrum QSpectrumFactorization::at_q_equals_one() const {
    CofreeSpectrum out{m, 0, 0, 0};
    for (const auto& f : palindromic) (f.sign > 0 ? out.epal : out.opal) += f.mult;
    for (const auto& f : quadratic) out.nopal += 2 * f.mult;
    return out;
}

std::string QSpectrumFactorization::str() const {
    std::string out;
    auto qpow = [](long e) { return e == 0 ? std::string("1") : e == 1 ? std::string("q") : "q^" + std::to_string(e); };
    for (const auto& f : palindromic) {
        if (!out.empty()) out += " ";
        out += "(x " + std::string(f.sign > 0 ? "- " : "+ ") + qpow(f.inv) + ")^" + f.mult.str();
    }
    for (const auto& f : quadratic) {
        if (!out.empty()) out += " ";
        out += "(x^2 - " + qpow(f.exponent) + ")^" + f.mult.str();
    }
    return out.empty() ? "1" : out;
}

QSpectrumFactorization q_char_poly(const WeightedAlphabet& v, int m, std::size_t cap) {
    std::map<std::pair<long, int>, BigInt> lin;
    std::map<long, BigInt> quad;
    for (const auto& e : WeightedCompositions(v, m, cap)) {
        int sign = e.alpha.length() % 2 ? -1 : 1;
        if (e.pal != 0) lin[{e.inv, sign}] += e.pal;
        if (e.nopal != 0) quad[2 * e.inv] += e.nopal;
    }
    QSpectrumFactorization out;
    out.m = m;
    for (const auto& [key, mult] : lin) out.palindromic.push_back({key.second, key.first, mult});
    for (const auto& [exponent, total] : quad) {
        // Reversal pairs the non-palindromic words of alpha with those of rev(alpha),
        // and inv(alpha) = inv(rev(alpha)), so each total is even.
        if (total % 2 != 0) throw Error(Errc::NonIntegral, "odd nopal total (internal)");
        out.quadratic.push_back({exponent, total / 2});
    }
    return out;
}

QPolynomial q_trace(const WeightedAlphabet& v, int m, std::size_t cap) {
    QPolynomial out;
    for (const auto& e : WeightedCompositions(v, m, cap))
        if (e.pal != 0)
            out += QPolynomial::monomial(e.alpha.length() % 2 ? BigInt(-e.pal) : e.pal, static_cast<int>(e.inv));
    return out;
}

QTraceValue q_trace_at(const WeightedAlphabet& v, int m, const Rational& q, std::size_t cap) {
    return {q_trace(v, m, cap).evaluate(q), q != 0};
}

std::vector<std::vector<QPolynomial>> q_pal_table(const WeightedAlphabet& v, int M, std::size_t cap) {
    if (M < 0) throw Error(Errc::InvalidArgument, "negative truncation order");
    std::vector<std::vector<QPolynomial>> out(static_cast<std::size_t>(M) + 1,
                                              std::vector<QPolynomial>(static_cast<std::size_t>(M) + 1));
    for (int m = 0; m <= M; ++m)
        for (const auto& e : WeightedCompositions(v, m, cap))
            if (e.pal != 0) out[e.alpha.length()][m] += QPolynomial::monomial(e.pal, static_cast<int>(e.inv));
    return out;
}

LaurentSeries v_q(const WeightedAlphabet& v, int M) {
    LaurentSeries s = LaurentSeries::zero(M);
    for (int n = 1; n <= M; ++n) s[n] = LaurentPoly::monomial(v.v(n), -(n * (n - 1) / 2));
    return s;
}

QPalGFs q_pal_gfs(const WeightedAlphabet& v, int M) {
    if (M < 0) throw Error(Errc::InvalidArgument, "negative truncation order");
    v.validate();
    LaurentSeries vq = v_q(v, M);
    // v_{q^2}(t^2): substitute q -> q^2 in each coefficient, then t -> t^2.
    LaurentSeries vq2 = vq;
    for (int n = 0; n <= M; ++n) vq2[n] = vq[n].substitute_power(2);
    vq2 = vq2.substitute_power(2);
    auto [even, odd] = geometric_in_s(vq, vq2);
    LaurentSeries one = LaurentSeries::one(M);
    return {even, odd, (one - vq) / (one - vq2)};
}

} // namespace adams::cofree
