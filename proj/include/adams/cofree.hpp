#pragma once

#include <string>
#include <vector>

#include "adams/combinatorics.hpp"
#include "adams/laurent.hpp"
#include "adams/polynomial.hpp"
#include "adams/series.hpp"

namespace adams::cofree {

using combinatorics::WeightedAlphabet;

/// (x - 1)^epal (x + 1)^opal (x^2 - 1)^(nopal/2)
struct CofreeSpectrum {
    int m = 0;
    BigInt epal, opal, nopal;

    BigInt degree() const { return epal + opal + nopal; }
    Polynomial<Rational> expand() const;
    std::string str() const;
    friend bool operator==(const CofreeSpectrum&, const CofreeSpectrum&) = default;
};

CofreeSpectrum cofree_char_poly(const WeightedAlphabet& v, int m);

// sum_k (-1)^k pal(k, m)
BigInt cofree_trace(const WeightedAlphabet& v, int m);

/// Coefficient of s^k t^m: pal(2k, m) in `even`, pal(2k+1, m) in `odd`.
struct PalGFs {
    BivariateSeries<Rational> even; // 1 / (1 - s v(t^2))
    BivariateSeries<Rational> odd;  // v(t) / (1 - s v(t^2))
    RationalSeries trace;           // (1 - v(t)) / (1 - v(t^2))
};

PalGFs pal_gfs(const WeightedAlphabet& v, int M);

struct QLinearFactor {
    int sign = 1;  // (-1)^{l(alpha)}
    long inv = 0;  // exponent of q
    BigInt mult;   // pal(alpha), summed over alpha with equal (sign, inv)
};

struct QQuadraticFactor {
    long exponent = 0; // 2 inv(alpha)
    BigInt mult;       // nopal(alpha)/2, summed over alpha with equal inv
};

/// prod (x - sign q^inv)^mult * prod (x^2 - q^exponent)^mult
struct QSpectrumFactorization {
    int m = 0;
    std::vector<QLinearFactor> palindromic; // sorted by (inv, sign)
    std::vector<QQuadraticFactor> quadratic; // sorted by exponent

    BigInt degree() const;
    Polynomial<LaurentPoly> expand() const;
    // Evaluation at a rational q (q = 0 only when every exponent is nonnegative).
    Polynomial<Rational> specialize(const Rational& q) const;
    CofreeSpectrum at_q_equals_one() const;
    std::string str() const;
};

QSpectrumFactorization q_char_poly(const WeightedAlphabet& v, int m,
                                   std::size_t cap = combinatorics::WeightedCompositions::default_cap);

// sum over alpha |= m of (-1)^{l(alpha)} pal(alpha) q^{inv(alpha)}
QPolynomial q_trace(const WeightedAlphabet& v, int m,
                    std::size_t cap = combinatorics::WeightedCompositions::default_cap);

struct QTraceValue {
    Rational value;
    // The t^m / q^{C(m,2)} generating-function normalization needs q != 0.
    bool gf_normalization_defined = true;
};

QTraceValue q_trace_at(const WeightedAlphabet& v, int m, const Rational& q,
                       std::size_t cap = combinatorics::WeightedCompositions::default_cap);

// pal_q(k, m) = sum over alpha |= m with l(alpha) = k of pal(alpha) q^{inv(alpha)}, by enumeration.
std::vector<std::vector<QPolynomial>> q_pal_table(const WeightedAlphabet& v, int M,
                                                  std::size_t cap = combinatorics::WeightedCompositions::default_cap);

/// Coefficient of s^k t^m: pal_q(2k, m) / q^{C(m,2)} (even), pal_q(2k+1, m) / q^{C(m,2)} (odd).
struct QPalGFs {
    BivariateSeries<LaurentPoly> even; // 1 / (1 - s v_{q^2}(t^2))
    BivariateSeries<LaurentPoly> odd;  // v_q(t) / (1 - s v_{q^2}(t^2))
    LaurentSeries trace;               // (1 - v_q(t)) / (1 - v_{q^2}(t^2))
};

// v_q(t) = sum_n v_n t^n / q^{C(n,2)}
LaurentSeries v_q(const WeightedAlphabet& v, int M);

QPalGFs q_pal_gfs(const WeightedAlphabet& v, int M);

} // namespace adams::cofree
