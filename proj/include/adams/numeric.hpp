#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace adams {

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

// Accepts "7", "-3/4", "+2". Throws Error(ParseError) otherwise.
Rational parse_rational(std::string_view text);
BigInt parse_integer(std::string_view text);

std::string to_string(const BigInt& value);
std::string to_string(const Rational& value);

bool is_integer(const Rational& value);
// Throws Error(NonIntegral) when the value has a nontrivial denominator.
BigInt to_integer(const Rational& value, std::string_view context = "value");

BigInt factorial(unsigned n);
BigInt binomial(long n, long k);
// Generalized binomial coefficient n(n-1)...(n-k+1)/k! for a rational top.
Rational binomial(const Rational& top, unsigned k);
// Number of k-multisets from a g-element set, C(g+k-1, k); valid for any integer g.
BigInt multichoose(const BigInt& g, unsigned k);

Rational pow(const Rational& base, long exponent);
BigInt pow(const BigInt& base, unsigned exponent);

// Classical Moebius function, n >= 1.
int moebius(long n);
std::vector<long> divisors(long n);

std::vector<Rational> parse_rational_list(std::string_view text);
std::vector<BigInt> parse_integer_list(std::string_view text);

template <class T>
std::string join(const std::vector<T>& values, std::string_view sep = ",") {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += sep;
        out += to_string(values[i]);
    }
    return out;
}

} // namespace adams
