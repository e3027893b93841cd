#include "adams/numeric.hpp"

#include <cctype>

#include "adams/errors.hpp"

namespace adams {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

bool is_integer_literal(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

std::vector<std::string_view> split_commas(std::string_view text) {
    std::vector<std::string_view> out;
    text = trim(text);
    if (text.empty()) return out;
    std::size_t start = 0;
    while (true) {
        auto pos = text.find(',', start);
        out.push_back(trim(text.substr(start, pos == std::string_view::npos ? pos : pos - start)));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

} // namespace

BigInt parse_integer(std::string_view text) {
    auto s = trim(text);
    if (!is_integer_literal(s)) throw Error(Errc::ParseError, "not an integer: '" + std::string(text) + "'");
    if (s.front() == '+') s.remove_prefix(1);
    return BigInt(std::string(s));
}

Rational parse_rational(std::string_view text) {
    auto s = trim(text);
    auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(s));
    auto num = trim(s.substr(0, slash));
    auto den = trim(s.substr(slash + 1));
    if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' || den.front() == '+')
        throw Error(Errc::ParseError, "not a rational: '" + std::string(text) + "'");
    BigInt d = parse_integer(den);
    if (d == 0) throw Error(Errc::ParseError, "zero denominator: '" + std::string(text) + "'");
    return Rational(parse_integer(num), d);
}

std::string to_string(const BigInt& value) { return value.str(); }

std::string to_string(const Rational& value) {
    if (denominator(value) == 1) return numerator(value).str();
    return numerator(value).str() + "/" + denominator(value).str();
}

bool is_integer(const Rational& value) { return denominator(value) == 1; }

BigInt to_integer(const Rational& value, std::string_view context) {
    if (!is_integer(value))
        throw Error(Errc::NonIntegral, std::string(context) + " = " + to_string(value) + " is not an integer");
    return numerator(value);
}

BigInt factorial(unsigned n) {
    BigInt r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

BigInt binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

Rational binomial(const Rational& top, unsigned k) {
    Rational r = 1;
    for (unsigned i = 0; i < k; ++i) {
        r *= top - i;
        r /= i + 1;
    }
    return r;
}

BigInt multichoose(const BigInt& g, unsigned k) {
    // (g)(g+1)...(g+k-1)/k!; each prefix product divided by i! stays integral.
    BigInt r = 1;
    for (unsigned i = 0; i < k; ++i) {
        r *= g + i;
        r /= i + 1;
    }
    return r;
}

Rational pow(const Rational& base, long exponent) {
    if (exponent < 0) {
        if (base == 0) throw Error(Errc::InvalidArgument, "zero raised to a negative power");
        return pow(Rational(1) / base, -exponent);
    }
    Rational result = 1, b = base;
    unsigned long e = static_cast<unsigned long>(exponent);
    while (e) {
        if (e & 1) result *= b;
        e >>= 1;
        if (e) b *= b;
    }
    return result;
}

BigInt pow(const BigInt& base, unsigned exponent) { return boost::multiprecision::pow(base, exponent); }

int moebius(long n) {
    if (n < 1) throw Error(Errc::InvalidArgument, "moebius requires n >= 1");
    int sign = 1;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        sign = -sign;
    }
    if (n > 1) sign = -sign;
    return sign;
}

std::vector<long> divisors(long n) {
    std::vector<long> small, large;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d) continue;
        small.push_back(d);
        if (d != n / d) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

std::vector<Rational> parse_rational_list(std::string_view text) {
    std::vector<Rational> out;
    for (auto piece : split_commas(text)) out.push_back(parse_rational(piece));
    return out;
}

std::vector<BigInt> parse_integer_list(std::string_view text) {
    std::vector<BigInt> out;
    for (auto piece : split_commas(text)) out.push_back(parse_integer(piece));
    return out;
}

} // namespace adams
