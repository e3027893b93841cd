#include "adams/laurent.hpp"

#include <algorithm>
#include <cctype>

#include "adams/errors.hpp"

namespace adams {

LaurentPoly::LaurentPoly(const BigInt& value) {
    if (value != 0) coeffs_.push_back(value);
}

LaurentPoly::LaurentPoly(int low, std::vector<BigInt> coefficients) : low_(low), coeffs_(std::move(coefficients)) {
    normalize();
}

LaurentPoly LaurentPoly::monomial(const BigInt& coefficient, int exponent) {
    return LaurentPoly(exponent, {coefficient});
}

void LaurentPoly::normalize() {
    std::size_t first = 0;
    while (first < coeffs_.size() && coeffs_[first] == 0) ++first;
    if (first == coeffs_.size()) {
        coeffs_.clear();
        low_ = 0;
        return;
    }
    std::size_t last = coeffs_.size();
    while (coeffs_[last - 1] == 0) --last;
    if (first > 0 || last < coeffs_.size()) {
        coeffs_ = std::vector<BigInt>(coeffs_.begin() + static_cast<long>(first), coeffs_.begin() + static_cast<long>(last));
        low_ += static_cast<int>(first);
    }
}

bool LaurentPoly::is_unit() const noexcept {
    return coeffs_.size() == 1 && (coeffs_[0] == 1 || coeffs_[0] == -1);
}

LaurentPoly LaurentPoly::unit_inverse() const {
    if (!is_unit()) throw Error(Errc::NonUnitConstant, str() + " is not a unit of Z[q,1/q]");
    return monomial(coeffs_[0], -low_);
}

BigInt LaurentPoly::coefficient(int exponent) const {
    if (coeffs_.empty() || exponent < low_ || exponent > high()) return 0;
    return coeffs_[static_cast<std::size_t>(exponent - low_)];
}

std::vector<std::pair<int, BigInt>> LaurentPoly::terms() const {
    std::vector<std::pair<int, BigInt>> out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) out.emplace_back(low_ + static_cast<int>(i), coeffs_[i]);
    return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
    if (other.is_zero()) return *this;
    if (is_zero()) return *this = other;
    int lo = std::min(low_, other.low_);
    int hi = std::max(high(), other.high());
    std::vector<BigInt> out(static_cast<std::size_t>(hi - lo + 1));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[static_cast<std::size_t>(low_ - lo) + i] += coeffs_[i];
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i)
        out[static_cast<std::size_t>(other.low_ - lo) + i] += other.coeffs_[i];
    low_ = lo;
    coeffs_ = std::move(out);
    normalize();
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) { return *this += -other; }

LaurentPoly operator-(LaurentPoly a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return LaurentPoly(a.low_ + b.low_, std::move(out));
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) { return *this = *this * other; }

LaurentPoly LaurentPoly::pow(long exponent) const {
    if (exponent < 0) return unit_inverse().pow(-exponent);
    LaurentPoly result(1), base = *this;
    while (exponent) {
        if (exponent & 1) result *= base;
        exponent >>= 1;
        if (exponent) base *= base;
    }
    return result;
}

LaurentPoly LaurentPoly::substitute_power(int k) const {
    if (is_zero()) return {};
    if (k == 0) {
        BigInt sum = 0;
        for (const auto& c : coeffs_) sum += c;
        return LaurentPoly(sum);
    }
    LaurentPoly out;
    for (const auto& [e, c] : terms()) out += monomial(c, e * k);
    return out;
}

LaurentPoly LaurentPoly::divide_exact(const BigInt& d) const {
    if (d == 0) throw Error(Errc::InvalidArgument, "division by zero");
    std::vector<BigInt> out = coeffs_;
    for (auto& c : out) {
        if (c % d != 0) throw Error(Errc::NonIntegral, str() + " is not divisible by " + d.str());
        c /= d;
    }
    return LaurentPoly(low_, std::move(out));
}

Rational LaurentPoly::evaluate(const Rational& at) const {
    if (at == 0 && low_ < 0 && !is_zero())
        throw Error(Errc::InvalidArgument, "cannot evaluate " + str() + " at q = 0");
    Rational sum = 0;
    for (const auto& [e, c] : terms()) sum += Rational(c) * adams::pow(at, e);
    return sum;
}

std::string LaurentPoly::str() const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms()) {
        BigInt mag = c < 0 ? BigInt(-c) : c;
        if (c < 0)
            out += "-";
        else if (!first)
            out += "+";
        first = false;
        if (e == 0) {
            out += mag.str();
            continue;
        }
        if (mag != 1) out += mag.str() + "*";
        out += "q";
        if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
}

LaurentPoly LaurentPoly::parse(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw Error(Errc::ParseError, "empty Laurent polynomial");
    auto fail = [&] { return Error(Errc::ParseError, "malformed Laurent polynomial: '" + std::string(text) + "'"); };
    LaurentPoly out;
    std::size_t i = 0;
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        }
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        BigInt coef = 1;
        bool has_digits = i > start;
        if (has_digits) coef = BigInt(s.substr(start, i - start));
        int exponent = 0;
        if (i < s.size() && s[i] == '*') {
            if (!has_digits) throw fail();
            ++i;
            if (i >= s.size() || s[i] != 'q') throw fail();
        }
        if (i < s.size() && s[i] == 'q') {
            ++i;
            exponent = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                std::size_t es = i;
                if (i < s.size() && s[i] == '-') ++i;
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
                if (i == es || (i == es + 1 && s[es] == '-')) throw fail();
                exponent = std::stoi(s.substr(es, i - es));
            }
        } else if (!has_digits) {
            throw fail();
        }
        if (i < s.size() && s[i] != '+' && s[i] != '-') throw fail();
        out += monomial(sign * coef, exponent);
    }
    return out;
}

} // namespace adams
