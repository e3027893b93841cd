#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "adams/numeric.hpp"

namespace adams {

/// Laurent polynomial in one indeterminate q with integer coefficients.
///
/// Stored as a dense coefficient run starting at exponent `low()`. The zero
/// polynomial has an empty run. Every operation returns a normalized value
/// (no zero coefficients at either end), so structural equality is equality.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(long value) : LaurentPoly(BigInt(value)) {} // NOLINT: ring literal
    LaurentPoly(const BigInt& value);                        // NOLINT: ring literal
    LaurentPoly(int low, std::vector<BigInt> coefficients);

    static LaurentPoly monomial(const BigInt& coefficient, int exponent);
    static LaurentPoly q() { return monomial(1, 1); }

    bool is_zero() const noexcept { return coeffs_.empty(); }
    // A unit of Z[q, 1/q] is exactly +-q^j.
    bool is_unit() const noexcept;
    LaurentPoly unit_inverse() const;

    int low() const noexcept { return low_; }
    int high() const noexcept { return low_ + static_cast<int>(coeffs_.size()) - 1; }
    BigInt coefficient(int exponent) const;
    const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }
    std::vector<std::pair<int, BigInt>> terms() const;

    LaurentPoly& operator+=(const LaurentPoly& other);
    LaurentPoly& operator-=(const LaurentPoly& other);
    LaurentPoly& operator*=(const LaurentPoly& other);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator-(LaurentPoly a);
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) = default;

    LaurentPoly pow(long exponent) const;
    // Substitutes q -> q^k; k may be negative.
    LaurentPoly substitute_power(int k) const;
    // Divides every coefficient by d; throws NonIntegral if not exact.
    LaurentPoly divide_exact(const BigInt& d) const;

    // Evaluation at a rational point; q = 0 is rejected when negative exponents occur.
    Rational evaluate(const Rational& at) const;

    // Ascending exponent order, e.g. "2*q^-1+1", "-q^3", "0".
    std::string str() const;
    static LaurentPoly parse(std::string_view text);

private:
    void normalize();

    int low_ = 0;
    std::vector<BigInt> coeffs_;
};

using QPolynomial = LaurentPoly;

inline std::string to_string(const LaurentPoly& p) { return p.str(); }

} // namespace adams
