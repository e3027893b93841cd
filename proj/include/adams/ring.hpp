#pragma once

#include <string>
#include <string_view>

#include "adams/errors.hpp"
#include "adams/laurent.hpp"
#include "adams/numeric.hpp"

namespace adams {

// The two exact coefficient rings the library computes over. Generic code
// (series, polynomials, matrices, Hopf instances) goes through this table.
template <class R>
struct RingTraits;

template <>
struct RingTraits<Rational> {
    static constexpr std::string_view name = "rational";
    static constexpr bool is_field = true;

    static bool is_zero(const Rational& x) { return x == 0; }
    static bool is_unit(const Rational& x) { return x != 0; }
    static Rational inverse(const Rational& x) {
        if (x == 0) throw Error(Errc::NonUnitConstant, "division by zero");
        return Rational(1) / x;
    }
    static Rational from_rational(const Rational& x) { return x; }
    static Rational from_integer(const BigInt& x) { return Rational(x); }
    static Rational divide_integer(const Rational& x, const BigInt& d) { return x / Rational(d); }
    static std::string str(const Rational& x) { return to_string(x); }
    static Rational parse(std::string_view text) {
        try {
            return parse_rational(text);
        } catch (const Error&) {
            throw Error(Errc::RingMismatch, "'" + std::string(text) + "' is not a rational coefficient");
        }
    }
};

template <>
struct RingTraits<LaurentPoly> {
    static constexpr std::string_view name = "laurent";
    static constexpr bool is_field = false;

    static bool is_zero(const LaurentPoly& x) { return x.is_zero(); }
    static bool is_unit(const LaurentPoly& x) { return x.is_unit(); }
    static LaurentPoly inverse(const LaurentPoly& x) { return x.unit_inverse(); }
    static LaurentPoly from_rational(const Rational& x) {
        return LaurentPoly(to_integer(x, "scalar over Z[q,1/q]"));
    }
    static LaurentPoly from_integer(const BigInt& x) { return LaurentPoly(x); }
    static LaurentPoly divide_integer(const LaurentPoly& x, const BigInt& d) { return x.divide_exact(d); }
    static std::string str(const LaurentPoly& x) { return x.str(); }
    static LaurentPoly parse(std::string_view text) {
        try {
            return LaurentPoly::parse(text);
        } catch (const Error&) {
            throw Error(Errc::RingMismatch, "'" + std::string(text) + "' is not a Laurent-polynomial coefficient");
        }
    }
};

} // namespace adams
