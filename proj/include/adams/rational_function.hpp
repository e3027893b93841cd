#pragma once

#include <string>

#include "adams/polynomial.hpp"
#include "adams/series.hpp"

namespace adams {

/// numerator/denominator over Q, gcd-reduced with denominator constant term 1.
class RationalFunction {
public:
    // Throws InvalidArgument if the reduced denominator vanishes at 0.
    RationalFunction(Polynomial<Rational> numerator, Polynomial<Rational> denominator);
    static RationalFunction polynomial(Polynomial<Rational> p) {
        return RationalFunction(std::move(p), Polynomial<Rational>::constant(Rational(1)));
    }

    const Polynomial<Rational>& numerator() const noexcept { return num_; }
    const Polynomial<Rational>& denominator() const noexcept { return den_; }

    RationalSeries taylor(int order) const;
    Rational evaluate(const Rational& z) const;

    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) = default;
    // f(t) -> f(t^k)
    RationalFunction substitute_power(int k) const;

    std::string str(const std::string& var = "t") const;

private:
    Polynomial<Rational> num_;
    Polynomial<Rational> den_;
};

// The antipode-trace generating function h(t^2)/h(t) in reduced form.
RationalFunction antipode_trace_function(const RationalFunction& h);

} // namespace adams
