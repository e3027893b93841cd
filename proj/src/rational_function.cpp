#include "adams/rational_function.hpp"

namespace adams {

RationalFunction::RationalFunction(Polynomial<Rational> numerator, Polynomial<Rational> denominator) {
    if (denominator.is_zero()) throw Error(Errc::InvalidArgument, "zero denominator");
    auto g = gcd(numerator, denominator);
    num_ = divmod(numerator, g).first;
    den_ = divmod(denominator, g).first;
    const Rational c = den_.coefficient(0);
    if (c == 0)
        throw Error(Errc::InvalidArgument, "denominator " + den_.str("t") + " vanishes at 0; not a power series");
    num_ = num_.scaled(Rational(1) / c);
    den_ = den_.scaled(Rational(1) / c);
}

RationalSeries RationalFunction::taylor(int order) const {
    // Long division: den * f = num, den_0 = 1.
    RationalSeries out = RationalSeries::zero(order);
    for (int m = 0; m <= order; ++m) {
        Rational acc = num_.coefficient(m);
        for (int j = 1; j <= std::min(m, den_.degree()); ++j) acc -= den_.coefficient(j) * out[m - j];
        out[m] = acc;
    }
    return out;
}

Rational RationalFunction::evaluate(const Rational& z) const {
    Rational d = den_.evaluate(z);
    if (d == 0) throw Error(Errc::InvalidArgument, "pole at " + to_string(z));
    return num_.evaluate(z) / d;
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction RationalFunction::substitute_power(int k) const {
    return RationalFunction(num_.substitute_power(k), den_.substitute_power(k));
}

std::string RationalFunction::str(const std::string& var) const {
    return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
}

RationalFunction antipode_trace_function(const RationalFunction& h) { return h.substitute_power(2) / h; }

} // namespace adams
