#pragma once

#include <mpfr.h>

#include <string>

#include "adams/numeric.hpp"

namespace adams {

/// Owning mpfr_t with its own precision. Binary operations round to the
/// larger of the two operand precisions.
class Real {
public:
    explicit Real(mpfr_prec_t bits = 128) { mpfr_init2(v_, bits); mpfr_set_zero(v_, 1); }
    Real(long value, mpfr_prec_t bits) : Real(bits) { mpfr_set_si(v_, value, MPFR_RNDN); }
    Real(const Rational& value, mpfr_prec_t bits) : Real(bits) {
        mpfr_set_q(v_, value.backend().data(), MPFR_RNDN);
    }
    Real(const Real& o) : Real(o.precision()) { mpfr_set(v_, o.v_, MPFR_RNDN); }
    Real(Real&& o) noexcept : Real(mpfr_get_prec(o.v_)) { mpfr_swap(v_, o.v_); }
    Real& operator=(const Real& o) {
        if (this != &o) {
            mpfr_set_prec(v_, o.precision());
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    Real& operator=(Real&& o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~Real() { mpfr_clear(v_); }

    mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    friend Real operator+(const Real& a, const Real& b) { return a.binary(b, mpfr_add); }
    friend Real operator-(const Real& a, const Real& b) { return a.binary(b, mpfr_sub); }
    friend Real operator*(const Real& a, const Real& b) { return a.binary(b, mpfr_mul); }
    friend Real operator/(const Real& a, const Real& b) { return a.binary(b, mpfr_div); }
    friend Real operator-(const Real& a) {
        Real out(a.precision());
        mpfr_neg(out.v_, a.v_, MPFR_RNDN);
        return out;
    }
    Real& operator+=(const Real& o) { return *this = *this + o; }
    Real& operator-=(const Real& o) { return *this = *this - o; }
    Real& operator*=(const Real& o) { return *this = *this * o; }
    Real& operator/=(const Real& o) { return *this = *this / o; }

    friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_); }
    friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_); }
    friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_); }
    friend bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.v_, b.v_); }
    friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_); }

    bool is_zero() const { return mpfr_zero_p(v_); }
    int sign() const { return mpfr_sgn(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    // Scientific notation with `digits` significant digits.
    std::string str(int digits = 30) const {
        char* buf = nullptr;
        std::string fmt = "%." + std::to_string(digits) + "Rg";
        mpfr_asprintf(&buf, fmt.c_str(), v_);
        std::string out(buf);
        mpfr_free_str(buf);
        return out;
    }

private:
    template <class Op>
    Real binary(const Real& o, Op op) const {
        Real out(std::max(precision(), o.precision()));
        op(out.v_, v_, o.v_, MPFR_RNDN);
        return out;
    }

    mpfr_t v_;
};

inline Real abs(const Real& x) {
    Real out(x.precision());
    mpfr_abs(out.raw(), x.raw(), MPFR_RNDN);
    return out;
}
inline Real sqrt(const Real& x) {
    Real out(x.precision());
    mpfr_sqrt(out.raw(), x.raw(), MPFR_RNDN);
    return out;
}
// x^(1/k), x >= 0
inline Real root(const Real& x, unsigned long k) {
    Real out(x.precision());
    mpfr_rootn_ui(out.raw(), x.raw(), k, MPFR_RNDN);
    return out;
}
inline Real pow(const Real& x, long e) {
    Real out(x.precision());
    mpfr_pow_si(out.raw(), x.raw(), e, MPFR_RNDN);
    return out;
}
inline Real ldexp(long mantissa, long exponent, mpfr_prec_t bits) {
    Real out(mantissa, bits);
    mpfr_mul_2si(out.raw(), out.raw(), exponent, MPFR_RNDN);
    return out;
}

/// Minimal complex arithmetic over Real for polynomial root isolation.
struct Complex {
    Real re, im;

    explicit Complex(mpfr_prec_t bits) : re(bits), im(bits) {}
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

    friend Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
    friend Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
    friend Complex operator*(const Complex& a, const Complex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Complex operator/(const Complex& a, const Complex& b) {
        Real d = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
    }
    Real norm() const { return re * re + im * im; }
    Real modulus() const { return sqrt(norm()); }
};

} // namespace adams
