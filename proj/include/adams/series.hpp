#pragma once

#include <string>
#include <utility>
#include <vector>

#include "adams/errors.hpp"
#include "adams/ring.hpp"

namespace adams {

enum class Flavor { ordinary, exponential };

inline std::string flavor_name(Flavor f) { return f == Flavor::ordinary ? "ogf" : "egf"; }

/// Truncated formal power series a_0 + a_1 t + ... + a_M t^M over R.
///
/// The truncation order M is part of the value: binary operations on series
/// of different orders or flavors throw instead of silently re-truncating.
/// Exponential-flavor series store the raw a_m of sum a_m t^m/m!, and their
/// products use the binomial convolution so the modeled functions multiply.
template <class R>
class Series {
public:
    using Traits = RingTraits<R>;

    Series(std::vector<R> coefficients, Flavor flavor = Flavor::ordinary)
        : coeffs_(std::move(coefficients)), flavor_(flavor) {
        if (coeffs_.empty()) throw Error(Errc::InvalidArgument, "a series needs at least the constant coefficient");
    }

    static Series zero(int order, Flavor flavor = Flavor::ordinary) {
        return Series(std::vector<R>(static_cast<std::size_t>(order) + 1, R(0)), flavor);
    }
    static Series constant(R c, int order, Flavor flavor = Flavor::ordinary) {
        Series s = zero(order, flavor);
        s.coeffs_[0] = std::move(c);
        return s;
    }
    static Series one(int order, Flavor flavor = Flavor::ordinary) { return constant(R(1), order, flavor); }
    // c * t^degree (dropped if beyond the truncation order)
    static Series monomial(R c, int degree, int order, Flavor flavor = Flavor::ordinary) {
        Series s = zero(order, flavor);
        if (degree <= order) s.coeffs_[static_cast<std::size_t>(degree)] = std::move(c);
        return s;
    }

    int truncation() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    Flavor flavor() const noexcept { return flavor_; }
    const R& operator[](int m) const { return coeffs_.at(static_cast<std::size_t>(m)); }
    R& operator[](int m) { return coeffs_.at(static_cast<std::size_t>(m)); }
    const std::vector<R>& coefficients() const noexcept { return coeffs_; }

    Series& operator+=(const Series& o) {
        check_compatible(o);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        return *this;
    }
    Series& operator-=(const Series& o) {
        check_compatible(o);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        return *this;
    }
    friend Series operator+(Series a, const Series& b) { return a += b; }
    friend Series operator-(Series a, const Series& b) { return a -= b; }
    friend Series operator-(Series a) {
        for (auto& c : a.coeffs_) c = -c;
        return a;
    }
    friend bool operator==(const Series& a, const Series& b) {
        return a.flavor_ == b.flavor_ && a.coeffs_ == b.coeffs_;
    }

    friend Series operator*(const Series& a, const Series& b) {
        a.check_compatible(b);
        const int M = a.truncation();
        Series out = zero(M, a.flavor_);
        for (int i = 0; i <= M; ++i) {
            if (Traits::is_zero(a.coeffs_[i])) continue;
            for (int j = 0; i + j <= M; ++j) {
                if (Traits::is_zero(b.coeffs_[j])) continue;
                R term = a.coeffs_[i] * b.coeffs_[j];
                if (a.flavor_ == Flavor::exponential) term *= Traits::from_integer(binomial(i + j, i));
                out.coeffs_[i + j] += term;
            }
        }
        return out;
    }
    Series& operator*=(const Series& o) { return *this = *this * o; }

    friend Series operator/(const Series& a, const Series& b) {
        a.check_compatible(b);
        if (!Traits::is_unit(b.coeffs_[0]))
            throw Error(Errc::NonUnitConstant, "divisor has constant term " + Traits::str(b.coeffs_[0]));
        const R inv = Traits::inverse(b.coeffs_[0]);
        const int M = a.truncation();
        Series out = zero(M, a.flavor_);
        for (int m = 0; m <= M; ++m) {
            R acc = a.coeffs_[m];
            for (int j = 0; j < m; ++j) {
                if (Traits::is_zero(out.coeffs_[j]) || Traits::is_zero(b.coeffs_[m - j])) continue;
                R term = out.coeffs_[j] * b.coeffs_[m - j];
                if (a.flavor_ == Flavor::exponential) term *= Traits::from_integer(binomial(m, j));
                acc -= term;
            }
            out.coeffs_[m] = acc * inv;
        }
        return out;
    }
    Series& operator/=(const Series& o) { return *this = *this / o; }

    Series pow(long e) const {
        if (e < 0) return one(truncation(), flavor_) / pow(-e);
        Series result = one(truncation(), flavor_), base = *this;
        while (e) {
            if (e & 1) result *= base;
            e >>= 1;
            if (e) base *= base;
        }
        return result;
    }

    Series scaled(const R& c) const {
        Series out = *this;
        for (auto& x : out.coeffs_) x *= c;
        return out;
    }

    // f(t) -> f(t^k), same truncation order. Ordinary flavor only.
    Series substitute_power(int k) const {
        if (flavor_ != Flavor::ordinary) throw Error(Errc::FlavorMismatch, "t -> t^k substitution needs an ogf");
        Series out = zero(truncation(), flavor_);
        for (int m = 0; m * k <= truncation(); ++m) out.coeffs_[m * k] = coeffs_[m];
        return out;
    }

    // Explicit re-truncation to a lower order.
    Series truncated(int order) const {
        if (order > truncation()) throw Error(Errc::TruncationMismatch, "cannot extend a truncated series");
        return Series(std::vector<R>(coeffs_.begin(), coeffs_.begin() + order + 1), flavor_);
    }

private:
    void check_compatible(const Series& o) const {
        if (flavor_ != o.flavor_)
            throw Error(Errc::FlavorMismatch, flavor_name(flavor_) + " vs " + flavor_name(o.flavor_));
        if (coeffs_.size() != o.coeffs_.size())
            throw Error(Errc::TruncationMismatch, "orders " + std::to_string(truncation()) + " and " +
                                                      std::to_string(o.truncation()));
    }

    std::vector<R> coeffs_;
    Flavor flavor_;
};

using RationalSeries = Series<Rational>;
using LaurentSeries = Series<LaurentPoly>;

// exp requires a zero constant term, log a constant term of 1. Exponential
// flavor is handled by passing through the ordinary coefficients a_m/m!.
RationalSeries exp(const RationalSeries& a);
RationalSeries log(const RationalSeries& a);

RationalSeries series_from_integers(const std::vector<BigInt>& values, Flavor flavor = Flavor::ordinary);
// Integer coefficients, or NonIntegral naming the first offending degree.
std::vector<BigInt> integer_coefficients(const RationalSeries& s, std::string_view what = "series");

/// Bivariate series sum c(k,m) s^k t^m stored as one t-series per power of s.
template <class R>
struct BivariateSeries {
    std::vector<Series<R>> by_s_power;

    const R& at(int k, int m) const { return by_s_power.at(static_cast<std::size_t>(k))[m]; }
    R coefficient(int k, int m) const {
        if (k < 0 || k >= static_cast<int>(by_s_power.size())) return R(0);
        return by_s_power[static_cast<std::size_t>(k)][m];
    }
    // Sets s = value.
    Series<R> specialize_s(const R& value) const {
        Series<R> out = Series<R>::zero(by_s_power.front().truncation(), by_s_power.front().flavor());
        R power(1);
        for (const auto& row : by_s_power) {
            out += row.scaled(power);
            power *= value;
        }
        return out;
    }
};

} // namespace adams
