#pragma once

#include <string>
#include <utility>
#include <vector>

#include "adams/ring.hpp"

namespace adams {

/// Dense univariate polynomial with coefficients in R, lowest degree first.
/// The zero polynomial has no coefficients and degree -1.
template <class R>
class Polynomial {
public:
    using Traits = RingTraits<R>;

    Polynomial() = default;
    explicit Polynomial(std::vector<R> coefficients) : coeffs_(std::move(coefficients)) { trim(); }
    static Polynomial constant(R c) { return Polynomial(std::vector<R>{std::move(c)}); }
    static Polynomial monomial(R c, int degree) {
        std::vector<R> v(static_cast<std::size_t>(degree) + 1, R(0));
        v.back() = std::move(c);
        return Polynomial(std::move(v));
    }
    // x - root
    static Polynomial linear(const R& root) { return Polynomial(std::vector<R>{-root, R(1)}); }

    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    const std::vector<R>& coefficients() const noexcept { return coeffs_; }
    R coefficient(int d) const {
        return d < 0 || d > degree() ? R(0) : coeffs_[static_cast<std::size_t>(d)];
    }
    const R& leading() const { return coeffs_.back(); }

    Polynomial& operator+=(const Polynomial& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), R(0));
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), R(0));
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        trim();
        return *this;
    }
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator-(Polynomial a) {
        for (auto& c : a.coeffs_) c = -c;
        return a;
    }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<R> out(a.coeffs_.size() + b.coeffs_.size() - 1, R(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (Traits::is_zero(a.coeffs_[i])) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return Polynomial(std::move(out));
    }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
    Polynomial scaled(const R& c) const {
        std::vector<R> out = coeffs_;
        for (auto& x : out) x *= c;
        return Polynomial(std::move(out));
    }
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

    Polynomial pow(unsigned e) const {
        Polynomial result = constant(R(1)), base = *this;
        while (e) {
            if (e & 1) result *= base;
            e >>= 1;
            if (e) base *= base;
        }
        return result;
    }

    R evaluate(const R& x) const {
        R acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    Polynomial derivative() const {
        if (coeffs_.size() <= 1) return {};
        std::vector<R> out(coeffs_.size() - 1, R(0));
        for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * R(static_cast<long>(i));
        return Polynomial(std::move(out));
    }

    // p(x) -> p(x^k)
    Polynomial substitute_power(int k) const {
        if (is_zero()) return {};
        std::vector<R> out(static_cast<std::size_t>(degree() * k) + 1, R(0));
        for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i * static_cast<std::size_t>(k)] = coeffs_[i];
        return Polynomial(std::move(out));
    }

    std::string str(const std::string& var = "x") const {
        if (is_zero()) return "0";
        std::string out;
        for (int d = degree(); d >= 0; --d) {
            const R& c = coeffs_[static_cast<std::size_t>(d)];
            if (Traits::is_zero(c)) continue;
            std::string cs = Traits::str(c);
            bool compound = cs.find_first_of("+-", 1) != std::string::npos;
            if (!out.empty()) {
                if (!compound && cs[0] == '-') {
                    out += " - ";
                    cs.erase(0, 1);
                } else {
                    out += " + ";
                }
            }
            if (d == 0) {
                out += compound ? "(" + cs + ")" : cs;
                continue;
            }
            if (cs == "-1")
                out += "-";
            else if (cs != "1")
                out += (compound ? "(" + cs + ")" : cs) + "*";
            out += var;
            if (d > 1) out += "^" + std::to_string(d);
        }
        return out;
    }

private:
    void trim() {
        while (!coeffs_.empty() && Traits::is_zero(coeffs_.back())) coeffs_.pop_back();
    }

    std::vector<R> coeffs_;
};

// Field-only helpers over Q[x].
std::pair<Polynomial<Rational>, Polynomial<Rational>> divmod(const Polynomial<Rational>& a,
                                                             const Polynomial<Rational>& b);
Polynomial<Rational> gcd(Polynomial<Rational> a, Polynomial<Rational> b);
Polynomial<Rational> monic(const Polynomial<Rational>& p);
// Yun's algorithm: returns (factor, multiplicity) pairs with square-free, pairwise coprime monic factors.
std::vector<std::pair<Polynomial<Rational>, int>> square_free_factorization(const Polynomial<Rational>& p);
// All distinct rational roots of p (p nonzero).
std::vector<Rational> rational_roots(const Polynomial<Rational>& p);

} // namespace adams
