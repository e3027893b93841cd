#pragma once

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "adams/errors.hpp"
#include "adams/polynomial.hpp"

namespace adams {

/// Dense row-major matrix over one of the exact rings.
template <class R>
class Matrix {
public:
    using Traits = RingTraits<R>;

    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, R(0)) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = R(1);
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }
    const R& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    R& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

    bool is_zero() const {
        return std::all_of(data_.begin(), data_.end(), [](const R& x) { return Traits::is_zero(x); });
    }

    Matrix& operator+=(const Matrix& o) {
        check_same_shape(o);
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        check_same_shape(o);
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
        return *this;
    }
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator-(Matrix a) {
        for (auto& x : a.data_) x = -x;
        return a;
    }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_)
            throw Error(Errc::DimensionMismatch, std::to_string(a.rows_) + "x" + std::to_string(a.cols_) + " times " +
                                                     std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
        Matrix out(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const R& x = a(i, k);
                if (Traits::is_zero(x)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    if (!Traits::is_zero(b(k, j))) out(i, j) += x * b(k, j);
            }
        return out;
    }
    Matrix scaled(const R& c) const {
        Matrix out = *this;
        for (auto& x : out.data_) x *= c;
        return out;
    }
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    R trace() const {
        R t(0);
        for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
        return t;
    }

    Matrix pow(unsigned e) const {
        Matrix result = identity(rows_), base = *this;
        while (e) {
            if (e & 1) result = result * base;
            e >>= 1;
            if (e) base = base * base;
        }
        return result;
    }

    // Principal submatrix on the given index set.
    Matrix principal(const std::vector<std::size_t>& idx) const {
        Matrix out(idx.size(), idx.size());
        for (std::size_t i = 0; i < idx.size(); ++i)
            for (std::size_t j = 0; j < idx.size(); ++j) out(i, j) = (*this)(idx[i], idx[j]);
        return out;
    }

    std::string str() const {
        std::string out;
        for (std::size_t i = 0; i < rows_; ++i) {
            out += "[";
            for (std::size_t j = 0; j < cols_; ++j) out += (j ? ", " : "") + Traits::str((*this)(i, j));
            out += "]\n";
        }
        return out;
    }

private:
    void check_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw Error(Errc::DimensionMismatch, "matrix shapes differ");
    }

    std::size_t rows_ = 0, cols_ = 0;
    std::vector<R> data_;
};

// Strongly connected components of the nonzero pattern of a square matrix,
// in an order that makes the permuted matrix block upper triangular.
template <class R>
std::vector<std::vector<std::size_t>> diagonal_blocks(const Matrix<R>& a) {
    const std::size_t n = a.rows();
    std::vector<long> index(n, -1), low(n, 0);
    std::vector<char> on_stack(n, 0);
    std::vector<std::size_t> stack;
    std::vector<std::vector<std::size_t>> blocks;
    long counter = 0;
    // Iterative Tarjan: frames hold (vertex, next neighbour to scan).
    for (std::size_t root = 0; root < n; ++root) {
        if (index[root] >= 0) continue;
        std::vector<std::pair<std::size_t, std::size_t>> frames{{root, 0}};
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = 1;
        while (!frames.empty()) {
            auto& [v, next] = frames.back();
            bool descended = false;
            while (next < n) {
                std::size_t w = next++;
                if (w == v || RingTraits<R>::is_zero(a(v, w))) continue;
                if (index[w] < 0) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = 1;
                    frames.emplace_back(w, 0);
                    descended = true;
                    break;
                }
                if (on_stack[w]) low[v] = std::min(low[v], index[w]);
            }
            if (descended) continue;
            std::size_t vv = v;
            if (low[vv] == index[vv]) {
                std::vector<std::size_t> block;
                std::size_t w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = 0;
                    block.push_back(w);
                } while (w != vv);
                std::sort(block.begin(), block.end());
                blocks.push_back(std::move(block));
            }
            frames.pop_back();
            if (!frames.empty()) low[frames.back().first] = std::min(low[frames.back().first], low[vv]);
        }
    }
    return blocks;
}

// det(x I - A) by Berkowitz's division-free recurrence.
template <class R>
Polynomial<R> char_poly_berkowitz(const Matrix<R>& a) {
    if (!a.is_square()) throw Error(Errc::DimensionMismatch, "characteristic polynomial of a non-square matrix");
    const std::size_t n = a.rows();
    // p holds det(x I - A_k) with the leading coefficient first.
    std::vector<R> p{R(1)};
    for (std::size_t k = 0; k < n; ++k) {
        // A_{k+1} = [[A_k, C], [Rw, a_kk]]; Toeplitz column (1, -a_kk, -Rw C, -Rw A_k C, ...).
        std::vector<R> col{R(1), -a(k, k)};
        std::vector<R> c(k);
        for (std::size_t i = 0; i < k; ++i) c[i] = a(i, k);
        for (std::size_t j = 0; j + 1 <= k; ++j) {
            R dot(0);
            for (std::size_t i = 0; i < k; ++i)
                if (!RingTraits<R>::is_zero(a(k, i)) && !RingTraits<R>::is_zero(c[i])) dot += a(k, i) * c[i];
            col.push_back(-dot);
            if (j + 1 == k) break;
            std::vector<R> next(k, R(0));
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t l = 0; l < k; ++l)
                    if (!RingTraits<R>::is_zero(a(i, l)) && !RingTraits<R>::is_zero(c[l])) next[i] += a(i, l) * c[l];
            c = std::move(next);
        }
        std::vector<R> q(k + 2, R(0));
        for (std::size_t i = 0; i < k + 2; ++i)
            for (std::size_t j = 0; j <= std::min(i, k); ++j)
                if (i - j < col.size() && !RingTraits<R>::is_zero(p[j])) q[i] += col[i - j] * p[j];
        p = std::move(q);
    }
    std::reverse(p.begin(), p.end());
    return Polynomial<R>(std::move(p));
}

// det(x I - A) over Q via similarity reduction to upper Hessenberg form.
Polynomial<Rational> char_poly_hessenberg(Matrix<Rational> a);

// Exact characteristic polynomial: block split on the nonzero pattern, then
// Hessenberg over Q or Berkowitz over Z[q, 1/q] on each diagonal block.
template <class R>
Polynomial<R> char_poly_exact(const Matrix<R>& a) {
    if (!a.is_square()) throw Error(Errc::DimensionMismatch, "characteristic polynomial of a non-square matrix");
    Polynomial<R> out = Polynomial<R>::constant(R(1));
    for (const auto& block : diagonal_blocks(a)) {
        Matrix<R> sub = a.principal(block);
        if constexpr (RingTraits<R>::is_field)
            out *= char_poly_hessenberg(std::move(sub));
        else
            out *= char_poly_berkowitz(sub);
    }
    return out;
}

} // namespace adams
