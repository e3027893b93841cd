#include "adams/matrix.hpp"

namespace adams {

Polynomial<Rational> char_poly_hessenberg(Matrix<Rational> a) {
    if (!a.is_square()) throw Error(Errc::DimensionMismatch, "characteristic polynomial of a non-square matrix");
    const std::size_t n = a.rows();
    // Gaussian similarity transforms: zero out below the subdiagonal.
    for (std::size_t j = 0; j + 2 <= n; ++j) {
        std::size_t pivot = j + 1;
        while (pivot < n && a(pivot, j) == 0) ++pivot;
        if (pivot == n) continue;
        if (pivot != j + 1) {
            for (std::size_t c = 0; c < n; ++c) std::swap(a(pivot, c), a(j + 1, c));
            for (std::size_t r = 0; r < n; ++r) std::swap(a(r, pivot), a(r, j + 1));
        }
        const Rational inv = Rational(1) / a(j + 1, j);
        for (std::size_t i = j + 2; i < n; ++i) {
            if (a(i, j) == 0) continue;
            Rational f = a(i, j) * inv;
            for (std::size_t c = 0; c < n; ++c) a(i, c) -= f * a(j + 1, c);
            for (std::size_t r = 0; r < n; ++r) a(r, j + 1) += f * a(r, i);
        }
    }
    // p_k = (x - h_kk) p_{k-1} - sum_{i<k} h_ik (prod_{l=i+1}^{k} h_{l,l-1}) p_{i-1}
    std::vector<Polynomial<Rational>> p{Polynomial<Rational>::constant(Rational(1))};
    for (std::size_t k = 0; k < n; ++k) {
        Polynomial<Rational> next = Polynomial<Rational>::linear(a(k, k)) * p[k];
        Rational prod = 1;
        for (std::size_t i = k; i-- > 0;) {
            prod *= a(i + 1, i);
            if (prod == 0) break;
            if (a(i, k) != 0) next -= p[i].scaled(a(i, k) * prod);
        }
        p.push_back(std::move(next));
    }
    return p.back();
}

} // namespace adams
