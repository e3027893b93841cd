#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "adams/combinatorics.hpp"
#include "adams/laurent.hpp"
#include "adams/matrix.hpp"
#include "adams/ring.hpp"

namespace adams::hopf {

template <class R>
struct SparseEntry {
    std::size_t index;
    R coeff;
};

// coeff * b_i (degree p) (x) b_j (degree m - p)
template <class R>
struct CoproductTerm {
    int p;
    std::size_t i;
    std::size_t j;
    R coeff;
};

struct BuildOptions {
    bool verify = true;
    bool force = false;            // lift the dimension cap
    std::size_t dimension_cap = 2000;
};

/// A graded connected (q-)bialgebra through degree M, given on a basis.
/// Degree 0 is spanned by the single label "1". Products and coproducts are
/// sparse; the braiding used by the compatibility axiom is x (x) y -> q^{|x||y|} y (x) x.
template <class R>
class HopfInstance {
public:
    HopfInstance() = default;
    HopfInstance(std::string name, std::vector<std::vector<std::string>> basis, R braid_q);

    const std::string& name() const noexcept { return name_; }
    int max_degree() const noexcept { return static_cast<int>(basis_.size()) - 1; }
    std::size_t dim(int m) const { return basis_.at(static_cast<std::size_t>(m)).size(); }
    const std::vector<std::string>& labels(int m) const { return basis_.at(static_cast<std::size_t>(m)); }
    const R& braid_q() const noexcept { return q_; }
    std::vector<BigInt> dimensions() const;

    // b_i (degree p) * b_j (degree r), with p + r <= M.
    const std::vector<SparseEntry<R>>& product(int p, std::size_t i, int r, std::size_t j) const;
    const std::vector<CoproductTerm<R>>& coproduct(int m, std::size_t k) const;

    void set_product(int p, std::size_t i, int r, std::size_t j, std::vector<SparseEntry<R>> value);
    void set_coproduct(int m, std::size_t k, std::vector<CoproductTerm<R>> value);

    bool commutative() const;
    bool cocommutative() const;

    // Unit, counit, associativity, coassociativity and braided compatibility
    // through degree M; throws AxiomViolated naming the first failure.
    void verify_axioms() const;

private:
    std::size_t product_slot(int p, int r) const;

    std::string name_;
    std::vector<std::vector<std::string>> basis_;
    R q_ = R(1);
    // products_[slot(p, r)][i * dim(r) + j]
    std::vector<std::vector<std::vector<SparseEntry<R>>>> products_;
    std::vector<std::vector<std::vector<CoproductTerm<R>>>> coproducts_;
};

using RationalInstance = HopfInstance<Rational>;
using QInstance = HopfInstance<LaurentPoly>;

/// Words over the weighted alphabet; q-shuffle product, deconcatenation coproduct.
template <class R>
HopfInstance<R> build_shuffle(const combinatorics::WeightedAlphabet& v, const R& q, int M, const BuildOptions& options = {});

/// Power-sum basis p_lambda of symmetric functions.
RationalInstance build_sym_powersum(int M, const BuildOptions& options = {});

/// Monomial basis M_alpha of quasisymmetric functions, quasi-shuffle product.
RationalInstance build_qsym_monomial(int M, const BuildOptions& options = {});

/// Per-degree square matrices; column j holds the image of basis element j.
template <class R>
struct GradedEndomorphism {
    std::vector<Matrix<R>> blocks;

    int max_degree() const noexcept { return static_cast<int>(blocks.size()) - 1; }
    const Matrix<R>& operator[](int m) const { return blocks.at(static_cast<std::size_t>(m)); }
    Matrix<R>& operator[](int m) { return blocks.at(static_cast<std::size_t>(m)); }
    friend bool operator==(const GradedEndomorphism&, const GradedEndomorphism&) = default;
};

template <class R>
GradedEndomorphism<R> identity_map(const HopfInstance<R>& inst, int m);
// iota o epsilon
template <class R>
GradedEndomorphism<R> unit_counit(const HopfInstance<R>& inst, int m);

template <class R>
GradedEndomorphism<R> add(const GradedEndomorphism<R>& a, const GradedEndomorphism<R>& b);
template <class R>
GradedEndomorphism<R> scale(const GradedEndomorphism<R>& a, const R& c);
// Degreewise matrix product (composition a o b).
template <class R>
GradedEndomorphism<R> compose(const GradedEndomorphism<R>& a, const GradedEndomorphism<R>& b);

// mu o (A (x) B) o Delta, through the smaller of the two degrees.
template <class R>
GradedEndomorphism<R> convolution(const GradedEndomorphism<R>& a, const GradedEndomorphism<R>& b, const HopfInstance<R>& inst);

// (id - iota o epsilon)^{*k} for k = 0..m, each through degree m.
template <class R>
std::vector<GradedEndomorphism<R>> augmentation_powers(const HopfInstance<R>& inst, int m);

// sum_k C(n, k) (id - iota o epsilon)^{*k}. Over the Laurent ring n must make every C(n, k) integral.
template <class R>
GradedEndomorphism<R> adams_endomorphism(const HopfInstance<R>& inst, const Rational& n, int m);
template <class R>
GradedEndomorphism<R> adams_endomorphism(const std::vector<GradedEndomorphism<R>>& powers, const Rational& n, int m);
template <class R>
Matrix<R> adams_matrix(const HopfInstance<R>& inst, const Rational& n, int m);

// A^{*k} by repeated convolution; k = 0 gives iota o epsilon.
template <class R>
GradedEndomorphism<R> convolution_power(const GradedEndomorphism<R>& a, unsigned k, const HopfInstance<R>& inst);

// Takeuchi: sum_k (iota o epsilon - id)^{*k}.
template <class R>
GradedEndomorphism<R> antipode_endomorphism(const HopfInstance<R>& inst, int m);
template <class R>
Matrix<R> antipode_matrix(const HopfInstance<R>& inst, int m);

// E^(k) on degree m for k = 0..k_max. Rational instances that are commutative
// or cocommutative only; NotApplicable otherwise.
std::vector<Matrix<Rational>> eulerian_idempotents(const RationalInstance& inst, int k_max, int m);
std::vector<GradedEndomorphism<Rational>> eulerian_endomorphisms(const RationalInstance& inst, int k_max, int m);

// Least d >= 1 with (S^2 - id)^d = 0 on H_m.
template <class R>
int nilpotency_order(const HopfInstance<R>& inst, int m);

} // namespace adams::hopf
