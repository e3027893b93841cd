#include "doctest.h"

#include <algorithm>
#include <map>
#include <sstream>

#include "adams/cofree.hpp"
#include "adams/hopf.hpp"
#include "adams/hopf_json.hpp"
#include "adams/spectra.hpp"
#include "support.hpp"

using namespace adams;
using namespace adams::hopf;
using combinatorics::WeightedAlphabet;
using testing::ints;

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream in(s);
    std::string part;
    while (std::getline(in, part, sep)) out.push_back(part);
    return out;
}

int letter_weight(const std::string& letter) { return std::stoi(letter); }

// Signed, q-weighted reversal read off the word labels.
template <class R>
Matrix<R> reversal_formula(const HopfInstance<R>& inst, int m, const R& q) {
    Matrix<R> out(inst.dim(m), inst.dim(m));
    std::map<std::string, std::size_t> index;
    for (std::size_t k = 0; k < inst.dim(m); ++k) index[inst.labels(m)[k]] = k;
    for (std::size_t k = 0; k < inst.dim(m); ++k) {
        if (m == 0) {
            out(0, 0) = R(1);
            continue;
        }
        auto letters = split(inst.labels(m)[k], '.');
        long inv = 0;
        for (std::size_t a = 0; a < letters.size(); ++a)
            for (std::size_t b = a + 1; b < letters.size(); ++b) inv += letter_weight(letters[a]) * letter_weight(letters[b]);
        std::string rev;
        for (std::size_t a = letters.size(); a-- > 0;) rev += letters[a] + (a ? "." : "");
        R sign = letters.size() % 2 ? R(-1) : R(1);
        R qp(1);
        for (long e = 0; e < inv; ++e) qp = qp * q;
        out(index.at(rev), k) = sign * qp;
    }
    return out;
}

std::vector<int> parse_parts(const std::string& label) {
    std::vector<int> out;
    auto open = label.find('('), close = label.find(')');
    for (const auto& s : split(label.substr(open + 1, close - open - 1), ',')) out.push_back(std::stoi(s));
    return out;
}

// (-1)^l(alpha) sum over coarsenings beta of alpha of M_{rev beta}
Matrix<Rational> qsym_antipode_formula(const RationalInstance& inst, int m) {
    Matrix<Rational> out(inst.dim(m), inst.dim(m));
    if (m == 0) {
        out(0, 0) = 1;
        return out;
    }
    std::map<std::vector<int>, std::size_t> index;
    for (std::size_t k = 0; k < inst.dim(m); ++k) index[parse_parts(inst.labels(m)[k])] = k;
    for (std::size_t k = 0; k < inst.dim(m); ++k) {
        auto alpha = parse_parts(inst.labels(m)[k]);
        const std::size_t bars = alpha.size() - 1;
        for (unsigned long keep = 0; keep < (1ul << bars); ++keep) {
            std::vector<int> beta{alpha[0]};
            for (std::size_t b = 0; b < bars; ++b) {
                if (keep >> b & 1)
                    beta.push_back(alpha[b + 1]);
                else
                    beta.back() += alpha[b + 1];
            }
            std::reverse(beta.begin(), beta.end());
            out(index.at(beta), k) += alpha.size() % 2 ? -1 : 1;
        }
    }
    return out;
}

template <class R>
Polynomial<R> closed_form(const HopfInstance<R>& inst, const Rational& n, int m);

template <>
Polynomial<Rational> closed_form(const RationalInstance& inst, const Rational& n, int m) {
    return spectra::char_poly_adams(spectra::profile_from_h(inst.dimensions()), n, m).expand();
}

std::vector<RationalInstance> rational_instances(int M) {
    std::vector<RationalInstance> out;
    out.push_back(build_shuffle(WeightedAlphabet{ints({1})}, Rational(1), M));
    out.push_back(build_shuffle(WeightedAlphabet{ints({2})}, Rational(1), M));
    out.push_back(build_shuffle(WeightedAlphabet{ints({1, 1})}, Rational(1), M));
    out.push_back(build_shuffle(WeightedAlphabet{ints({1, 1, 3})}, Rational(1), std::min(M, 4)));
    out.push_back(build_sym_powersum(M));
    out.push_back(build_qsym_monomial(M));
    return out;
}

} // namespace

TEST_CASE("shuffle instances") {
    auto one = build_shuffle(WeightedAlphabet{ints({1})}, Rational(1), 3);
    CHECK(one.dimensions() == ints({1, 1, 1, 1}));
    const auto& aa = one.product(1, 0, 1, 0);
    REQUIRE(aa.size() == 1);
    CHECK(one.labels(2)[aa[0].index] == "1a.1a");
    CHECK(aa[0].coeff == 2);
    CHECK(one.commutative());
    CHECK(one.cocommutative());

    auto two = build_shuffle(WeightedAlphabet{ints({2})}, Rational(1), 4);
    CHECK(two.dimensions() == ints({1, 2, 4, 8, 16}));
    CHECK_FALSE(two.cocommutative());

    LaurentPoly q = LaurentPoly::q();
    auto qi = build_shuffle(WeightedAlphabet{ints({2})}, q, 3);
    std::map<std::string, LaurentPoly> got;
    for (const auto& e : qi.product(1, 0, 1, 1)) got[qi.labels(2)[e.index]] = e.coeff;
    CHECK(got == std::map<std::string, LaurentPoly>{{"1a.1b", LaurentPoly(1)}, {"1b.1a", q}});
    CHECK_FALSE(qi.commutative());

    auto mixed = build_shuffle(WeightedAlphabet{ints({1, 1})}, q, 3);
    got.clear();
    auto b = static_cast<std::size_t>(std::find(mixed.labels(2).begin(), mixed.labels(2).end(), "2a") - mixed.labels(2).begin());
    for (const auto& e : mixed.product(1, 0, 2, b)) got[mixed.labels(3)[e.index]] = e.coeff;
    CHECK(got == std::map<std::string, LaurentPoly>{{"1a.2a", LaurentPoly(1)}, {"2a.1a", q.pow(2)}});

    auto heavy = build_shuffle(WeightedAlphabet{ints({0, 1})}, q, 4);
    auto xx = heavy.product(2, 0, 2, 0);
    REQUIRE(xx.size() == 1);
    CHECK(xx[0].coeff == LaurentPoly(1) + q.pow(4));

    CHECK_THROWS_AS((void)build_shuffle(WeightedAlphabet{ints({3})}, Rational(1), 7), Error);
    try {
        (void)build_shuffle(WeightedAlphabet{ints({3})}, Rational(1), 7);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::TooLarge);
    }
}

TEST_CASE("sym and qsym instances") {
    auto sym = build_sym_powersum(5);
    CHECK(sym.dimensions() == ints({1, 1, 2, 3, 5, 7}));
    CHECK(sym.commutative());
    CHECK(sym.cocommutative());
    for (std::size_t k = 0; k < sym.dim(3); ++k)
        if (sym.labels(3)[k] == "p(3)") CHECK(sym.coproduct(3, k).size() == 2);

    auto qsym = build_qsym_monomial(5);
    CHECK(qsym.dimensions() == ints({1, 1, 2, 4, 8, 16}));
    std::map<std::string, Rational> got;
    for (const auto& e : qsym.product(1, 0, 1, 0)) got[qsym.labels(2)[e.index]] = e.coeff;
    CHECK(got == std::map<std::string, Rational>{{"M(1,1)", Rational(2)}, {"M(2)", Rational(1)}});
    CHECK(qsym.commutative());
    CHECK_FALSE(qsym.cocommutative());
}

TEST_CASE("convolution laws") {
    auto inst = build_shuffle(WeightedAlphabet{ints({1, 1})}, Rational(1), 4);
    auto id = identity_map(inst, 4);
    auto eta = unit_counit(inst, 4);
    CHECK(convolution(id, eta, inst) == id);
    CHECK(convolution(eta, id, inst) == id);
    auto S = antipode_endomorphism(inst, 4);
    CHECK(convolution(S, id, inst) == eta);
    CHECK(convolution(id, S, inst) == eta);

    auto powers = augmentation_powers(inst, 4);
    for (int a = -2; a <= 3; ++a)
        for (int b = -2; b <= 3; ++b)
            CHECK(convolution(adams_endomorphism(powers, Rational(a), 4), adams_endomorphism(powers, Rational(b), 4), inst) ==
                  adams_endomorphism(powers, Rational(a + b), 4));
    for (unsigned n = 1; n <= 3; ++n) {
        CHECK(adams_endomorphism(powers, Rational(n), 4) == convolution_power(id, n, inst));
        CHECK(adams_endomorphism(powers, Rational(-static_cast<int>(n)), 4) == convolution_power(S, n, inst));
    }
    CHECK(adams_matrix(inst, Rational(1), 3) == Matrix<Rational>::identity(inst.dim(3)));
    CHECK(adams_matrix(inst, Rational(0), 3).is_zero());
    CHECK(adams_matrix(inst, Rational(0), 0) == Matrix<Rational>::identity(1));
}

TEST_CASE("adams spectra match the closed form") {
    auto two = build_shuffle(WeightedAlphabet{ints({2})}, Rational(1), 3);
    using P = Polynomial<Rational>;
    auto expect = P::linear(Rational(2)).pow(2) * P::linear(Rational(4)).pow(2) * P::linear(Rational(8)).pow(4);
    CHECK(char_poly_exact(adams_matrix(two, Rational(2), 3)) == expect);
    CHECK(char_poly_exact(adams_matrix(two, Rational(3), 3)) ==
          P::linear(Rational(3)).pow(2) * P::linear(Rational(9)).pow(2) * P::linear(Rational(27)).pow(4));
    // one letter of weight 1 and one of weight 2: aaa, ab, ba
    auto oneone = build_shuffle(WeightedAlphabet{ints({1, 1})}, Rational(1), 3);
    CHECK(char_poly_exact(adams_matrix(oneone, Rational(3), 3)) ==
          P::linear(Rational(3)) * P::linear(Rational(9)) * P::linear(Rational(27)));

    for (const auto& inst : rational_instances(4)) {
        const int M = inst.max_degree();
        auto powers = augmentation_powers(inst, M);
        for (Rational n : {Rational(-2), Rational(-1), Rational(0), Rational(1), Rational(2), Rational(3), Rational(1, 2)}) {
            auto psi = adams_endomorphism(powers, n, M);
            for (int m = 0; m <= M; ++m) CHECK_MESSAGE(char_poly_exact(psi[m]) == closed_form(inst, n, m), inst.name());
        }
    }
}

TEST_CASE("antipode formulas") {
    for (auto v : {ints({1}), ints({2}), ints({1, 1}), ints({1, 1, 3})}) {
        auto inst = build_shuffle(WeightedAlphabet{v}, Rational(1), 4);
        for (int m = 0; m <= 4; ++m) CHECK(antipode_matrix(inst, m) == reversal_formula(inst, m, Rational(1)));
    }
    LaurentPoly q = LaurentPoly::q();
    auto qi = build_shuffle(WeightedAlphabet{ints({1, 1})}, q, 3);
    for (int m = 0; m <= 3; ++m) CHECK(antipode_matrix(qi, m) == reversal_formula(qi, m, q));
    auto qw = build_shuffle(WeightedAlphabet{ints({1, 1})}, Rational(-2, 3), 3);
    for (int m = 0; m <= 3; ++m) CHECK(antipode_matrix(qw, m) == reversal_formula(qw, m, Rational(-2, 3)));

    auto qsym = build_qsym_monomial(5);
    for (int m = 0; m <= 5; ++m) {
        auto S = antipode_matrix(qsym, m);
        CHECK(S == qsym_antipode_formula(qsym, m));
        Rational expect = m == 0 ? 1 : m % 2 == 0 ? 0 : -pow(Rational(2), (m - 1) / 2);
        CHECK(S.trace() == expect);
    }

    auto sym = build_sym_powersum(6);
    auto sym_profile = spectra::preset_profile("sym", 6);
    for (int m = 0; m <= 6; ++m) {
        auto S = antipode_matrix(sym, m);
        Matrix<Rational> diag(sym.dim(m), sym.dim(m));
        for (std::size_t k = 0; k < sym.dim(m); ++k)
            diag(k, k) = m == 0 ? 1 : parse_parts(sym.labels(m)[k]).size() % 2 ? -1 : 1;
        CHECK(S == diag);
        CHECK(S.trace() == spectra::trace_adams(sym_profile, Rational(-1), m));
    }
}

TEST_CASE("antipode eigenvalues are signs") {
    for (const auto& inst : rational_instances(4)) {
        auto p = spectra::profile_from_h(inst.dimensions());
        for (int m = 0; m <= inst.max_degree(); ++m)
            CHECK(char_poly_exact(antipode_matrix(inst, m)) == spectra::char_poly_antipode(p, m).expand());
    }
}

TEST_CASE("eulerian idempotents") {
    auto inst = build_shuffle(WeightedAlphabet{ints({2})}, Rational(1), 4);
    for (int m = 0; m <= 4; ++m) {
        auto E = eulerian_idempotents(inst, m, m);
        REQUIRE(E.size() == static_cast<std::size_t>(m) + 1);
        Matrix<Rational> sum(inst.dim(m), inst.dim(m));
        for (const auto& e : E) sum += e;
        CHECK(sum == Matrix<Rational>::identity(inst.dim(m)));
        for (std::size_t j = 0; j < E.size(); ++j)
            for (std::size_t k = 0; k < E.size(); ++k) {
                if (j == k)
                    CHECK(E[j] * E[j] == E[j]);
                else
                    CHECK((E[j] * E[k]).is_zero());
            }
        for (Rational n : {Rational(-1), Rational(2), Rational(1, 2)}) {
            Matrix<Rational> psi(inst.dim(m), inst.dim(m));
            for (std::size_t k = 0; k < E.size(); ++k) psi += E[k].scaled(pow(n, static_cast<long>(k)));
            CHECK(psi == adams_matrix(inst, n, m));
        }
    }
    CHECK(eulerian_idempotents(inst, 1, 1)[1] == Matrix<Rational>::identity(2));

    auto sym = build_sym_powersum(4);
    CHECK(eulerian_idempotents(sym, 4, 4).size() == 5);

    auto noncomm = build_shuffle(WeightedAlphabet{ints({1, 1})}, Rational(2), 3);
    try {
        (void)eulerian_idempotents(noncomm, 2, 3);
        FAIL("non-commutative, non-cocommutative instance accepted");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NotApplicable);
    }
}

TEST_CASE("nilpotency orders") {
    auto shuffle = build_shuffle(WeightedAlphabet{ints({1, 1})}, Rational(1), 4);
    auto sym = build_sym_powersum(6);
    auto qsym = build_qsym_monomial(6);
    for (int m = 0; m <= 4; ++m) CHECK(nilpotency_order(shuffle, m) == 1);
    for (int m = 0; m <= 6; ++m) {
        CHECK(nilpotency_order(sym, m) == 1);
        CHECK(nilpotency_order(qsym, m) == 1);
    }
}

TEST_CASE("schur indicator against the oracle") {
    for (auto v : {ints({1}), ints({2}), ints({1, 1})}) {
        auto inst = build_shuffle(WeightedAlphabet{v}, Rational(1), 4);
        auto p = spectra::profile_from_h(inst.dimensions());
        for (int n = 1; n <= 2; ++n)
            for (int m = 0; m <= 4; ++m)
                CHECK((antipode_matrix(inst, m) * adams_matrix(inst, Rational(n), m)).trace() ==
                      spectra::schur_indicator(p, Rational(n), m));
    }
}

TEST_CASE("q-antipode characteristic polynomial") {
    LaurentPoly q = LaurentPoly::q();
    for (auto v : {ints({1}), ints({2}), ints({1, 1}), ints({3}), ints({1, 2}), ints({2, 1}), ints({1, 1, 1}), ints({0, 1, 1})}) {
        WeightedAlphabet a{v};
        auto inst = build_shuffle(a, q, 4);
        for (int m = 0; m <= 4; ++m) {
            auto S = antipode_matrix(inst, m);
            CHECK(char_poly_exact(S) == cofree::q_char_poly(a, m).expand());
            CHECK(S.trace() == cofree::q_trace(a, m));
        }
    }
}

TEST_CASE("json round trip") {
    auto inst = build_qsym_monomial(4);
    auto j = instance_to_json(inst);
    CHECK(j["schema"] == 1);
    auto back = instance_from_json<Rational>(j);
    CHECK(instance_to_json(back) == j);
    CHECK(instance_ring(j) == "rational");

    auto qi = build_shuffle(WeightedAlphabet{ints({1, 1})}, LaurentPoly::q(), 3);
    auto jq = instance_to_json(qi);
    auto backq = instance_from_json<LaurentPoly>(nlohmann::json::parse(jq.dump()));
    CHECK(antipode_matrix(backq, 3) == antipode_matrix(qi, 3));
    try {
        (void)instance_from_json<Rational>(jq);
        FAIL("ring mismatch accepted");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::RingMismatch);
    }

    // Corrupt M(1)*M(1) -> drop the M(2) term: associativity or compatibility must fail.
    auto bad = j;
    for (auto& row : bad["product"])
        if (row[0] == 1 && row[2] == 1 && inst.labels(2)[row[4].get<std::size_t>()] == "M(2)") row[5] = "0";
    try {
        (void)instance_from_json<Rational>(bad);
        FAIL("corrupted instance accepted");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::AxiomViolated);
    }
    CHECK_NOTHROW((void)instance_from_json<Rational>(bad, false));
    try {
        (void)instance_from_json<Rational>(nlohmann::json::parse(R"({"schema": 2})"));
        FAIL("bad schema accepted");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::ParseError);
    }
}
