#include "doctest.h"

#include <algorithm>
#include <map>

#include "adams/cofree.hpp"
#include "adams/spectra.hpp"
#include "support.hpp"

using namespace adams;
using namespace adams::cofree;
using combinatorics::WeightedAlphabet;
using testing::ints;
using testing::uniform;

namespace {

WeightedAlphabet random_alphabet(int max_weight, int max_count) {
    WeightedAlphabet a;
    for (int n = 1; n <= max_weight; ++n) a.counts.push_back(uniform(0, max_count));
    return a;
}

// Explicit words over the alphabet, letters encoded as (weight, index).
using Letter = std::pair<int, long>;
using Word = std::vector<Letter>;

void all_words(const WeightedAlphabet& v, int m, Word& cur, std::vector<Word>& out) {
    if (m == 0) {
        out.push_back(cur);
        return;
    }
    for (int w = 1; w <= m; ++w)
        for (long i = 0; i < v.v(w); ++i) {
            cur.emplace_back(w, i);
            all_words(v, m - w, cur, out);
            cur.pop_back();
        }
}

long word_inv(const Word& w) {
    long s = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j) s += static_cast<long>(w[i].first) * w[j].first;
    return s;
}

// Spectrum of the q-antipode on words of weight m, straight from its action
// S(w) = (-1)^k q^{inv} rev(w): fixed words give linear factors, swapped pairs give x^2 - q^{2 inv}.
struct BruteSpectrum {
    std::map<std::pair<long, int>, BigInt> linear;
    std::map<long, BigInt> quadratic;
};

BruteSpectrum brute_spectrum(const WeightedAlphabet& v, int m) {
    std::vector<Word> words;
    Word cur;
    all_words(v, m, cur, words);
    BruteSpectrum out;
    for (const auto& w : words) {
        Word r(w.rbegin(), w.rend());
        long inv = word_inv(w);
        if (r == w)
            out.linear[{inv, w.size() % 2 ? -1 : 1}] += 1;
        else if (w < r)
            out.quadratic[2 * inv] += 1;
    }
    return out;
}

} // namespace

TEST_CASE("cofree spectrum at q = 1") {
    WeightedAlphabet two{ints({2})};
    // words of length 3 over {a, b}: 4 palindromes of odd length, 4 non-palindromes
    auto s = cofree_char_poly(two, 3);
    CHECK(s.epal == 0);
    CHECK(s.opal == 4);
    CHECK(s.nopal == 4);
    CHECK(s.degree() == 8);
    CHECK(s.str() == "(x + 1)^4 (x^2 - 1)^2");
    using P = Polynomial<Rational>;
    CHECK(s.expand() == P::linear(Rational(-1)).pow(4) * P(std::vector<Rational>{-1, 0, 1}).pow(2));
    CHECK(cofree_trace(two, 3) == -4);
    CHECK(cofree_trace(two, 4) == 4);
    CHECK(cofree_char_poly(two, 0).epal == 1);
    CHECK_THROWS_AS((void)cofree_char_poly(two, -1), Error);
}

TEST_CASE("cofree trace agrees with the adams route at n = -1") {
    for (int trial = 0; trial < 40; ++trial) {
        auto v = random_alphabet(static_cast<int>(uniform(1, 4)), 3);
        if (v.v(1) == 0 && v.v(2) == 0 && v.v(3) == 0 && v.v(4) == 0) v.counts[0] = 1;
        const int M = 12;
        auto p = spectra::profile_from_v(v.counts, M);
        for (int m = 0; m <= M; ++m) {
            CHECK(Rational(cofree_trace(v, m)) == spectra::trace_adams(p, Rational(-1), m));
            auto s = cofree_char_poly(v, m);
            CHECK(s.degree() == p.h[m]);
            if (m % 2) CHECK(cofree_trace(v, m) == -combinatorics::pal_table(v, m).total[m]);
        }
    }
}

TEST_CASE("palindrome generating functions at q = 1") {
    for (int trial = 0; trial < 30; ++trial) {
        auto v = random_alphabet(static_cast<int>(uniform(1, 5)), 4);
        const int M = 20;
        auto gf = pal_gfs(v, M);
        auto t = combinatorics::pal_table(v, M);
        for (int m = 0; m <= M; ++m) {
            for (int k = 0; 2 * k + 1 <= M; ++k) {
                CHECK(gf.even.coefficient(k, m) == Rational(t.pal(2 * k, m)));
                CHECK(gf.odd.coefficient(k, m) == Rational(t.pal(2 * k + 1, m)));
            }
            CHECK(gf.trace[m] == Rational(cofree_trace(v, m)));
        }
    }
}

TEST_CASE("q-antipode spectrum against explicit words") {
    WeightedAlphabet one_one{ints({1, 1})};
    auto f = q_char_poly(one_one, 3);
    // compositions of 3: (1,1,1) palindrome, (1,2),(2,1) swapped, (3) absent
    REQUIRE(f.palindromic.size() == 1);
    CHECK(f.palindromic[0].sign == -1);
    CHECK(f.palindromic[0].inv == 3);
    CHECK(f.palindromic[0].mult == 1);
    REQUIRE(f.quadratic.size() == 1);
    CHECK(f.quadratic[0].exponent == 4);
    CHECK(f.quadratic[0].mult == 1);
    CHECK(f.str() == "(x + q^3)^1 (x^2 - q^4)^1");
    CHECK(q_trace(one_one, 3) == -LaurentPoly::q().pow(3));

    for (int trial = 0; trial < 40; ++trial) {
        auto v = random_alphabet(static_cast<int>(uniform(1, 4)), 2);
        int m = static_cast<int>(uniform(0, 7));
        auto brute = brute_spectrum(v, m);
        auto got = q_char_poly(v, m);
        std::map<std::pair<long, int>, BigInt> lin;
        for (const auto& x : got.palindromic) lin[{x.inv, x.sign}] = x.mult;
        std::map<long, BigInt> quad;
        for (const auto& x : got.quadratic) quad[x.exponent] = x.mult;
        CHECK(lin == brute.linear);
        CHECK(quad == brute.quadratic);
        CHECK(got.degree() == combinatorics::word_counts(v, m)[m]);
        CHECK(got.at_q_equals_one() == cofree_char_poly(v, m));
    }
}

TEST_CASE("q-trace of a single weight class") {
    for (int r = 1; r <= 4; ++r) {
        WeightedAlphabet v{ints({r})};
        for (int m = 0; m <= 9; ++m) {
            BigInt c = pow(BigInt(r), static_cast<unsigned>((m + 1) / 2));
            if (m % 2) c = -c;
            CHECK(q_trace(v, m) == LaurentPoly::monomial(c, m * (m - 1) / 2));
        }
    }
}

TEST_CASE("q-trace specializations") {
    for (int trial = 0; trial < 30; ++trial) {
        auto v = random_alphabet(static_cast<int>(uniform(1, 4)), 3);
        int m = static_cast<int>(uniform(0, 9));
        auto tq = q_trace(v, m);
        CHECK(tq.evaluate(Rational(1)) == Rational(cofree_trace(v, m)));
        auto at0 = q_trace_at(v, m, Rational(0));
        CHECK_FALSE(at0.gf_normalization_defined);
        CHECK(at0.value == tq.evaluate(Rational(0)));
        CHECK(q_trace_at(v, m, Rational(3)).gf_normalization_defined);
        auto f = q_char_poly(v, m);
        if (f.degree() > 60) continue;
        // trace of the operator is minus the subleading coefficient of its characteristic polynomial
        auto e = f.expand();
        if (e.degree() >= 1) CHECK(-e.coefficient(e.degree() - 1) == tq);
        for (Rational q : {Rational(2), Rational(-1, 3)}) {
            auto s = f.specialize(q);
            if (s.degree() >= 1) CHECK(-s.coefficient(s.degree() - 1) == tq.evaluate(q));
        }
    }
}

TEST_CASE("q-palindrome generating functions") {
    for (int trial = 0; trial < 15; ++trial) {
        auto v = random_alphabet(static_cast<int>(uniform(1, 3)), 2);
        const int M = 8;
        auto gf = q_pal_gfs(v, M);
        auto table = q_pal_table(v, M);
        for (int m = 0; m <= M; ++m) {
            LaurentPoly norm = LaurentPoly::monomial(1, -(m * (m - 1) / 2));
            for (int k = 0; 2 * k + 1 <= M; ++k) {
                CHECK(gf.even.coefficient(k, m) == table[2 * k][m] * norm);
                CHECK(gf.odd.coefficient(k, m) == table[2 * k + 1][m] * norm);
            }
            CHECK(gf.trace[m] == q_trace(v, m) * norm);
        }
    }
}

TEST_CASE("q-palindrome table collapses to the q = 1 table") {
    for (int trial = 0; trial < 20; ++trial) {
        auto v = random_alphabet(static_cast<int>(uniform(1, 4)), 3);
        const int M = 10;
        auto qt = q_pal_table(v, M);
        auto t = combinatorics::pal_table(v, M);
        for (int k = 0; k <= M; ++k)
            for (int m = 0; m <= M; ++m) CHECK(qt[k][m].evaluate(Rational(1)) == Rational(t.pal(k, m)));
    }
}

TEST_CASE("composition cap") {
    WeightedAlphabet v{ints({1, 1, 1})};
    CHECK_THROWS_AS((void)q_trace(v, 30, 1000), Error);
}
