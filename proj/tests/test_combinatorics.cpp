#include "doctest.h"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "adams/combinatorics.hpp"
#include "adams/euler.hpp"
#include "figures.hpp"
#include "support.hpp"

using namespace adams;
using namespace adams::combinatorics;
using testing::ints;
using testing::uniform;

namespace {

// Weakly decreasing part lists, generated independently of for_each_partition.
void brute_partitions(int m, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (m == 0) {
        out.push_back(cur);
        return;
    }
    for (int a = std::min(m, max_part); a >= 1; --a) {
        cur.push_back(a);
        brute_partitions(m - a, a, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<int>> brute_partitions(int m) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    brute_partitions(m, m, cur, out);
    return out;
}

using Letter = std::pair<int, int>; // (weight, index)

// Every word of weight m over the alphabet, as letter sequences.
void brute_words(const std::vector<long>& v, int m, std::vector<Letter>& cur, std::vector<std::vector<Letter>>& out) {
    if (m == 0) {
        out.push_back(cur);
        return;
    }
    for (int a = 1; a <= std::min<int>(m, static_cast<int>(v.size())); ++a)
        for (int i = 0; i < v[static_cast<std::size_t>(a - 1)]; ++i) {
            cur.emplace_back(a, i);
            brute_words(v, m - a, cur, out);
            cur.pop_back();
        }
}

std::vector<std::vector<Letter>> brute_words(const std::vector<long>& v, int m) {
    std::vector<std::vector<Letter>> out;
    std::vector<Letter> cur;
    brute_words(v, m, cur, out);
    return out;
}

WeightedAlphabet alphabet(const std::vector<long>& v) { return {std::vector<BigInt>(v.begin(), v.end())}; }

std::vector<long> random_alphabet(int max_total) {
    std::vector<long> v(static_cast<std::size_t>(uniform(1, 5)), 0);
    int budget = static_cast<int>(uniform(1, max_total));
    while (budget-- > 0) ++v[static_cast<std::size_t>(uniform(0, static_cast<long>(v.size()) - 1))];
    return v;
}

} // namespace

TEST_CASE("partition basics") {
    auto p = Partition::from_parts({3, 1, 1});
    CHECK(p.size() == 5);
    CHECK(p.length() == 3);
    CHECK(p.parts() == std::vector<int>{3, 1, 1});
    CHECK(p.conjugate().parts() == std::vector<int>{3, 1, 1});
    CHECK(Partition::from_parts({4, 2}).conjugate().parts() == std::vector<int>{2, 2, 1, 1});
    CHECK(p.str() == "(3,1,1)");
    CHECK(Partition{}.conjugate() == Partition{});

    for (int m = 0; m <= 12; ++m) {
        auto lib = partitions(m);
        auto brute = brute_partitions(m);
        REQUIRE(lib.size() == brute.size());
        std::set<std::vector<int>> a, b(brute.begin(), brute.end());
        for (const auto& x : lib) {
            a.insert(x.parts());
            CHECK(x.size() == m);
            CHECK(x.conjugate().conjugate() == x);
        }
        CHECK(a == b);
    }
}

TEST_CASE("partitions by length") {
    for (int k = 1; k <= 3; ++k) CHECK(partitions_by_length(3, k) == 1);
    CHECK(partitions_by_length(5, 0) == 0);
    CHECK(partitions_by_length(0, 0) == 1);
    BigInt total = 0;
    for (int k = 0; k <= 6; ++k) total += partitions_by_length(6, k);
    CHECK(total == 11);
    for (int m = 0; m <= 15; ++m) {
        std::map<int, long> by_len;
        for (const auto& parts : brute_partitions(m)) ++by_len[static_cast<int>(parts.size())];
        for (int k = 0; k <= m + 1; ++k) CHECK(partitions_by_length(m, k) == by_len[k]);
    }
}

TEST_CASE("partition statistics") {
    auto s4 = partition_statistics(4);
    CHECK(s4.total == 5);
    CHECK(s4.self_conjugate == 1);
    CHECK(s4.even_even_parts == 3);
    CHECK(s4.odd_even_parts == 2);
    auto s0 = partition_statistics(0);
    CHECK(s0.self_conjugate == 1);
    CHECK(s0.even_even_parts == 1);
    CHECK(s0.odd_even_parts == 0);

    for (int m = 0; m <= 40; ++m) {
        auto s = partition_statistics(m);
        CHECK(s.strict == s.odd_parts);
        CHECK(s.self_conjugate == s.even_even_parts - s.odd_even_parts);
        BigInt alt = 0;
        for (int k = 0; k <= m; ++k) alt += (k % 2 ? -1 : 1) * partitions_by_length(m, k);
        CHECK((m % 2 ? -1 : 1) * s.self_conjugate == alt);
        CHECK(s.even_length + s.odd_length == s.total);
    }
}

TEST_CASE("multiset coefficients") {
    std::vector<BigInt> ones(8, 1);
    for (int m = 0; m <= 8; ++m)
        for (const auto& lambda : partitions(m)) CHECK(multiset_coefficient(ones, lambda) == 1);
    CHECK(multiset_coefficient(ints({2, 1}), Partition{}) == 1);
    CHECK(multiset_coefficient(ints({2, 1}), Partition::from_parts({1, 1, 1})) == 4);
    // 3-multisets from {a, b}: aaa, aab, abb, bbb
    CHECK(multiset_coefficient(ints({2, 3}), Partition::from_parts({2, 2, 1})) == 2 * 6);
    CHECK_THROWS_AS((void)multiset_coefficient(ints({1}), Partition::from_parts({2})), Error);
}

TEST_CASE("mul table") {
    auto sym = mul_table(std::vector<BigInt>(12, 1), 12);
    for (int m = 0; m <= 12; ++m)
        for (int k = 0; k <= 12; ++k) CHECK(sym(k, m) == partitions_by_length(m, k));

    auto ssym = mul_table(ints({1, 1, 4, 17, 92, 572}), 6);
    CHECK(ssym.column(3) == ints({0, 4, 1, 1, 0, 0, 0}));
    for (int k = 1; k <= 6; ++k)
        for (int m = 1; m <= 6; ++m) CHECK(ssym(k, m) == testing::kSsymMulArray[k - 1][m - 1]);

    auto zero = mul_table(ints({0, 0, 0}), 3);
    for (int k = 0; k <= 3; ++k)
        for (int m = 0; m <= 3; ++m) CHECK(zero(k, m) == (k == 0 && m == 0 ? 1 : 0));

    CHECK_THROWS_AS((void)ssym(7, 1), Error);

    // Sum of multiset coefficients over partitions of m with k parts.
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<BigInt> g;
        for (int i = 0; i < 10; ++i) g.push_back(uniform(0, 4));
        auto t = mul_table(g, 10);
        for (int m = 0; m <= 10; ++m) {
            std::vector<BigInt> col(11, 0);
            for (const auto& lambda : partitions(m)) col[lambda.length()] += multiset_coefficient(g, lambda);
            CHECK(t.column(m) == col);
        }
    }

    for (int trial = 0; trial < 40; ++trial) {
        int M = static_cast<int>(uniform(0, 18));
        std::vector<BigInt> g;
        for (int i = 0; i < M; ++i) g.push_back(uniform(0, 6));
        auto t = mul_table(g, M);
        auto h = integer_coefficients(euler_transform(g, M));
        for (int m = 0; m <= M; ++m) CHECK(t.column_sum(m) == h[m]);
    }
}

TEST_CASE("witt counts") {
    CHECK(witt_counts(alphabet(std::vector<long>(6, 1)), 6) == ints({1, 1, 2, 3, 6, 9}));
    CHECK(witt_counts(alphabet(testing::kSsymAlphabet), 6) == ints({1, 1, 4, 17, 92, 572}));
    CHECK(witt_counts(alphabet({1}), 5) == ints({1, 0, 0, 0, 0}));
    CHECK_THROWS_AS((void)witt_counts(alphabet({1, -1}), 3), Error);

    for (int trial = 0; trial < 60; ++trial) {
        auto v = random_alphabet(8);
        auto A = alphabet(v);
        auto h = word_counts(A, 12);
        CHECK(witt_counts(A, 12) == inverse_euler_transform(h).g);
    }
}

TEST_CASE("moebius") {
    CHECK(moebius(1) == 1);
    CHECK(moebius(4) == 0);
    CHECK(moebius(30) == -1);
    CHECK(moebius(6) == 1);
    CHECK(moebius(7) == -1);
}

TEST_CASE("palindrome table") {
    auto ssym = pal_table(alphabet(testing::kSsymAlphabet), 6);
    for (int k = 1; k <= 6; ++k)
        for (int m = 1; m <= 6; ++m) CHECK(ssym.pal(k, m) == testing::kSsymPalArray[k - 1][m - 1]);
    CHECK(ssym.pal(3, 5) == 4);
    CHECK(ssym.pal(2, 6) == 3);
    CHECK(ssym.pal(0, 0) == 1);

    // QSym: pal(k,m) = C(ceil(m/2)-1, ceil(k/2)-1) for m even or k odd
    auto qsym = pal_table(alphabet(std::vector<long>(20, 1)), 20);
    for (int m = 1; m <= 20; ++m)
        for (int k = 1; k <= m; ++k) {
            BigInt expected = (m % 2 == 0 || k % 2 == 1) ? binomial((m + 1) / 2 - 1, (k + 1) / 2 - 1) : BigInt(0);
            CHECK(qsym.pal(k, m) == expected);
        }

    // Peak: one letter of each odd weight
    std::vector<long> odd(20, 0);
    for (std::size_t i = 0; i < odd.size(); i += 2) odd[i] = 1;
    auto peak = pal_table(alphabet(odd), 20);
    for (int m = 1; m <= 20; ++m)
        for (int k = 1; k <= m; ++k) {
            BigInt expected = 0;
            if (m % 2 == 0 && (m - k) % 4 == 0)
                expected = binomial((m + k) / 4 - 1, (m - k) / 4);
            else if (m % 2 == 1 && k % 2 == 1)
                expected = binomial((m + k - 1) / 4, (m - k + 1) / 4);
            CHECK(peak.pal(k, m) == expected);
        }

    auto empty = pal_table(alphabet({}), 5);
    for (int k = 0; k <= 5; ++k)
        for (int m = 0; m <= 5; ++m) CHECK(empty.pal(k, m) == (k == 0 && m == 0 ? 1 : 0));
    CHECK(empty.words == ints({1, 0, 0, 0, 0, 0}));
}

TEST_CASE("palindrome table against word enumeration") {
    for (int trial = 0; trial < 40; ++trial) {
        auto v = random_alphabet(4);
        const int M = 7;
        auto t = pal_table(alphabet(v), M);
        for (int m = 0; m <= M; ++m) {
            auto words = brute_words(v, m);
            CHECK(t.words[m] == static_cast<long>(words.size()));
            std::map<int, long> pal;
            for (const auto& w : words)
                if (std::equal(w.begin(), w.end(), w.rbegin())) ++pal[static_cast<int>(w.size())];
            for (int k = 0; k <= M; ++k) CHECK(t.pal(k, m) == pal[k]);
        }
    }
}

TEST_CASE("palindrome table properties") {
    for (int trial = 0; trial < 100; ++trial) {
        auto v = random_alphabet(8);
        auto t = pal_table(alphabet(v), 12);
        for (int m = 0; m <= 12; ++m) {
            CHECK(t.nonpal[m] % 2 == 0);
            CHECK(t.nonpal[m] >= 0);
            if (m % 2)
                for (int k = 0; k <= 12; k += 2) CHECK(t.pal(k, m) == 0);
        }
    }
}

TEST_CASE("weighted compositions") {
    auto v11 = alphabet({1, 1});
    auto c3 = WeightedCompositions(v11, 3).collect();
    REQUIRE(c3.size() == 3);
    CHECK(c3[0].alpha.parts == std::vector<int>{1, 1, 1});
    CHECK(c3[0].pal == 1);
    CHECK(c3[0].inv == 3);
    for (std::size_t i = 1; i < 3; ++i) {
        CHECK(c3[i].pal == 0);
        CHECK(c3[i].nopal == 1);
        CHECK(c3[i].inv == 2);
    }
    CHECK(c3[1].alpha.parts == std::vector<int>{1, 2});
    CHECK(c3[2].alpha.parts == std::vector<int>{2, 1});

    auto single = composition_entry(alphabet({0, 0, 5}), WeightedComposition{{3}});
    CHECK(single.inv == 0);
    CHECK(single.pal == 5);
    CHECK(single.nopal == 0);

    for (long r = 1; r <= 3; ++r)
        for (int m = 1; m <= 8; ++m) {
            auto all = WeightedCompositions(alphabet({r}), m).collect();
            REQUIRE(all.size() == 1);
            CHECK(all[0].inv == m * (m - 1) / 2);
            CHECK(all[0].pal == pow(BigInt(r), static_cast<unsigned>((m + 1) / 2)));
        }

    auto zero = WeightedCompositions(alphabet({}), 0).collect();
    REQUIRE(zero.size() == 1);
    CHECK(zero[0].alpha.parts.empty());
    CHECK(zero[0].pal == 1);
    CHECK(WeightedCompositions(alphabet({0, 1}), 3).collect().empty());

    for (int trial = 0; trial < 60; ++trial) {
        auto v = random_alphabet(8);
        auto A = alphabet(v);
        auto h = word_counts(A, 10);
        for (int m = 0; m <= 10; ++m) {
            BigInt total = 0;
            for (const auto& e : WeightedCompositions(A, m)) {
                total += e.pal + e.nopal;
                CHECK(e.alpha.weight() == m);
                CHECK(e.inv == e.alpha.reversed().inv());
                long sq = 0;
                for (int a : e.alpha.parts) sq += a * a;
                CHECK(2 * e.inv == m * m - sq);
                if (!e.alpha.is_palindrome()) CHECK(e.pal == 0);
                for (int a : e.alpha.parts) CHECK(A.v(a) > 0);
            }
            CHECK(total == h[m]);
        }
    }

    try {
        for (const auto& e : WeightedCompositions(alphabet(std::vector<long>(20, 1)), 20, 1000)) (void)e;
        FAIL("cap not enforced");
    } catch (const Error& err) {
        CHECK(err.code() == Errc::TooLarge);
    }
}
