#pragma once

#include <cstddef>
#include <iterator>
#include <string>
#include <vector>

#include "adams/numeric.hpp"

namespace adams::combinatorics {

/// Integer partition stored by multiplicities: multiplicities[i-1] = k_i is
/// the number of parts equal to i (lambda = 1^{k_1} 2^{k_2} ...).
struct Partition {
    std::vector<int> multiplicities;

    int size() const;
    int length() const;
    int largest_part() const;
    int count_of(int part) const;
    // Parts in weakly decreasing order.
    std::vector<int> parts() const;
    Partition conjugate() const;
    bool is_strict() const;
    bool all_parts_odd() const;
    int even_part_count() const;
    std::string str() const;

    static Partition from_parts(const std::vector<int>& parts);
    friend bool operator==(const Partition& a, const Partition& b);
};

namespace detail {
template <class F>
void partitions_from(int remaining, int max_part, std::vector<int>& mult, F& f) {
    if (remaining == 0) {
        Partition p;
        std::size_t top = mult.size();
        while (top > 0 && mult[top - 1] == 0) --top;
        p.multiplicities.assign(mult.begin(), mult.begin() + static_cast<long>(top));
        f(p);
        return;
    }
    if (max_part == 0) return;
    for (int k = remaining / max_part; k >= 0; --k) {
        mult[static_cast<std::size_t>(max_part - 1)] = k;
        partitions_from(remaining - k * max_part, max_part - 1, mult, f);
    }
    mult[static_cast<std::size_t>(max_part - 1)] = 0;
}
} // namespace detail

// Calls f(const Partition&) once for every partition of m, choosing the
// multiplicity of the largest part first.
template <class F>
void for_each_partition(int m, F&& f) {
    std::vector<int> mult(static_cast<std::size_t>(m), 0);
    if (m == 0) {
        f(Partition{});
        return;
    }
    detail::partitions_from(m, m, mult, f);
}

std::vector<Partition> partitions(int m);

// p_k(m): partitions of m into exactly k parts.
BigInt partitions_by_length(int m, int k);

struct PartitionStatistics {
    BigInt total;
    BigInt self_conjugate;    // c(m)
    BigInt even_even_parts;   // e(m): an even number of even parts
    BigInt odd_even_parts;    // o(m): an odd number of even parts
    BigInt even_length;
    BigInt odd_length;
    BigInt strict;
    BigInt odd_parts;         // every part odd
};

PartitionStatistics partition_statistics(int m);

// prod_i C(g_i + k_i - 1, k_i). g[i-1] = g_i must cover every part of lambda.
BigInt multiset_coefficient(const std::vector<BigInt>& g, const Partition& lambda);

/// Triangular array T(k, m) for 0 <= k, m <= max_degree (entries with k > m are zero).
class TriangleTable {
public:
    explicit TriangleTable(int max_degree);

    int max_degree() const noexcept { return max_degree_; }
    const BigInt& operator()(int k, int m) const;
    BigInt& operator()(int k, int m);
    std::vector<BigInt> column(int m) const;
    BigInt column_sum(int m) const;
    // sum_k (-1)^k T(k, m)
    BigInt alternating_column_sum(int m) const;
    const std::vector<std::vector<BigInt>>& rows() const noexcept { return rows_; }
    friend bool operator==(const TriangleTable& a, const TriangleTable& b) = default;

private:
    int max_degree_;
    std::vector<std::vector<BigInt>> rows_; // rows_[k][m]
};

// mul(k, m) = number of k-multisets of total weight m drawn from g_i items of weight i,
// computed from the bivariate product prod_i (1 - s t^i)^{-g_i}.
TriangleTable mul_table(const std::vector<BigInt>& g, int max_degree);

/// v_n letters of weight n; counts[n-1] = v_n, weights beyond the vector are empty.
struct WeightedAlphabet {
    std::vector<BigInt> counts;

    BigInt v(int n) const {
        return n >= 1 && n <= static_cast<int>(counts.size()) ? counts[static_cast<std::size_t>(n - 1)] : BigInt(0);
    }
    int max_weight() const noexcept { return static_cast<int>(counts.size()); }
    void validate() const;
    std::string str() const;
};

// Lyndon-word counts g_1..g_N from the Moebius/partition formula.
std::vector<BigInt> witt_counts(const WeightedAlphabet& alphabet, int max_degree);

// Word counts h_0..h_M from 1/(1 - v(t)).
std::vector<BigInt> word_counts(const WeightedAlphabet& alphabet, int max_degree);

struct PalTable {
    TriangleTable pal;             // pal(k, m)
    std::vector<BigInt> total;     // pal(m)
    std::vector<BigInt> even;      // epal(m)
    std::vector<BigInt> odd;       // opal(m)
    std::vector<BigInt> nonpal;    // nopal(m)
    std::vector<BigInt> words;     // h_m
};

// Palindrome counts from the "strip first and last letter" recursion.
PalTable pal_table(const WeightedAlphabet& alphabet, int max_degree);

/// Composition alpha = (a_1, ..., a_k) read as the multiweight of a word.
struct WeightedComposition {
    std::vector<int> parts;

    int length() const noexcept { return static_cast<int>(parts.size()); }
    int weight() const;
    WeightedComposition reversed() const;
    bool is_palindrome() const;
    // sum_{i<j} a_i a_j
    long inv() const;
    std::string str() const;
    friend bool operator==(const WeightedComposition&, const WeightedComposition&) = default;
};

struct CompositionEntry {
    WeightedComposition alpha;
    BigInt pal;
    BigInt nopal;
    long inv = 0;
};

/// Lazily enumerates the compositions of m whose parts are weights with at
/// least one letter, in lexicographic order, together with their palindrome
/// data. Iterating past `cap` compositions throws TooLarge.
class WeightedCompositions {
public:
    static constexpr std::size_t default_cap = 1'000'000;

    WeightedCompositions(WeightedAlphabet alphabet, int m, std::size_t cap = default_cap);

    class iterator {
    public:
        using value_type = CompositionEntry;
        using difference_type = std::ptrdiff_t;
        using reference = const CompositionEntry&;
        using pointer = const CompositionEntry*;
        using iterator_category = std::input_iterator_tag;

        iterator() = default;
        reference operator*() const { return entry_; }
        pointer operator->() const { return &entry_; }
        iterator& operator++();
        void operator++(int) { ++*this; }
        friend bool operator==(const iterator& a, const iterator& b) { return a.done_ == b.done_; }

    private:
        friend class WeightedCompositions;
        explicit iterator(const WeightedCompositions* owner);
        void complete(int sum);
        void refresh();

        const WeightedCompositions* owner_ = nullptr;
        std::vector<int> parts_;
        std::size_t produced_ = 0;
        bool done_ = true;
        CompositionEntry entry_;
    };

    iterator begin() const { return iterator(this); }
    iterator end() const { return iterator(); }
    std::vector<CompositionEntry> collect() const;

    const WeightedAlphabet& alphabet() const noexcept { return alphabet_; }
    int weight() const noexcept { return m_; }

private:
    WeightedAlphabet alphabet_;
    int m_;
    std::size_t cap_;
    std::vector<int> allowed_;    // weights with v_a > 0, ascending
    std::vector<char> reachable_; // reachable_[r]: r is a sum of allowed weights
};

// pal(alpha), nopal(alpha) for a single multiweight.
CompositionEntry composition_entry(const WeightedAlphabet& alphabet, const WeightedComposition& alpha);

} // namespace adams::combinatorics
