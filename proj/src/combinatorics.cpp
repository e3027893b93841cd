#include "adams/combinatorics.hpp"

#include <algorithm>

#include "adams/errors.hpp"

namespace adams::combinatorics {

int Partition::size() const {
    int s = 0;
    for (std::size_t i = 0; i < multiplicities.size(); ++i) s += static_cast<int>(i + 1) * multiplicities[i];
    return s;
}

int Partition::length() const {
    int s = 0;
    for (int k : multiplicities) s += k;
    return s;
}

int Partition::largest_part() const {
    for (std::size_t i = multiplicities.size(); i > 0; --i)
        if (multiplicities[i - 1] > 0) return static_cast<int>(i);
    return 0;
}

int Partition::count_of(int part) const {
    return part >= 1 && part <= static_cast<int>(multiplicities.size())
               ? multiplicities[static_cast<std::size_t>(part - 1)]
               : 0;
}

std::vector<int> Partition::parts() const {
    std::vector<int> out;
    for (int i = largest_part(); i >= 1; --i) out.insert(out.end(), static_cast<std::size_t>(count_of(i)), i);
    return out;
}

Partition Partition::from_parts(const std::vector<int>& parts) {
    Partition p;
    for (int a : parts) {
        if (a <= 0) throw Error(Errc::InvalidArgument, "partition parts must be positive");
        if (static_cast<int>(p.multiplicities.size()) < a) p.multiplicities.resize(static_cast<std::size_t>(a), 0);
        ++p.multiplicities[static_cast<std::size_t>(a - 1)];
    }
    return p;
}

Partition Partition::conjugate() const {
    // lambda'_j = #{parts >= j}
    std::vector<int> conj;
    int at_least = 0;
    for (int j = largest_part(); j >= 1; --j) {
        at_least += count_of(j);
        conj.push_back(at_least);
    }
    return from_parts(conj);
}

bool Partition::is_strict() const {
    return std::all_of(multiplicities.begin(), multiplicities.end(), [](int k) { return k <= 1; });
}

bool Partition::all_parts_odd() const {
    for (std::size_t i = 1; i < multiplicities.size(); i += 2)
        if (multiplicities[i] > 0) return false;
    return true;
}

int Partition::even_part_count() const {
    int n = 0;
    for (std::size_t i = 1; i < multiplicities.size(); i += 2) n += multiplicities[i];
    return n;
}

std::string Partition::str() const {
    std::string out = "(";
    auto p = parts();
    for (std::size_t i = 0; i < p.size(); ++i) out += (i ? "," : "") + std::to_string(p[i]);
    return out + ")";
}

bool operator==(const Partition& a, const Partition& b) {
    std::size_t n = std::max(a.multiplicities.size(), b.multiplicities.size());
    for (std::size_t i = 0; i < n; ++i)
        if (a.count_of(static_cast<int>(i + 1)) != b.count_of(static_cast<int>(i + 1))) return false;
    return true;
}

std::vector<Partition> partitions(int m) {
    std::vector<Partition> out;
    for_each_partition(m, [&](const Partition& p) { out.push_back(p); });
    return out;
}

BigInt partitions_by_length(int m, int k) {
    if (m < 0 || k < 0) throw Error(Errc::InvalidArgument, "partitions_by_length needs m, k >= 0");
    if (k > m) return 0;
    // p_k(n) = p_{k-1}(n-1) + p_k(n-k)
    std::vector<std::vector<BigInt>> p(static_cast<std::size_t>(k) + 1,
                                       std::vector<BigInt>(static_cast<std::size_t>(m) + 1, 0));
    p[0][0] = 1;
    for (int j = 1; j <= k; ++j)
        for (int n = j; n <= m; ++n) p[j][n] = p[j - 1][n - 1] + p[j][n - j];
    return p[k][m];
}

PartitionStatistics partition_statistics(int m) {
    if (m < 0) throw Error(Errc::InvalidArgument, "partition_statistics needs m >= 0");
    PartitionStatistics s{};
    for_each_partition(m, [&](const Partition& p) {
        ++s.total;
        if (p == p.conjugate()) ++s.self_conjugate;
        if (p.even_part_count() % 2 == 0)
            ++s.even_even_parts;
        else
            ++s.odd_even_parts;
        if (p.length() % 2 == 0)
            ++s.even_length;
        else
            ++s.odd_length;
        if (p.is_strict()) ++s.strict;
        if (p.all_parts_odd()) ++s.odd_parts;
    });
    return s;
}

BigInt multiset_coefficient(const std::vector<BigInt>& g, const Partition& lambda) {
    if (lambda.largest_part() > static_cast<int>(g.size()))
        throw Error(Errc::DegreeOutOfRange, "g is defined up to " + std::to_string(g.size()) +
                                                " but lambda has part " + std::to_string(lambda.largest_part()));
    BigInt r = 1;
    for (std::size_t i = 0; i < lambda.multiplicities.size(); ++i)
        r *= multichoose(g[i], static_cast<unsigned>(lambda.multiplicities[i]));
    return r;
}

TriangleTable::TriangleTable(int max_degree)
    : max_degree_(max_degree),
      rows_(static_cast<std::size_t>(max_degree) + 1, std::vector<BigInt>(static_cast<std::size_t>(max_degree) + 1, 0)) {
    if (max_degree < 0) throw Error(Errc::InvalidArgument, "negative max degree");
}

const BigInt& TriangleTable::operator()(int k, int m) const {
    if (k < 0 || m < 0 || k > max_degree_ || m > max_degree_)
        throw Error(Errc::DegreeOutOfRange, "(" + std::to_string(k) + "," + std::to_string(m) + ") outside table of degree " +
                                                std::to_string(max_degree_));
    return rows_[static_cast<std::size_t>(k)][static_cast<std::size_t>(m)];
}

BigInt& TriangleTable::operator()(int k, int m) {
    return const_cast<BigInt&>(static_cast<const TriangleTable&>(*this)(k, m));
}

std::vector<BigInt> TriangleTable::column(int m) const {
    std::vector<BigInt> out;
    for (int k = 0; k <= max_degree_; ++k) out.push_back((*this)(k, m));
    return out;
}

BigInt TriangleTable::column_sum(int m) const {
    BigInt s = 0;
    for (int k = 0; k <= max_degree_; ++k) s += (*this)(k, m);
    return s;
}

BigInt TriangleTable::alternating_column_sum(int m) const {
    BigInt s = 0;
    for (int k = 0; k <= max_degree_; ++k) s += (k % 2 ? -1 : 1) * (*this)(k, m);
    return s;
}

TriangleTable mul_table(const std::vector<BigInt>& g, int max_degree) {
    TriangleTable t(max_degree);
    t(0, 0) = 1;
    for (int i = 1; i <= max_degree && i <= static_cast<int>(g.size()); ++i) {
        const BigInt& gi = g[static_cast<std::size_t>(i - 1)];
        if (gi == 0) continue;
        // multiply by (1 - s t^i)^{-g_i} = sum_j C(g_i+j-1, j) s^j t^{ij}
        TriangleTable next(max_degree);
        for (int j = 0; j * i <= max_degree; ++j) {
            BigInt c = multichoose(gi, static_cast<unsigned>(j));
            if (c == 0) continue;
            for (int k = 0; k + j <= max_degree; ++k)
                for (int m = 0; m + j * i <= max_degree; ++m)
                    if (t(k, m) != 0) next(k + j, m + j * i) += c * t(k, m);
        }
        t = std::move(next);
    }
    return t;
}

void WeightedAlphabet::validate() const {
    for (std::size_t i = 0; i < counts.size(); ++i)
        if (counts[i] < 0)
            throw Error(Errc::InvalidArgument, "alphabet has v_" + std::to_string(i + 1) + " = " + counts[i].str() + " < 0");
}

std::string WeightedAlphabet::str() const { return "(" + join(counts) + ")"; }

std::vector<BigInt> witt_counts(const WeightedAlphabet& alphabet, int max_degree) {
    alphabet.validate();
    // inner(n) = sum_{lambda |- n} (l(lambda)-1)!/lambda! v^lambda
    std::vector<Rational> inner(static_cast<std::size_t>(max_degree) + 1, Rational(0));
    for (int n = 1; n <= max_degree; ++n) {
        Rational acc = 0;
        for_each_partition(n, [&](const Partition& lambda) {
            BigInt vpow = 1;
            BigInt lambda_fact = 1;
            for (std::size_t i = 0; i < lambda.multiplicities.size(); ++i) {
                int k = lambda.multiplicities[i];
                if (k == 0) continue;
                vpow *= pow(alphabet.v(static_cast<int>(i + 1)), static_cast<unsigned>(k));
                lambda_fact *= factorial(static_cast<unsigned>(k));
            }
            if (vpow == 0) return;
            acc += Rational(factorial(static_cast<unsigned>(lambda.length() - 1)) * vpow, lambda_fact);
        });
        inner[static_cast<std::size_t>(n)] = acc;
    }
    std::vector<BigInt> g;
    for (int n = 1; n <= max_degree; ++n) {
        Rational acc = 0;
        for (long d : divisors(n)) {
            int mu = moebius(d);
            if (mu) acc += Rational(mu, d) * inner[static_cast<std::size_t>(n / d)];
        }
        g.push_back(to_integer(acc, "Witt count g_" + std::to_string(n)));
    }
    return g;
}

std::vector<BigInt> word_counts(const WeightedAlphabet& alphabet, int max_degree) {
    std::vector<BigInt> h(static_cast<std::size_t>(max_degree) + 1, 0);
    h[0] = 1;
    for (int m = 1; m <= max_degree; ++m)
        for (int a = 1; a <= m; ++a) h[m] += alphabet.v(a) * h[m - a];
    return h;
}

PalTable pal_table(const WeightedAlphabet& alphabet, int max_degree) {
    alphabet.validate();
    PalTable out{TriangleTable(max_degree), {}, {}, {}, {}, word_counts(alphabet, max_degree)};
    auto& pal = out.pal;
    pal(0, 0) = 1;
    for (int m = 1; m <= max_degree; ++m) pal(1, m) = alphabet.v(m);
    for (int k = 2; k <= max_degree; ++k)
        for (int m = 0; m <= max_degree; ++m)
            for (int a = 1; 2 * a <= m; ++a) {
                BigInt va = alphabet.v(a);
                if (va != 0) pal(k, m) += va * pal(k - 2, m - 2 * a);
            }
    for (int m = 0; m <= max_degree; ++m) {
        BigInt even = 0, odd = 0;
        for (int k = 0; k <= max_degree; ++k) (k % 2 ? odd : even) += pal(k, m);
        out.even.push_back(even);
        out.odd.push_back(odd);
        out.total.push_back(even + odd);
        out.nonpal.push_back(out.words[m] - even - odd);
        if (out.nonpal.back() % 2 != 0)
            throw Error(Errc::NonIntegral, "odd non-palindrome count at weight " + std::to_string(m) + " (internal)");
    }
    return out;
}

int WeightedComposition::weight() const {
    int s = 0;
    for (int a : parts) s += a;
    return s;
}

WeightedComposition WeightedComposition::reversed() const { return {std::vector<int>(parts.rbegin(), parts.rend())}; }

bool WeightedComposition::is_palindrome() const { return std::equal(parts.begin(), parts.end(), parts.rbegin()); }

long WeightedComposition::inv() const {
    long sum = 0, total = 0;
    for (int a : parts) {
        sum += total * a;
        total += a;
    }
    return sum;
}

std::string WeightedComposition::str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "," : "") + std::to_string(parts[i]);
    return out + ")";
}

CompositionEntry composition_entry(const WeightedAlphabet& alphabet, const WeightedComposition& alpha) {
    CompositionEntry e{alpha, 0, 0, alpha.inv()};
    BigInt words = 1;
    for (int a : alpha.parts) words *= alphabet.v(a);
    if (alpha.is_palindrome()) {
        e.pal = 1;
        for (int i = 0; i < (alpha.length() + 1) / 2; ++i) e.pal *= alphabet.v(alpha.parts[static_cast<std::size_t>(i)]);
    }
    e.nopal = words - e.pal;
    return e;
}

WeightedCompositions::WeightedCompositions(WeightedAlphabet alphabet, int m, std::size_t cap)
    : alphabet_(std::move(alphabet)), m_(m), cap_(cap) {
    if (m < 0) throw Error(Errc::InvalidArgument, "negative weight");
    alphabet_.validate();
    for (int a = 1; a <= std::min(m, alphabet_.max_weight()); ++a)
        if (alphabet_.v(a) > 0) allowed_.push_back(a);
    reachable_.assign(static_cast<std::size_t>(m) + 1, 0);
    reachable_[0] = 1;
    for (int r = 1; r <= m; ++r)
        for (int a : allowed_)
            if (a <= r && reachable_[static_cast<std::size_t>(r - a)]) {
                reachable_[static_cast<std::size_t>(r)] = 1;
                break;
            }
}

WeightedCompositions::iterator::iterator(const WeightedCompositions* owner) : owner_(owner), done_(false) {
    if (!owner_->reachable_[static_cast<std::size_t>(owner_->m_)]) {
        done_ = true;
        return;
    }
    complete(0);
    refresh();
}

void WeightedCompositions::iterator::complete(int sum) {
    const int m = owner_->m_;
    while (sum < m) {
        for (int a : owner_->allowed_) {
            if (a <= m - sum && owner_->reachable_[static_cast<std::size_t>(m - sum - a)]) {
                parts_.push_back(a);
                sum += a;
                break;
            }
        }
    }
}

void WeightedCompositions::iterator::refresh() {
    if (++produced_ > owner_->cap_)
        throw Error(Errc::TooLarge, "more than " + std::to_string(owner_->cap_) + " compositions of " +
                                        std::to_string(owner_->m_));
    entry_ = composition_entry(owner_->alphabet_, WeightedComposition{parts_});
}

WeightedCompositions::iterator& WeightedCompositions::iterator::operator++() {
    const int m = owner_->m_;
    int sum = 0;
    for (int a : parts_) sum += a;
    while (!parts_.empty()) {
        int last = parts_.back();
        parts_.pop_back();
        sum -= last;
        for (int a : owner_->allowed_) {
            if (a <= last || a > m - sum || !owner_->reachable_[static_cast<std::size_t>(m - sum - a)]) continue;
            parts_.push_back(a);
            complete(sum + a);
            refresh();
            return *this;
        }
    }
    done_ = true;
    return *this;
}

std::vector<CompositionEntry> WeightedCompositions::collect() const {
    std::vector<CompositionEntry> out;
    for (const auto& e : *this) out.push_back(e);
    return out;
}

} // namespace adams::combinatorics
