#include "adams/hopf.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <tuple>

#include "adams/errors.hpp"
#include "adams/numeric.hpp"

namespace adams::hopf {

namespace {

Rational ring_power(const Rational& q, long e) { return pow(q, e); }
LaurentPoly ring_power(const LaurentPoly& q, long e) { return q.pow(e); }

template <class K, class R>
void prune(std::map<K, R>& m) {
    for (auto it = m.begin(); it != m.end();)
        it = RingTraits<R>::is_zero(it->second) ? m.erase(it) : std::next(it);
}

template <class R>
std::map<std::size_t, R> as_map(const std::vector<SparseEntry<R>>& v) {
    std::map<std::size_t, R> out;
    for (const auto& e : v) out[e.index] += e.coeff;
    prune(out);
    return out;
}

template <class R>
std::vector<SparseEntry<R>> from_map(std::map<std::size_t, R> m) {
    prune(m);
    std::vector<SparseEntry<R>> out;
    for (auto& [k, c] : m) out.push_back({k, std::move(c)});
    return out;
}

[[noreturn]] void violated(const std::string& what) { throw Error(Errc::AxiomViolated, what); }

} // namespace

template <class R>
HopfInstance<R>::HopfInstance(std::string name, std::vector<std::vector<std::string>> basis, R braid_q)
    : name_(std::move(name)), basis_(std::move(basis)), q_(std::move(braid_q)) {
    if (basis_.empty()) throw Error(Errc::InvalidArgument, "instance needs degree 0");
    const int M = max_degree();
    products_.resize(static_cast<std::size_t>((M + 1) * (M + 1)));
    for (int p = 0; p <= M; ++p)
        for (int r = 0; p + r <= M; ++r) products_[product_slot(p, r)].resize(dim(p) * dim(r));
    coproducts_.resize(static_cast<std::size_t>(M) + 1);
    for (int m = 0; m <= M; ++m) coproducts_[static_cast<std::size_t>(m)].resize(dim(m));
}

template <class R>
std::size_t HopfInstance<R>::product_slot(int p, int r) const {
    const int M = max_degree();
    if (p < 0 || r < 0 || p + r > M)
        throw Error(Errc::DegreeOutOfRange, "product of degrees " + std::to_string(p) + " and " + std::to_string(r) +
                                                " exceeds " + std::to_string(M));
    return static_cast<std::size_t>(p * (M + 1) + r);
}

template <class R>
std::vector<BigInt> HopfInstance<R>::dimensions() const {
    std::vector<BigInt> out;
    for (const auto& b : basis_) out.emplace_back(b.size());
    return out;
}

template <class R>
const std::vector<SparseEntry<R>>& HopfInstance<R>::product(int p, std::size_t i, int r, std::size_t j) const {
    return products_[product_slot(p, r)].at(i * dim(r) + j);
}

template <class R>
const std::vector<CoproductTerm<R>>& HopfInstance<R>::coproduct(int m, std::size_t k) const {
    if (m < 0 || m > max_degree()) throw Error(Errc::DegreeOutOfRange, "coproduct in degree " + std::to_string(m));
    return coproducts_[static_cast<std::size_t>(m)].at(k);
}

template <class R>
void HopfInstance<R>::set_product(int p, std::size_t i, int r, std::size_t j, std::vector<SparseEntry<R>> value) {
    for (const auto& e : value)
        if (e.index >= dim(p + r)) throw Error(Errc::DimensionMismatch, "product index out of range");
    products_[product_slot(p, r)].at(i * dim(r) + j) = from_map(as_map(value));
}

template <class R>
void HopfInstance<R>::set_coproduct(int m, std::size_t k, std::vector<CoproductTerm<R>> value) {
    if (m < 0 || m > max_degree()) throw Error(Errc::DegreeOutOfRange, "coproduct in degree " + std::to_string(m));
    std::map<std::tuple<int, std::size_t, std::size_t>, R> merged;
    for (auto& t : value) {
        if (t.p < 0 || t.p > m || t.i >= dim(t.p) || t.j >= dim(m - t.p))
            throw Error(Errc::DimensionMismatch, "coproduct term out of range");
        merged[{t.p, t.i, t.j}] += t.coeff;
    }
    prune(merged);
    std::vector<CoproductTerm<R>> out;
    for (auto& [key, c] : merged) out.push_back({std::get<0>(key), std::get<1>(key), std::get<2>(key), c});
    coproducts_[static_cast<std::size_t>(m)].at(k) = std::move(out);
}

template <class R>
bool HopfInstance<R>::commutative() const {
    const int M = max_degree();
    for (int p = 0; p <= M; ++p)
        for (int r = p; p + r <= M; ++r)
            for (std::size_t i = 0; i < dim(p); ++i)
                for (std::size_t j = 0; j < dim(r); ++j)
                    if (as_map(product(p, i, r, j)) != as_map(product(r, j, p, i))) return false;
    return true;
}

template <class R>
bool HopfInstance<R>::cocommutative() const {
    for (int m = 0; m <= max_degree(); ++m)
        for (std::size_t k = 0; k < dim(m); ++k) {
            std::map<std::tuple<int, std::size_t, std::size_t>, R> a, b;
            for (const auto& t : coproduct(m, k)) {
                a[{t.p, t.i, t.j}] += t.coeff;
                b[{m - t.p, t.j, t.i}] += t.coeff;
            }
            prune(a);
            prune(b);
            if (a != b) return false;
        }
    return true;
}

template <class R>
void HopfInstance<R>::verify_axioms() const {
    const int M = max_degree();
    const std::string where = "instance '" + name_ + "': ";
    if (basis_[0].size() != 1 || basis_[0][0] != "1") violated(where + "degree 0 must be spanned by the unit '1'");

    for (int p = 0; p <= M; ++p)
        for (std::size_t i = 0; i < dim(p); ++i) {
            std::map<std::size_t, R> expect{{i, R(1)}};
            if (as_map(product(0, 0, p, i)) != expect || as_map(product(p, i, 0, 0)) != expect)
                violated(where + "unit axiom fails at " + labels(p)[i]);
        }

    for (int m = 0; m <= M; ++m)
        for (std::size_t k = 0; k < dim(m); ++k) {
            std::map<std::size_t, R> left, right;
            for (const auto& t : coproduct(m, k)) {
                if (t.p == 0) left[t.j] += t.coeff;
                if (t.p == m) right[t.i] += t.coeff;
            }
            prune(left);
            prune(right);
            std::map<std::size_t, R> expect{{k, R(1)}};
            if (left != expect || right != expect) violated(where + "counit axiom fails at " + labels(m)[k]);
        }

    for (int p = 1; p <= M; ++p)
        for (int r = 1; p + r <= M; ++r)
            for (int s = 1; p + r + s <= M; ++s)
                for (std::size_t i = 0; i < dim(p); ++i)
                    for (std::size_t j = 0; j < dim(r); ++j)
                        for (std::size_t k = 0; k < dim(s); ++k) {
                            std::map<std::size_t, R> lhs, rhs;
                            for (const auto& e : product(p, i, r, j))
                                for (const auto& f : product(p + r, e.index, s, k)) lhs[f.index] += e.coeff * f.coeff;
                            for (const auto& e : product(r, j, s, k))
                                for (const auto& f : product(p, i, r + s, e.index)) rhs[f.index] += e.coeff * f.coeff;
                            prune(lhs);
                            prune(rhs);
                            if (lhs != rhs)
                                violated(where + "associativity fails at (" + labels(p)[i] + ", " + labels(r)[j] + ", " +
                                         labels(s)[k] + ")");
                        }

    using Key3 = std::tuple<int, std::size_t, int, std::size_t, std::size_t>;
    for (int m = 0; m <= M; ++m)
        for (std::size_t k = 0; k < dim(m); ++k) {
            std::map<Key3, R> lhs, rhs;
            for (const auto& t : coproduct(m, k)) {
                for (const auto& u : coproduct(t.p, t.i)) lhs[{u.p, u.i, t.p - u.p, u.j, t.j}] += t.coeff * u.coeff;
                for (const auto& u : coproduct(m - t.p, t.j)) rhs[{t.p, t.i, u.p, u.i, u.j}] += t.coeff * u.coeff;
            }
            prune(lhs);
            prune(rhs);
            if (lhs != rhs) violated(where + "coassociativity fails at " + labels(m)[k]);
        }

    using Key2 = std::tuple<int, std::size_t, std::size_t>;
    for (int p = 1; p <= M; ++p)
        for (int r = 1; p + r <= M; ++r)
            for (std::size_t i = 0; i < dim(p); ++i)
                for (std::size_t j = 0; j < dim(r); ++j) {
                    std::map<Key2, R> lhs, rhs;
                    for (const auto& e : product(p, i, r, j))
                        for (const auto& t : coproduct(p + r, e.index)) lhs[{t.p, t.i, t.j}] += e.coeff * t.coeff;
                    for (const auto& a : coproduct(p, i))
                        for (const auto& b : coproduct(r, j)) {
                            // (a1 (x) a2)(b1 (x) b2) = q^{|a2||b1|} a1 b1 (x) a2 b2
                            R c = a.coeff * b.coeff * ring_power(q_, static_cast<long>(p - a.p) * b.p);
                            for (const auto& x : product(a.p, a.i, b.p, b.i))
                                for (const auto& y : product(p - a.p, a.j, r - b.p, b.j))
                                    rhs[{a.p + b.p, x.index, y.index}] += c * x.coeff * y.coeff;
                        }
                    prune(lhs);
                    prune(rhs);
                    if (lhs != rhs)
                        violated(where + "product/coproduct compatibility fails at (" + labels(p)[i] + ", " + labels(r)[j] + ")");
                }
}

namespace {

void check_dims(const std::vector<BigInt>& dims, const BuildOptions& options, const std::string& what) {
    for (std::size_t m = 0; m < dims.size(); ++m)
        if (!options.force && dims[m] > options.dimension_cap)
            throw Error(Errc::TooLarge, what + ": degree " + std::to_string(m) + " has dimension " + dims[m].str() +
                                            " > " + std::to_string(options.dimension_cap) + " (use force)");
}

std::string letter_label(int weight, long index) {
    std::string out = std::to_string(weight);
    if (index < 26) return out + static_cast<char>('a' + index);
    return out + "_" + std::to_string(index);
}

std::string join(const std::vector<int>& parts, const std::string& head) {
    std::string out = head + "(";
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "," : "") + std::to_string(parts[i]);
    return out + ")";
}

} // namespace

template <class R>
HopfInstance<R> build_shuffle(const combinatorics::WeightedAlphabet& v, const R& q, int M, const BuildOptions& options) {
    if (M < 0) throw Error(Errc::InvalidArgument, "negative max degree");
    v.validate();
    check_dims(combinatorics::word_counts(v, M), options, "shuffle instance");

    std::vector<int> weight;
    std::vector<std::string> letter;
    for (int w = 1; w <= std::min(M, v.max_weight()); ++w)
        for (long i = 0; i < v.v(w); ++i) {
            weight.push_back(w);
            letter.push_back(letter_label(w, i));
        }

    using Word = std::vector<int>;
    std::vector<std::vector<Word>> words(static_cast<std::size_t>(M) + 1);
    words[0].push_back({});
    for (int m = 1; m <= M; ++m)
        for (std::size_t l = 0; l < weight.size(); ++l)
            if (weight[l] <= m)
                for (const auto& tail : words[static_cast<std::size_t>(m - weight[l])]) {
                    Word w{static_cast<int>(l)};
                    w.insert(w.end(), tail.begin(), tail.end());
                    words[static_cast<std::size_t>(m)].push_back(std::move(w));
                }
    std::vector<std::map<Word, std::size_t>> index(static_cast<std::size_t>(M) + 1);
    std::vector<std::vector<std::string>> basis(static_cast<std::size_t>(M) + 1);
    for (int m = 0; m <= M; ++m) {
        auto& ws = words[static_cast<std::size_t>(m)];
        std::sort(ws.begin(), ws.end());
        for (std::size_t k = 0; k < ws.size(); ++k) {
            index[static_cast<std::size_t>(m)][ws[k]] = k;
            std::string label;
            for (std::size_t c = 0; c < ws[k].size(); ++c) label += (c ? "." : "") + letter[static_cast<std::size_t>(ws[k][c])];
            basis[static_cast<std::size_t>(m)].push_back(ws[k].empty() ? "1" : label);
        }
    }

    std::string name = "shuffle v=" + v.str();
    if (!(q == R(1))) name += " q=" + RingTraits<R>::str(q);
    HopfInstance<R> inst(name, basis, q);

    for (int p = 0; p <= M; ++p)
        for (int r = 0; p + r <= M; ++r) {
            const auto& target = index[static_cast<std::size_t>(p + r)];
            for (std::size_t i = 0; i < words[static_cast<std::size_t>(p)].size(); ++i)
                for (std::size_t j = 0; j < words[static_cast<std::size_t>(r)].size(); ++j) {
                    const Word& u = words[static_cast<std::size_t>(p)][i];
                    const Word& w = words[static_cast<std::size_t>(r)][j];
                    std::map<std::size_t, R> acc;
                    Word cur;
                    // Placing a letter of w ahead of the remaining letters of u contributes
                    // its weight times their total weight to inv_x.
                    std::function<void(std::size_t, std::size_t, int, long)> rec = [&](std::size_t a, std::size_t b, int rest_u,
                                                                                        long inv) {
                        if (a == u.size() && b == w.size()) {
                            acc[target.at(cur)] += ring_power(q, inv);
                            return;
                        }
                        if (a < u.size()) {
                            cur.push_back(u[a]);
                            rec(a + 1, b, rest_u - weight[static_cast<std::size_t>(u[a])], inv);
                            cur.pop_back();
                        }
                        if (b < w.size()) {
                            cur.push_back(w[b]);
                            rec(a, b + 1, rest_u, inv + static_cast<long>(weight[static_cast<std::size_t>(w[b])]) * rest_u);
                            cur.pop_back();
                        }
                    };
                    rec(0, 0, p, 0);
                    inst.set_product(p, i, r, j, from_map(std::move(acc)));
                }
        }

    for (int m = 0; m <= M; ++m)
        for (std::size_t k = 0; k < words[static_cast<std::size_t>(m)].size(); ++k) {
            const Word& w = words[static_cast<std::size_t>(m)][k];
            std::vector<CoproductTerm<R>> terms;
            int pw = 0;
            for (std::size_t cut = 0; cut <= w.size(); ++cut) {
                if (cut > 0) pw += weight[static_cast<std::size_t>(w[cut - 1])];
                Word head(w.begin(), w.begin() + static_cast<long>(cut)), tail(w.begin() + static_cast<long>(cut), w.end());
                terms.push_back({pw, index[static_cast<std::size_t>(pw)].at(head), index[static_cast<std::size_t>(m - pw)].at(tail), R(1)});
            }
            inst.set_coproduct(m, k, std::move(terms));
        }

    if (options.verify) inst.verify_axioms();
    return inst;
}

RationalInstance build_sym_powersum(int M, const BuildOptions& options) {
    if (M < 0) throw Error(Errc::InvalidArgument, "negative max degree");
    using Part = std::vector<int>; // weakly decreasing
    std::vector<std::vector<Part>> parts(static_cast<std::size_t>(M) + 1);
    std::function<void(int, int, Part&, std::vector<Part>&)> gen = [&](int rest, int max_part, Part& cur, std::vector<Part>& out) {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (int k = std::min(rest, max_part); k >= 1; --k) {
            cur.push_back(k);
            gen(rest - k, k, cur, out);
            cur.pop_back();
        }
    };
    std::vector<BigInt> dims;
    for (int m = 0; m <= M; ++m) {
        Part cur;
        gen(m, m, cur, parts[static_cast<std::size_t>(m)]);
        dims.emplace_back(parts[static_cast<std::size_t>(m)].size());
    }
    check_dims(dims, options, "sym instance");

    std::vector<std::map<Part, std::size_t>> index(static_cast<std::size_t>(M) + 1);
    std::vector<std::vector<std::string>> basis(static_cast<std::size_t>(M) + 1);
    for (int m = 0; m <= M; ++m)
        for (std::size_t k = 0; k < parts[static_cast<std::size_t>(m)].size(); ++k) {
            const Part& lam = parts[static_cast<std::size_t>(m)][k];
            index[static_cast<std::size_t>(m)][lam] = k;
            basis[static_cast<std::size_t>(m)].push_back(lam.empty() ? "1" : join(lam, "p"));
        }
    RationalInstance inst("sym powersum", basis, Rational(1));

    for (int p = 0; p <= M; ++p)
        for (int r = 0; p + r <= M; ++r)
            for (std::size_t i = 0; i < parts[static_cast<std::size_t>(p)].size(); ++i)
                for (std::size_t j = 0; j < parts[static_cast<std::size_t>(r)].size(); ++j) {
                    Part lam = parts[static_cast<std::size_t>(p)][i];
                    const Part& mu = parts[static_cast<std::size_t>(r)][j];
                    lam.insert(lam.end(), mu.begin(), mu.end());
                    std::sort(lam.rbegin(), lam.rend());
                    inst.set_product(p, i, r, j, {{index[static_cast<std::size_t>(p + r)].at(lam), Rational(1)}});
                }

    for (int m = 0; m <= M; ++m)
        for (std::size_t k = 0; k < parts[static_cast<std::size_t>(m)].size(); ++k) {
            std::map<int, int> mult;
            for (int x : parts[static_cast<std::size_t>(m)][k]) ++mult[x];
            std::vector<std::pair<int, int>> entries(mult.rbegin(), mult.rend());
            std::vector<CoproductTerm<Rational>> terms;
            std::vector<int> take(entries.size(), 0);
            std::function<void(std::size_t)> rec = [&](std::size_t e) {
                if (e == entries.size()) {
                    Part left, right;
                    BigInt c = 1;
                    for (std::size_t t = 0; t < entries.size(); ++t) {
                        left.insert(left.end(), static_cast<std::size_t>(take[t]), entries[t].first);
                        right.insert(right.end(), static_cast<std::size_t>(entries[t].second - take[t]), entries[t].first);
                        c *= binomial(entries[t].second, take[t]);
                    }
                    int lw = 0;
                    for (int x : left) lw += x;
                    terms.push_back({lw, index[static_cast<std::size_t>(lw)].at(left), index[static_cast<std::size_t>(m - lw)].at(right),
                                     Rational(c)});
                    return;
                }
                for (int s = 0; s <= entries[e].second; ++s) {
                    take[e] = s;
                    rec(e + 1);
                }
            };
            rec(0);
            inst.set_coproduct(m, k, std::move(terms));
        }

    if (options.verify) inst.verify_axioms();
    return inst;
}

RationalInstance build_qsym_monomial(int M, const BuildOptions& options) {
    if (M < 0) throw Error(Errc::InvalidArgument, "negative max degree");
    using Comp = std::vector<int>;
    std::vector<std::vector<Comp>> comps(static_cast<std::size_t>(M) + 1);
    comps[0].push_back({});
    for (int m = 1; m <= M; ++m)
        for (int first = 1; first <= m; ++first)
            for (const auto& tail : comps[static_cast<std::size_t>(m - first)]) {
                Comp c{first};
                c.insert(c.end(), tail.begin(), tail.end());
                comps[static_cast<std::size_t>(m)].push_back(std::move(c));
            }
    std::vector<BigInt> dims;
    for (const auto& c : comps) dims.emplace_back(c.size());
    check_dims(dims, options, "qsym instance");

    std::vector<std::map<Comp, std::size_t>> index(static_cast<std::size_t>(M) + 1);
    std::vector<std::vector<std::string>> basis(static_cast<std::size_t>(M) + 1);
    for (int m = 0; m <= M; ++m) {
        auto& cs = comps[static_cast<std::size_t>(m)];
        std::sort(cs.begin(), cs.end());
        for (std::size_t k = 0; k < cs.size(); ++k) {
            index[static_cast<std::size_t>(m)][cs[k]] = k;
            basis[static_cast<std::size_t>(m)].push_back(cs[k].empty() ? "1" : join(cs[k], "M"));
        }
    }
    RationalInstance inst("qsym monomial", basis, Rational(1));

    // Quasi-shuffles: each step takes the next part of a, of b, or their sum.
    std::function<void(const Comp&, std::size_t, const Comp&, std::size_t, Comp&, std::map<Comp, int>&)> qsh =
        [&](const Comp& a, std::size_t i, const Comp& b, std::size_t j, Comp& cur, std::map<Comp, int>& out) {
            if (i == a.size() && j == b.size()) {
                ++out[cur];
                return;
            }
            if (i < a.size()) {
                cur.push_back(a[i]);
                qsh(a, i + 1, b, j, cur, out);
                cur.pop_back();
            }
            if (j < b.size()) {
                cur.push_back(b[j]);
                qsh(a, i, b, j + 1, cur, out);
                cur.pop_back();
            }
            if (i < a.size() && j < b.size()) {
                cur.push_back(a[i] + b[j]);
                qsh(a, i + 1, b, j + 1, cur, out);
                cur.pop_back();
            }
        };

    for (int p = 0; p <= M; ++p)
        for (int r = 0; p + r <= M; ++r)
            for (std::size_t i = 0; i < comps[static_cast<std::size_t>(p)].size(); ++i)
                for (std::size_t j = 0; j < comps[static_cast<std::size_t>(r)].size(); ++j) {
                    std::map<Comp, int> out;
                    Comp cur;
                    qsh(comps[static_cast<std::size_t>(p)][i], 0, comps[static_cast<std::size_t>(r)][j], 0, cur, out);
                    std::vector<SparseEntry<Rational>> entries;
                    for (const auto& [c, n] : out) entries.push_back({index[static_cast<std::size_t>(p + r)].at(c), Rational(n)});
                    inst.set_product(p, i, r, j, std::move(entries));
                }

    for (int m = 0; m <= M; ++m)
        for (std::size_t k = 0; k < comps[static_cast<std::size_t>(m)].size(); ++k) {
            const Comp& c = comps[static_cast<std::size_t>(m)][k];
            std::vector<CoproductTerm<Rational>> terms;
            int pw = 0;
            for (std::size_t cut = 0; cut <= c.size(); ++cut) {
                if (cut > 0) pw += c[cut - 1];
                Comp head(c.begin(), c.begin() + static_cast<long>(cut)), tail(c.begin() + static_cast<long>(cut), c.end());
                terms.push_back({pw, index[static_cast<std::size_t>(pw)].at(head), index[static_cast<std::size_t>(m - pw)].at(tail),
                                 Rational(1)});
            }
            inst.set_coproduct(m, k, std::move(terms));
        }

    if (options.verify) inst.verify_axioms();
    return inst;
}

template <class R>
GradedEndomorphism<R> identity_map(const HopfInstance<R>& inst, int m) {
    if (m < 0 || m > inst.max_degree())
        throw Error(Errc::DegreeOutOfRange, "degree " + std::to_string(m) + " outside instance of degree " +
                                                std::to_string(inst.max_degree()));
    GradedEndomorphism<R> out;
    for (int d = 0; d <= m; ++d) out.blocks.push_back(Matrix<R>::identity(inst.dim(d)));
    return out;
}

template <class R>
GradedEndomorphism<R> unit_counit(const HopfInstance<R>& inst, int m) {
    GradedEndomorphism<R> out = identity_map(inst, m);
    for (int d = 1; d <= m; ++d) out[d] = Matrix<R>(inst.dim(d), inst.dim(d));
    return out;
}

template <class R>
GradedEndomorphism<R> add(const GradedEndomorphism<R>& a, const GradedEndomorphism<R>& b) {
    if (a.blocks.size() != b.blocks.size()) throw Error(Errc::DimensionMismatch, "endomorphisms of different degree ranges");
    GradedEndomorphism<R> out = a;
    for (std::size_t d = 0; d < a.blocks.size(); ++d) out.blocks[d] += b.blocks[d];
    return out;
}

template <class R>
GradedEndomorphism<R> scale(const GradedEndomorphism<R>& a, const R& c) {
    GradedEndomorphism<R> out;
    for (const auto& blk : a.blocks) out.blocks.push_back(blk.scaled(c));
    return out;
}

template <class R>
GradedEndomorphism<R> compose(const GradedEndomorphism<R>& a, const GradedEndomorphism<R>& b) {
    if (a.blocks.size() != b.blocks.size()) throw Error(Errc::DimensionMismatch, "endomorphisms of different degree ranges");
    GradedEndomorphism<R> out;
    for (std::size_t d = 0; d < a.blocks.size(); ++d) out.blocks.push_back(a.blocks[d] * b.blocks[d]);
    return out;
}

template <class R>
GradedEndomorphism<R> convolution(const GradedEndomorphism<R>& a, const GradedEndomorphism<R>& b, const HopfInstance<R>& inst) {
    const int M = std::min(a.max_degree(), b.max_degree());
    if (M > inst.max_degree()) throw Error(Errc::DimensionMismatch, "endomorphism exceeds the instance's degree range");
    for (int d = 0; d <= M; ++d)
        if (a[d].rows() != inst.dim(d) || b[d].rows() != inst.dim(d) || !a[d].is_square() || !b[d].is_square())
            throw Error(Errc::DimensionMismatch, "endomorphism block " + std::to_string(d) + " does not match the instance");
    using Traits = RingTraits<R>;
    // Nonzero entries of each column, per degree.
    auto columns = [M](const GradedEndomorphism<R>& x) {
        std::vector<std::vector<std::vector<std::pair<std::size_t, R>>>> cols(static_cast<std::size_t>(M) + 1);
        for (int d = 0; d <= M; ++d) {
            const auto& blk = x[d];
            auto& cd = cols[static_cast<std::size_t>(d)];
            cd.resize(blk.cols());
            for (std::size_t j = 0; j < blk.cols(); ++j)
                for (std::size_t i = 0; i < blk.rows(); ++i)
                    if (!Traits::is_zero(blk(i, j))) cd[j].emplace_back(i, blk(i, j));
        }
        return cols;
    };
    auto ca = columns(a), cb = columns(b);
    GradedEndomorphism<R> out;
    for (int m = 0; m <= M; ++m) {
        Matrix<R> blk(inst.dim(m), inst.dim(m));
        for (std::size_t k = 0; k < inst.dim(m); ++k)
            for (const auto& t : inst.coproduct(m, k))
                for (const auto& [x, ax] : ca[static_cast<std::size_t>(t.p)][t.i])
                    for (const auto& [y, by] : cb[static_cast<std::size_t>(m - t.p)][t.j]) {
                        R c = t.coeff * ax * by;
                        for (const auto& e : inst.product(t.p, x, m - t.p, y)) blk(e.index, k) += c * e.coeff;
                    }
        out.blocks.push_back(std::move(blk));
    }
    return out;
}

template <class R>
std::vector<GradedEndomorphism<R>> augmentation_powers(const HopfInstance<R>& inst, int m) {
    auto eta = unit_counit(inst, m);
    auto P = add(identity_map(inst, m), scale(eta, R(-1)));
    std::vector<GradedEndomorphism<R>> out{eta};
    for (int k = 1; k <= m; ++k) out.push_back(convolution(P, out.back(), inst));
    return out;
}

template <class R>
GradedEndomorphism<R> adams_endomorphism(const std::vector<GradedEndomorphism<R>>& powers, const Rational& n, int m) {
    if (m < 0 || static_cast<std::size_t>(m) >= powers.size() || powers.front().max_degree() < m)
        throw Error(Errc::DegreeOutOfRange, "not enough convolution powers for degree " + std::to_string(m));
    GradedEndomorphism<R> out = scale(powers[0], R(1));
    for (int k = 1; k <= m; ++k) {
        Rational c = binomial(n, static_cast<unsigned>(k));
        if (c == 0) continue;
        out = add(out, scale(powers[static_cast<std::size_t>(k)], RingTraits<R>::from_rational(c)));
    }
    if (out.max_degree() > m) out.blocks.resize(static_cast<std::size_t>(m) + 1);
    return out;
}

template <class R>
GradedEndomorphism<R> adams_endomorphism(const HopfInstance<R>& inst, const Rational& n, int m) {
    return adams_endomorphism(augmentation_powers(inst, m), n, m);
}

template <class R>
Matrix<R> adams_matrix(const HopfInstance<R>& inst, const Rational& n, int m) {
    return adams_endomorphism(inst, n, m)[m];
}

template <class R>
GradedEndomorphism<R> convolution_power(const GradedEndomorphism<R>& a, unsigned k, const HopfInstance<R>& inst) {
    GradedEndomorphism<R> out = unit_counit(inst, a.max_degree());
    for (unsigned i = 0; i < k; ++i) out = convolution(out, a, inst);
    return out;
}

template <class R>
GradedEndomorphism<R> antipode_endomorphism(const HopfInstance<R>& inst, int m) {
    return adams_endomorphism(augmentation_powers(inst, m), Rational(-1), m);
}

template <class R>
Matrix<R> antipode_matrix(const HopfInstance<R>& inst, int m) {
    return antipode_endomorphism(inst, m)[m];
}

std::vector<GradedEndomorphism<Rational>> eulerian_endomorphisms(const RationalInstance& inst, int k_max, int m) {
    if (k_max < 0) throw Error(Errc::InvalidArgument, "negative k_max");
    if (!inst.commutative() && !inst.cocommutative())
        throw Error(Errc::NotApplicable, "instance '" + inst.name() + "' is neither commutative nor cocommutative");
    auto powers = augmentation_powers(inst, m);
    // log(id) = log(1 + P) = sum_{k >= 1} (-1)^{k+1} P^{*k} / k
    GradedEndomorphism<Rational> e1 = scale(powers[0], Rational(0));
    for (int k = 1; k <= m; ++k)
        e1 = add(e1, scale(powers[static_cast<std::size_t>(k)], Rational(k % 2 ? 1 : -1, k)));
    std::vector<GradedEndomorphism<Rational>> out{powers[0]};
    GradedEndomorphism<Rational> power = powers[0];
    for (int k = 1; k <= k_max; ++k) {
        power = convolution(power, e1, inst);
        out.push_back(scale(power, Rational(1) / Rational(factorial(k))));
    }
    return out;
}

std::vector<Matrix<Rational>> eulerian_idempotents(const RationalInstance& inst, int k_max, int m) {
    std::vector<Matrix<Rational>> out;
    for (const auto& e : eulerian_endomorphisms(inst, k_max, m)) out.push_back(e[m]);
    return out;
}

template <class R>
int nilpotency_order(const HopfInstance<R>& inst, int m) {
    Matrix<R> s = antipode_matrix(inst, m);
    Matrix<R> d = s * s - Matrix<R>::identity(s.rows());
    Matrix<R> power = d;
    const int bound = std::max(m, 1);
    for (int k = 1; k <= bound; ++k) {
        if (power.is_zero()) return k;
        power = power * d;
    }
    throw Error(Errc::NotNilpotent, "S^2 - id is not nilpotent of order <= " + std::to_string(bound) + " in degree " +
                                        std::to_string(m) + " of '" + inst.name() + "'");
}

#define ADAMS_HOPF_INSTANTIATE(R)                                                                                      \
    template class HopfInstance<R>;                                                                                    \
    template HopfInstance<R> build_shuffle(const combinatorics::WeightedAlphabet&, const R&, int, const BuildOptions&); \
    template GradedEndomorphism<R> identity_map(const HopfInstance<R>&, int);                                          \
    template GradedEndomorphism<R> unit_counit(const HopfInstance<R>&, int);                                           \
    template GradedEndomorphism<R> add(const GradedEndomorphism<R>&, const GradedEndomorphism<R>&);                    \
    template GradedEndomorphism<R> scale(const GradedEndomorphism<R>&, const R&);                                      \
    template GradedEndomorphism<R> compose(const GradedEndomorphism<R>&, const GradedEndomorphism<R>&);                \
    template GradedEndomorphism<R> convolution(const GradedEndomorphism<R>&, const GradedEndomorphism<R>&,             \
                                               const HopfInstance<R>&);                                                \
    template std::vector<GradedEndomorphism<R>> augmentation_powers(const HopfInstance<R>&, int);                      \
    template GradedEndomorphism<R> adams_endomorphism(const std::vector<GradedEndomorphism<R>>&, const Rational&, int); \
    template GradedEndomorphism<R> adams_endomorphism(const HopfInstance<R>&, const Rational&, int);                   \
    template Matrix<R> adams_matrix(const HopfInstance<R>&, const Rational&, int);                                     \
    template GradedEndomorphism<R> convolution_power(const GradedEndomorphism<R>&, unsigned, const HopfInstance<R>&);  \
    template GradedEndomorphism<R> antipode_endomorphism(const HopfInstance<R>&, int);                                 \
    template Matrix<R> antipode_matrix(const HopfInstance<R>&, int);                                                   \
    template int nilpotency_order(const HopfInstance<R>&, int);

ADAMS_HOPF_INSTANTIATE(Rational)
ADAMS_HOPF_INSTANTIATE(LaurentPoly)

} // namespace adams::hopf
