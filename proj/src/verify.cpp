#include "adams/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "adams/cofree.hpp"
#include "adams/errors.hpp"
#include "adams/euler.hpp"
#include "adams/hopf.hpp"
#include "adams/species.hpp"
#include "adams/spectra.hpp"

namespace adams::verify {

using nlohmann::json;
using combinatorics::WeightedAlphabet;

bool VerifyReport::passed() const { return failures() == 0; }

std::size_t VerifyReport::failures() const {
    return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const auto& c) { return !c.passed; }));
}

json VerifyReport::to_json() const {
    json list = json::array();
    for (const auto& c : checks) {
        json entry{{"name", c.name}, {"passed", c.passed}};
        if (!c.passed) entry["counterexample"] = c.detail;
        list.push_back(entry);
    }
    return {{"suite", suite}, {"passed", passed()}, {"total", checks.size()}, {"failures", failures()}, {"checks", list}};
}

const std::vector<std::vector<long>>& figure_mul_array() {
    static const std::vector<std::vector<long>> a = {
        {1, 1, 4, 17, 92, 572}, {0, 1, 1, 5, 21, 119}, {0, 0, 1, 1, 5, 22},
        {0, 0, 0, 1, 1, 5},     {0, 0, 0, 0, 1, 1},    {0, 0, 0, 0, 0, 1},
    };
    return a;
}

const std::vector<std::vector<long>>& figure_pal_array() {
    static const std::vector<std::vector<long>> a = {
        {1, 1, 3, 13, 71, 461}, {0, 1, 0, 1, 0, 3}, {0, 0, 1, 1, 4, 14},
        {0, 0, 0, 1, 0, 2},     {0, 0, 0, 0, 1, 1}, {0, 0, 0, 0, 0, 1},
    };
    return a;
}

namespace {

std::string show(const BigInt& x) { return x.str(); }
std::string show(const Rational& x) { return to_string(x); }
std::string show(const LaurentPoly& x) { return x.str(); }
std::string show(const cofree::CofreeSpectrum& x) { return x.str(); }
template <class R>
std::string show(const Polynomial<R>& p) { return p.str(); }
template <class R>
std::string show(const Series<R>& s) {
    std::string out;
    for (const auto& c : s.coefficients()) out += (out.empty() ? "" : ",") + RingTraits<R>::str(c);
    return out;
}
template <class T>
std::string show(const std::vector<T>& v) {
    std::string out;
    for (const auto& x : v) out += (out.empty() ? "" : ",") + show(x);
    return out;
}

class Recorder {
public:
    explicit Recorder(VerifyReport& r) : report_(r) {}

    template <class A, class B>
    void equal(const std::string& name, const A& expected, const B& actual, json context = json::object()) {
        CheckResult c{name, expected == actual, json::object()};
        if (!c.passed) {
            c.detail = std::move(context);
            c.detail["expected"] = show(expected);
            c.detail["actual"] = show(actual);
        }
        report_.checks.push_back(std::move(c));
    }

    void truth(const std::string& name, bool ok, json context = json::object()) {
        report_.checks.push_back({name, ok, ok ? json::object() : std::move(context)});
    }

    // Runs `body`; a thrown module error becomes a failed check.
    void guarded(const std::string& name, const std::function<void()>& body) {
        try {
            body();
        } catch (const Error& e) {
            report_.checks.push_back({name, false, {{"error", errc_name(e.code())}, {"message", e.what()}}});
        }
    }

private:
    VerifyReport& report_;
};

std::vector<Rational> default_ns() { return {-2, -1, 0, 1, 2, 3, Rational(1, 2)}; }

std::string label_of(const WeightedAlphabet& v) { return "shuffle(" + v.str() + ")"; }

// (-1)^l rev(w) for a dot-joined word label.
std::pair<std::string, int> signed_reversal(const std::string& label) {
    if (label == "1") return {label, 1};
    std::vector<std::string> letters;
    std::stringstream ss(label);
    for (std::string part; std::getline(ss, part, '.');) letters.push_back(part);
    std::reverse(letters.begin(), letters.end());
    std::string out;
    for (const auto& l : letters) out += (out.empty() ? "" : ".") + l;
    return {out, letters.size() % 2 ? -1 : 1};
}

void oracle_instance(Recorder& rec, const std::string& name, const hopf::RationalInstance& inst, int M,
                     const std::vector<Rational>& ns, bool shuffle) {
    rec.guarded(name + ".axioms", [&] {
        inst.verify_axioms();
        rec.truth(name + ".axioms", true);
    });
    const auto profile = spectra::profile_from_h(inst.dimensions());
    const auto powers = hopf::augmentation_powers(inst, M);
    for (const auto& n : ns) {
        const auto psi = hopf::adams_endomorphism(powers, n, M);
        for (int m = 0; m <= M; ++m)
            rec.equal(name + ".charpoly.n=" + to_string(n) + ".m=" + std::to_string(m),
                      spectra::char_poly_adams(profile, n, m).expand(), char_poly_exact(psi[m]),
                      {{"instance", name}, {"n", to_string(n)}, {"m", m}});
    }
    const auto S = hopf::antipode_endomorphism(inst, M);
    for (int m = 0; m <= M; ++m) {
        rec.equal(name + ".antipode_spectrum.m=" + std::to_string(m), spectra::char_poly_antipode(profile, m).expand(),
                  char_poly_exact(S[m]), {{"instance", name}, {"m", m}});
        if (!shuffle) continue;
        const auto& labels = inst.labels(m);
        Matrix<Rational> expected(labels.size(), labels.size());
        for (std::size_t j = 0; j < labels.size(); ++j) {
            auto [rev, sign] = signed_reversal(labels[j]);
            auto it = std::find(labels.begin(), labels.end(), rev);
            expected(static_cast<std::size_t>(it - labels.begin()), j) = Rational(sign);
        }
        rec.truth(name + ".antipode_reversal.m=" + std::to_string(m), expected == S[m],
                  {{"instance", name}, {"m", m}, {"antipode", S[m].str()}});
    }
}

void suite_oracle(Recorder& rec, const VerifyBounds& b) {
    const int M = b.max_degree.value_or(4);
    const auto ns = b.n_values.value_or(default_ns());
    if (b.alphabet) {
        oracle_instance(rec, label_of(*b.alphabet), hopf::build_shuffle(*b.alphabet, Rational(1), M), M, ns, true);
        return;
    }
    for (const auto& v : {std::vector<BigInt>{1}, std::vector<BigInt>{2}, std::vector<BigInt>{1, 1}, std::vector<BigInt>{1, 1, 3}}) {
        WeightedAlphabet a{v};
        oracle_instance(rec, label_of(a), hopf::build_shuffle(a, Rational(1), M), M, ns, true);
    }
    oracle_instance(rec, "sym_powersum", hopf::build_sym_powersum(M), M, ns, false);
    oracle_instance(rec, "qsym_monomial", hopf::build_qsym_monomial(M), M, ns, false);
}

BigInt fib_shifted(int n) {
    if (n == 0) return 1;
    BigInt a = 0, b = 1;
    for (int i = 0; i < n; ++i) {
        BigInt c = a + b;
        a = b;
        b = c;
    }
    return a;
}

void suite_identities(Recorder& rec, const VerifyBounds& b) {
    const int M = b.max_degree.value_or(30);
    const auto ns = b.n_values.value_or(std::vector<Rational>{1, 2, 3});

    const auto sym = spectra::preset_profile("sym", M);
    const auto sym_gf = spectra::antipode_trace_gf(sym, M);
    for (int m = 0; m <= M; ++m) {
        const auto st = combinatorics::partition_statistics(m);
        const BigInt signed_c = m % 2 ? BigInt(-st.self_conjugate) : st.self_conjugate;
        const std::string tag = ".m=" + std::to_string(m);
        rec.equal("sym.self_conjugate_parity" + tag, st.self_conjugate, BigInt(st.even_even_parts - st.odd_even_parts));
        rec.equal("sym.self_conjugate_length" + tag, signed_c, BigInt(st.even_length - st.odd_length));
        rec.equal("sym.antipode_trace" + tag, Rational(signed_c), sym_gf[m]);
    }

    for (const char* name : {"sym", "ssym"}) {
        const auto p = spectra::preset_profile(name, M);
        for (const auto& n : ns)
            rec.equal(std::string(name) + ".trace_power_rel2.n=" + to_string(n),
                      spectra::trace_gf(p, n * n, M).substitute_power(2),
                      spectra::trace_gf(p, n, M) * spectra::trace_gf(p, -n, M));
    }

    for (const char* name : {"sym", "ssym", "qsym", "peak", "schur_p"}) {
        const auto p = spectra::preset_profile(name, M);
        const auto h = p.h_series();
        rec.equal(std::string(name) + ".antipode_gf", h.substitute_power(2) / h, spectra::antipode_trace_gf(p, M));
        for (const auto& n : ns)
            rec.equal(std::string(name) + ".trace_gf.n=" + to_string(n),
                      spectra::trace_table(p, n, M, spectra::TraceRoute::formula).values,
                      spectra::trace_gf(p, n, M).coefficients());
    }

    const int Mq = std::min(M, 20);
    for (const char* name : {"qsym", "peak"}) {
        const auto p = spectra::preset_profile(name, Mq);
        const WeightedAlphabet v{*p.v};
        const auto gf = spectra::trace_table(p, -1, Mq, spectra::TraceRoute::generating_function).values;
        std::vector<Rational> closed, pal;
        for (int m = 0; m <= Mq; ++m) {
            pal.emplace_back(cofree::cofree_trace(v, m));
            if (std::string(name) == "qsym")
                closed.emplace_back(m == 0 ? BigInt(1) : m % 2 ? BigInt(-pow(BigInt(2), (m - 1) / 2)) : BigInt(0));
            else
                closed.emplace_back(m % 2 ? BigInt(-fib_shifted((m + 1) / 2 + 1)) : fib_shifted(m / 2));
        }
        rec.equal(std::string(name) + ".trace_table.generating_function", closed, gf);
        rec.equal(std::string(name) + ".trace_table.palindromes", closed, pal);
    }

    const int Mp = std::min(M, 12);
    std::vector<WeightedAlphabet> alphabets{{{1}}, {{2}}, {{1, 1}}, {{1, 1, 3}}, {{0, 2, 1}}, {{3, 0, 1, 2}}, {{1, 2, 3, 1, 1}}};
    if (b.alphabet) alphabets = {*b.alphabet};
    for (const auto& v : alphabets) {
        const auto pal = combinatorics::pal_table(v, Mp);
        const auto mul = combinatorics::mul_table(spectra::profile_from_v(v.counts, Mp).g, Mp);
        for (int m = 0; m <= Mp; ++m)
            rec.equal("pal_eul2." + v.str() + ".m=" + std::to_string(m), mul.alternating_column_sum(m),
                      pal.pal.alternating_column_sum(m));
        const int Mg = std::min(M, 20);
        const auto gfs = cofree::pal_gfs(v, Mg);
        const auto t = combinatorics::pal_table(v, Mg);
        bool ok = true;
        json where;
        for (int m = 0; m <= Mg && ok; ++m)
            for (int k = 0; 2 * k + 1 <= Mg && ok; ++k)
                if (gfs.even.coefficient(k, m) != Rational(t.pal(2 * k, m)) ||
                    gfs.odd.coefficient(k, m) != Rational(t.pal(2 * k + 1, m))) {
                    ok = false;
                    where = {{"k", k}, {"m", m}};
                }
        rec.truth("pal_gfs." + v.str(), ok, where);
    }
}

void suite_qidentities(Recorder& rec, const VerifyBounds& b) {
    const int M = b.max_degree.value_or(4);
    const WeightedAlphabet v = b.alphabet.value_or(WeightedAlphabet{{1, 1}});
    const auto q = LaurentPoly::q();
    const auto inst = hopf::build_shuffle(v, q, M);
    for (int m = 0; m <= M; ++m) {
        const auto S = hopf::antipode_matrix(inst, m);
        const std::string tag = "." + v.str() + ".m=" + std::to_string(m);
        rec.equal("q_antipode_charpoly" + tag, cofree::q_char_poly(v, m).expand(), char_poly_exact(S));
        rec.equal("q_antipode_trace" + tag, cofree::q_trace(v, m), S.trace());
        rec.equal("q_one_charpoly" + tag, cofree::cofree_char_poly(v, m), cofree::q_char_poly(v, m).at_q_equals_one());
        rec.equal("q_one_trace" + tag, Rational(cofree::cofree_trace(v, m)), cofree::q_trace_at(v, m, 1).value);
    }
    const int Mg = std::min(std::max(M, 8), 8);
    for (long r = 1; r <= 3; ++r) {
        const WeightedAlphabet geo{{BigInt(r)}};
        for (int m = 0; m <= Mg; ++m) {
            BigInt c = pow(BigInt(r), (m + 1) / 2);
            if (m % 2) c = -c;
            rec.equal("q_geometric.r=" + std::to_string(r) + ".m=" + std::to_string(m),
                      LaurentPoly::monomial(c, m * (m - 1) / 2), cofree::q_trace(geo, m));
        }
    }
    for (const auto& a : {v, WeightedAlphabet{{2, 1}}}) {
        const auto gf = cofree::q_pal_gfs(a, Mg);
        const auto table = cofree::q_pal_table(a, Mg);
        bool ok = true;
        json where;
        for (int m = 0; m <= Mg && ok; ++m) {
            const auto norm = LaurentPoly::monomial(1, -(m * (m - 1) / 2));
            for (int k = 0; 2 * k + 1 <= Mg && ok; ++k)
                if (gf.even.coefficient(k, m) != table[2 * k][m] * norm || gf.odd.coefficient(k, m) != table[2 * k + 1][m] * norm) {
                    ok = false;
                    where = {{"k", k}, {"m", m}};
                }
            if (ok && gf.trace[m] != cofree::q_trace(a, m) * norm) {
                ok = false;
                where = {{"trace", m}};
            }
        }
        rec.truth("q_pal_gfs." + a.str(), ok, where);
    }
}

void suite_species(Recorder& rec, const VerifyBounds& b) {
    const int M = b.max_degree.value_or(12);
    const std::vector<long> pi_reference{1, -1, 0, 1, 1, -2, -9, -9, 50, 267};
    const auto pi = species::species_preset("Pi", M);
    const auto pi_trace = species::species_antipode_trace(pi, M);
    for (int m = 0; m <= std::min(M, 9); ++m)
        rec.equal("Pi.antipode_trace.m=" + std::to_string(m), Rational(pi_reference[static_cast<std::size_t>(m)]),
                  pi_trace.values[static_cast<std::size_t>(m)]);

    const auto sigma = species::species_antipode_trace(species::species_preset("Sigma", M), M);
    for (int m = 1; m <= M; ++m)
        rec.equal("Sigma.antipode_trace.m=" + std::to_string(m), Rational(-1), sigma.values[static_cast<std::size_t>(m)]);

    const int Ms = std::min(M, 10);
    std::vector<std::vector<BigInt>> s2(Ms + 1, std::vector<BigInt>(Ms + 1, 0));
    s2[0][0] = 1;
    for (int m = 1; m <= Ms; ++m)
        for (int k = 1; k <= m; ++k) s2[m][k] = k * s2[m - 1][k] + s2[m - 1][k - 1];
    const auto expmul = species::species_expmul(species::species_preset("Pi", Ms), Ms);
    for (int m = 0; m <= Ms; ++m) {
        std::vector<BigInt> col;
        for (int k = 0; k <= Ms; ++k) col.push_back(expmul(k, m));
        rec.equal("Pi.expmul.m=" + std::to_string(m), s2[static_cast<std::size_t>(m)], col);
    }

    std::vector<BigInt> lplus{0};
    for (int m = 1; m <= M; ++m) lplus.push_back(factorial(m));
    const auto prof = species::species_linear_orders_of(lplus, M);
    const auto tr = species::species_antipode_trace(prof, M);
    for (int m = 1; m <= M; ++m)
        rec.equal("L_of_L+.antipode_trace.m=" + std::to_string(m), Rational(-lplus[static_cast<std::size_t>(m)]),
                  tr.values[static_cast<std::size_t>(m)]);

    const auto assembly = species::assembly_trace(pi.p_dims(), M);
    std::vector<Rational> via_assembly;
    for (const auto& x : assembly.trace) via_assembly.emplace_back(x);
    rec.equal("Pi.assembly_vs_reciprocal", pi_trace.values, via_assembly);
}

void suite_figures(Recorder& rec) {
    std::vector<BigInt> fact;
    for (int m = 0; m <= 6; ++m) fact.push_back(factorial(m));
    const auto g = inverse_euler_transform(fact).g;
    const auto mul = combinatorics::mul_table(g, 6);
    const auto pal = combinatorics::pal_table(WeightedAlphabet{{1, 1, 3, 13, 71, 461}}, 6);
    for (int k = 1; k <= 6; ++k)
        for (int m = 1; m <= 6; ++m) {
            const std::string tag = ".k=" + std::to_string(k) + ".m=" + std::to_string(m);
            rec.equal("figure.mul" + tag, BigInt(figure_mul_array()[k - 1][m - 1]), mul(k, m));
            rec.equal("figure.pal" + tag, BigInt(figure_pal_array()[k - 1][m - 1]), pal.pal(k, m));
        }
    for (int m = 0; m <= 6; ++m)
        rec.equal("figure.alternating_column.m=" + std::to_string(m), mul.alternating_column_sum(m),
                  pal.pal.alternating_column_sum(m));
}

} // namespace

std::vector<std::string> suite_names() { return {"oracle", "identities", "qidentities", "species", "figures"}; }

VerifyReport run_suite(std::string_view name, const VerifyBounds& bounds) {
    const auto names = suite_names();
    if (std::find(names.begin(), names.end(), name) == names.end())
        throw Error(Errc::InvalidArgument, "unknown suite '" + std::string(name) + "'");
    if (bounds.max_degree && *bounds.max_degree < 0)
        throw Error(Errc::InvalidArgument, "max degree must be nonnegative");
    VerifyReport report{std::string(name), {}};
    if (bounds.n_values && bounds.n_values->empty()) return report;
    Recorder rec(report);
    rec.guarded(std::string(name), [&] {
        if (name == "oracle") suite_oracle(rec, bounds);
        else if (name == "identities") suite_identities(rec, bounds);
        else if (name == "qidentities") suite_qidentities(rec, bounds);
        else if (name == "species") suite_species(rec, bounds);
        else suite_figures(rec);
    });
    return report;
}

} // namespace adams::verify
