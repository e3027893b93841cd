#include "adams/spectra.hpp"

#include <algorithm>

#include "adams/errors.hpp"
#include "adams/euler.hpp"

namespace adams::spectra {

using combinatorics::mul_table;

std::string source_name(ProfileSource s) {
    switch (s) {
    case ProfileSource::given_h: return "given_h";
    case ProfileSource::given_g: return "given_g";
    case ProfileSource::given_v: return "given_v";
    case ProfileSource::preset: return "preset";
    }
    return "unknown";
}

std::string route_name(TraceRoute r) {
    switch (r) {
    case TraceRoute::formula: return "formula";
    case TraceRoute::generating_function: return "generating_function";
    case TraceRoute::oracle: return "oracle";
    }
    return "unknown";
}

void DimensionProfile::require(int m, bool allow_nonrealizable) const {
    if (m < 0 || m > max_degree())
        throw Error(Errc::DegreeOutOfRange,
                    "degree " + std::to_string(m) + " requested, profile defined through " + std::to_string(max_degree()));
    if (!realizable && !allow_nonrealizable)
        throw Error(Errc::NotRealizable, "profile has negative g: (" + join(g) + ")");
}

namespace {

void check_h(const std::vector<BigInt>& h) {
    if (h.empty()) throw Error(Errc::InvalidArgument, "empty dimension sequence");
    if (h[0] != 1) throw Error(Errc::InvalidConstantTerm, "h_0 must be 1, got " + h[0].str());
    for (std::size_t m = 0; m < h.size(); ++m)
        if (h[m] < 0) throw Error(Errc::NotRealizable, "h_" + std::to_string(m) + " = " + h[m].str() + " < 0");
}

bool all_nonnegative(const std::vector<BigInt>& xs) {
    return std::all_of(xs.begin(), xs.end(), [](const BigInt& x) { return x >= 0; });
}

// v(t) = 1 - 1/h(t), when it has nonnegative integer coefficients.
std::optional<std::vector<BigInt>> cofree_alphabet(const std::vector<BigInt>& h) {
    RationalSeries hs = series_from_integers(h);
    RationalSeries v = RationalSeries::one(hs.truncation()) - RationalSeries::one(hs.truncation()) / hs;
    std::vector<BigInt> out;
    for (int n = 1; n <= v.truncation(); ++n) {
        if (!is_integer(v[n]) || v[n] < 0) return std::nullopt;
        out.push_back(numerator(v[n]));
    }
    return out;
}

} // namespace

DimensionProfile profile_from_h(std::vector<BigInt> h, bool force) {
    check_h(h);
    DimensionProfile p;
    auto inv = inverse_euler_transform(h, force);
    p.h = std::move(h);
    p.g = std::move(inv.g);
    p.realizable = inv.realizable;
    p.source = ProfileSource::given_h;
    return p;
}

DimensionProfile profile_from_g(std::vector<BigInt> g, int max_degree, bool force) {
    if (max_degree < 0) throw Error(Errc::InvalidArgument, "negative max degree");
    g.resize(static_cast<std::size_t>(max_degree), 0);
    DimensionProfile p;
    p.realizable = all_nonnegative(g);
    if (!p.realizable && !force)
        throw Error(Errc::NotRealizable, "g = (" + join(g) + ") has a negative entry");
    p.h = integer_coefficients(euler_transform(g, max_degree), "h");
    p.g = std::move(g);
    p.source = ProfileSource::given_g;
    return p;
}

DimensionProfile profile_from_v(std::vector<BigInt> v, int max_degree) {
    if (max_degree < 0) throw Error(Errc::InvalidArgument, "negative max degree");
    v.resize(static_cast<std::size_t>(max_degree), 0);
    combinatorics::WeightedAlphabet alphabet{v};
    alphabet.validate();
    DimensionProfile p;
    p.h = combinatorics::word_counts(alphabet, max_degree);
    p.g = combinatorics::witt_counts(alphabet, max_degree);
    p.v = std::move(v);
    p.source = ProfileSource::given_v;
    return p;
}

DimensionProfile profile_from_rational(const RationalFunction& f, int max_degree, bool force) {
    auto h = integer_coefficients(f.taylor(max_degree), "h");
    DimensionProfile p = profile_from_h(std::move(h), force);
    p.rational_gf = f;
    return p;
}

std::vector<std::string> preset_names() {
    return {"sym", "schur_p", "qsym", "ssym", "peak", "fibonacci", "geometric:r"};
}

DimensionProfile preset_profile(std::string_view name, int M, bool force) {
    if (M < 0) throw Error(Errc::InvalidArgument, "negative max degree");
    using P = Polynomial<Rational>;
    DimensionProfile p;
    const std::size_t n = static_cast<std::size_t>(M);
    if (name == "sym") {
        p = profile_from_g(std::vector<BigInt>(n, 1), M);
    } else if (name == "schur_p") {
        std::vector<BigInt> g(n, 0);
        for (std::size_t i = 0; i < n; i += 2) g[i] = 1;
        p = profile_from_g(std::move(g), M);
    } else if (name == "qsym") {
        p = profile_from_v(std::vector<BigInt>(n, 1), M);
        p.rational_gf = RationalFunction(P({1, -1}), P({1, -2}));
    } else if (name == "ssym") {
        std::vector<BigInt> h;
        for (int m = 0; m <= M; ++m) h.push_back(factorial(static_cast<unsigned>(m)));
        p = profile_from_h(std::move(h), force);
        p.v = cofree_alphabet(p.h);
    } else if (name == "peak" || name == "fibonacci") {
        p = profile_from_rational(RationalFunction(P({1, 0, -1}), P({1, -1, -1})), M, force);
        p.v = cofree_alphabet(p.h);
    } else if (name.substr(0, 10) == "geometric:") {
        BigInt r = parse_integer(name.substr(10));
        if (r < 0) throw Error(Errc::InvalidArgument, "geometric preset needs r >= 0");
        std::vector<BigInt> v(n, 0);
        if (M >= 1) v[0] = r;
        p = profile_from_v(std::move(v), M);
        p.rational_gf = RationalFunction(P({Rational(1)}), P({Rational(1), Rational(-r)}));
    } else {
        throw Error(Errc::InvalidArgument, "unknown preset '" + std::string(name) + "'");
    }
    p.source = ProfileSource::preset;
    p.preset = std::string(name);
    return p;
}

BigInt SpectrumFactorization::degree() const {
    BigInt d = 0;
    for (const auto& k : mult) d += k;
    return d;
}

std::map<Rational, BigInt> SpectrumFactorization::eigenvalues() const {
    std::map<Rational, BigInt> out;
    for (int k = 0; k <= m; ++k)
        if (mult[static_cast<std::size_t>(k)] != 0) out[pow(n, k)] += mult[static_cast<std::size_t>(k)];
    return out;
}

Polynomial<Rational> SpectrumFactorization::expand() const {
    auto poly = Polynomial<Rational>::constant(Rational(1));
    for (const auto& [lambda, mu] : eigenvalues()) {
        if (mu < 0) throw Error(Errc::NotRealizable, "negative multiplicity in a formal factorization");
        poly *= Polynomial<Rational>::linear(lambda).pow(mu.convert_to<unsigned>());
    }
    return poly;
}

std::string SpectrumFactorization::str() const {
    std::string out;
    for (int k = 0; k <= m; ++k) {
        const BigInt& mu = mult[static_cast<std::size_t>(k)];
        if (mu == 0) continue;
        if (!out.empty()) out += " ";
        const Rational root = pow(n, k);
        out += (root < 0 ? "(x + " + to_string(Rational(-root)) : "(x - " + to_string(root)) + ")^" + mu.str();
    }
    return out.empty() ? "1" : out;
}

namespace {

std::vector<BigInt> mul_column(const DimensionProfile& p, int m) {
    std::vector<BigInt> g(p.g.begin(), p.g.begin() + m);
    return mul_table(g, m).column(m);
}

} // namespace

SpectrumFactorization char_poly_adams(const DimensionProfile& p, const Rational& n, int m) {
    p.require(m);
    return {n, m, mul_column(p, m)};
}

Polynomial<Rational> AntipodeSpectrum::expand() const {
    using P = Polynomial<Rational>;
    return P::linear(Rational(1)).pow(emul.convert_to<unsigned>()) * P::linear(Rational(-1)).pow(omul.convert_to<unsigned>());
}

std::string AntipodeSpectrum::str() const {
    std::string out;
    if (emul != 0) out += "(x - 1)^" + emul.str();
    if (omul != 0) out += std::string(out.empty() ? "" : " ") + "(x + 1)^" + omul.str();
    return out.empty() ? "1" : out;
}

AntipodeSpectrum char_poly_antipode(const DimensionProfile& p, int m) {
    p.require(m);
    AntipodeSpectrum out{m, 0, 0};
    auto col = mul_column(p, m);
    for (int k = 0; k <= m; ++k) (k % 2 ? out.omul : out.emul) += col[static_cast<std::size_t>(k)];
    return out;
}

Rational trace_adams(const DimensionProfile& p, const Rational& n, int m) {
    p.require(m);
    auto col = mul_column(p, m);
    Rational t = 0, power = 1;
    for (int k = 0; k <= m; ++k) {
        t += power * Rational(col[static_cast<std::size_t>(k)]);
        power *= n;
    }
    return t;
}

RationalSeries trace_gf(const DimensionProfile& p, const Rational& n, int M) {
    p.require(M);
    // log prod_i (1 - n t^i)^{-g_i} = sum_i g_i sum_d n^d t^{id} / d
    RationalSeries L = RationalSeries::zero(M);
    for (int N = 1; N <= M; ++N)
        for (long d : divisors(N)) {
            const BigInt& gi = p.g[static_cast<std::size_t>(N / d - 1)];
            if (gi != 0) L[N] += Rational(gi) * pow(n, d) / Rational(d);
        }
    return exp(L);
}

RationalSeries antipode_trace_gf(const DimensionProfile& p, int M) {
    p.require(M);
    RationalSeries h = series_from_integers(std::vector<BigInt>(p.h.begin(), p.h.begin() + M + 1));
    return h.substitute_power(2) / h;
}

AntipodeSpectrum comp_power_char_poly(const DimensionProfile& p, long n, int m) {
    if (n % 2 == 0) {
        p.require(m);
        return {m, p.h[static_cast<std::size_t>(m)], 0};
    }
    return char_poly_antipode(p, m);
}

Rational schur_indicator(const DimensionProfile& p, const Rational& n, int m) { return trace_adams(p, -n, m); }

TraceTable trace_table(const DimensionProfile& p, const Rational& n, int M, TraceRoute route) {
    p.require(M);
    TraceTable out{n, {}, route};
    if (route == TraceRoute::formula) {
        auto table = mul_table(std::vector<BigInt>(p.g.begin(), p.g.begin() + M), M);
        for (int m = 0; m <= M; ++m) {
            Rational t = 0, power = 1;
            for (int k = 0; k <= m; ++k) {
                t += power * Rational(table(k, m));
                power *= n;
            }
            out.values.push_back(t);
        }
    } else if (route == TraceRoute::generating_function) {
        out.values = trace_gf(p, n, M).coefficients();
    } else {
        throw Error(Errc::NotApplicable, "the oracle route needs a Hopf instance");
    }
    return out;
}

// ---------------------------------------------------------------------------
// Asymptotics

namespace {

Complex evaluate(const Polynomial<Rational>& p, const Complex& z, mpfr_prec_t bits) {
    Complex acc(bits);
    for (int d = p.degree(); d >= 0; --d) acc = acc * z + Complex(Real(p.coefficient(d), bits), Real(bits));
    return acc;
}

Real evaluate(const Polynomial<Rational>& p, const Real& x) {
    Real acc(x.precision());
    for (int d = p.degree(); d >= 0; --d) acc = acc * x + Real(p.coefficient(d), x.precision());
    return acc;
}

Real from_rational(const Rational& q, mpfr_prec_t bits) { return Real(q, bits); }

} // namespace

std::vector<Complex> complex_roots(const Polynomial<Rational>& p, mpfr_prec_t bits) {
    const int d = p.degree();
    std::vector<Complex> z;
    if (d < 1) return z;
    const mpfr_prec_t work = bits + 64;
    Polynomial<Rational> mon = monic(p);
    if (d == 1) {
        z.emplace_back(Real(-mon.coefficient(0), bits), Real(bits));
        return z;
    }
    Rational bound = 0;
    for (int i = 0; i < d; ++i) bound = std::max(bound, Rational(abs(mon.coefficient(i))));
    Real radius = Real(Rational(bound + 1), work);
    Complex seed(Real(Rational(2, 5), work), Real(Rational(9, 10), work));
    Complex power(Real(1L, work), Real(work));
    for (int k = 0; k < d; ++k) {
        z.emplace_back(power.re * radius, power.im * radius);
        power = power * seed;
    }
    const Real eps = ldexp(1, -static_cast<long>(work) + 8, work);
    // Weierstrass / Durand-Kerner iteration.
    for (int iter = 0; iter < 5000; ++iter) {
        Real worst(work);
        for (int k = 0; k < d; ++k) {
            Complex den(Real(1L, work), Real(work));
            for (int j = 0; j < d; ++j)
                if (j != k) den = den * (z[k] - z[j]);
            Complex delta = evaluate(mon, z[k], work) / den;
            z[k] = z[k] - delta;
            Real size = delta.modulus() / (Real(1L, work) + z[k].modulus());
            if (size > worst) worst = size;
        }
        if (worst <= eps) break;
    }
    Polynomial<Rational> deriv = mon.derivative();
    for (auto& r : z) {
        for (int it = 0; it < 3; ++it) {
            Complex dv = evaluate(deriv, r, work);
            if (dv.norm().is_zero()) break;
            r = r - evaluate(mon, r, work) / dv;
        }
        Real re(bits), im(bits);
        mpfr_set(re.raw(), r.re.raw(), MPFR_RNDN);
        mpfr_set(im.raw(), r.im.raw(), MPFR_RNDN);
        r = Complex(std::move(re), std::move(im));
    }
    return z;
}

Real AsymptoticReport::predicted_ratio(int m) const {
    const mpfr_prec_t bits = R.precision();
    Real sqrt_r = sqrt(R);
    Real scale = pow(sqrt_r, m) / pow(Real(2L, bits), gamma);
    Real sum = Real(1L, bits) / h_at_sqrt_R;
    Real second = Real(1L, bits) / h_at_minus_sqrt_R;
    sum = m % 2 ? sum - second : sum + second;
    return scale * sum;
}

AsymptoticReport asymptotic_ratio(const RationalFunction& f, const std::vector<int>& m_eval,
                                  const AsymptoticOptions& options) {
    const mpfr_prec_t bits = options.precision_bits;
    if (bits < 16) throw Error(Errc::InvalidArgument, "precision below 16 bits");
    const Real tol(options.tolerance, bits);
    const Real one(1L, bits);
    const auto& num = f.numerator();
    const auto& den = f.denominator();
    if (den.degree() < 1)
        throw Error(Errc::HypothesisViolated, "h(z) = " + f.str("z") + " is a polynomial: no singularity");

    AsymptoticReport rep;
    rep.options = options;

    struct Pole {
        Complex z;
        int order;
    };
    std::vector<Pole> poles;
    for (const auto& [factor, mult] : square_free_factorization(den))
        for (auto& z : complex_roots(factor, bits)) poles.push_back({std::move(z), mult});

    // R: smallest positive real pole.
    const Pole* dominant = nullptr;
    for (const auto& pole : poles) {
        bool real = abs(pole.z.im) <= tol * (one + abs(pole.z.re));
        if (!real || pole.z.re.sign() <= 0) continue;
        if (!dominant || pole.z.re < dominant->z.re) dominant = &pole;
    }
    if (!dominant) throw Error(Errc::HypothesisViolated, "h(z) = " + f.str("z") + " has no positive real pole");
    rep.R = dominant->z.re;
    rep.gamma = dominant->order;
    for (const auto& r : rational_roots(den)) {
        if (r <= 0) continue;
        if (abs(Real(r, bits) - rep.R) <= tol * rep.R) {
            rep.R_exact = true;
            rep.R_rational = r;
            rep.R = Real(r, bits);
        }
    }
    if (rep.R > one * (one + tol))
        throw Error(Errc::HypothesisViolated, "dominant pole R = " + rep.R.str(20) + " exceeds 1");

    // Hypothesis 1: R is the only pole in |z| <= R^(1/4), and none is closer to 0.
    Real r4 = root(rep.R, 4);
    rep.checks.unique_singularity = true;
    for (const auto& pole : poles) {
        if (&pole == dominant) continue;
        Real mod = pole.z.modulus();
        if (mod <= r4 * (one + tol) || mod < rep.R) rep.checks.unique_singularity = false;
    }
    // Hypothesis 2: no zero of h in |z| <= R^(1/2).
    Real r2 = sqrt(rep.R);
    rep.checks.nonvanishing = true;
    if (num.degree() >= 1)
        for (const auto& [factor, mult] : square_free_factorization(num))
            for (const auto& z : complex_roots(factor, bits))
                if (z.modulus() <= r2 * (one + tol)) rep.checks.nonvanishing = false;
    if (num.is_zero()) rep.checks.nonvanishing = false;

    // Hypothesis 3: h(-sqrt R) != +-h(sqrt R), both finite.
    Real dp = evaluate(den, r2), dm = evaluate(den, -r2);
    bool finite = abs(dp) > tol && abs(dm) > tol;
    if (finite) {
        rep.h_at_sqrt_R = evaluate(num, r2) / dp;
        rep.h_at_minus_sqrt_R = evaluate(num, -r2) / dm;
        Real scale = abs(rep.h_at_sqrt_R) + abs(rep.h_at_minus_sqrt_R);
        rep.checks.plus_minus_distinct = abs(rep.h_at_minus_sqrt_R - rep.h_at_sqrt_R) > tol * scale &&
                                         abs(rep.h_at_minus_sqrt_R + rep.h_at_sqrt_R) > tol * scale &&
                                         !rep.h_at_sqrt_R.is_zero() && !rep.h_at_minus_sqrt_R.is_zero();
    }

    // h*(R) = lim (1 - z/R)^gamma h(z) = (-1/R)^gamma N(R) gamma! / D^{(gamma)}(R)
    {
        Polynomial<Rational> d = den;
        for (int i = 0; i < rep.gamma; ++i) d = d.derivative();
        Real q = evaluate(d, rep.R) / Real(Rational(factorial(static_cast<unsigned>(rep.gamma))), bits);
        rep.h_star = pow(-one / rep.R, rep.gamma) * evaluate(num, rep.R) / q;
    }

    if (!rep.checks.all()) {
        std::string failed;
        if (!rep.checks.unique_singularity) failed += " unique_singularity";
        if (!rep.checks.nonvanishing) failed += " nonvanishing";
        if (!rep.checks.plus_minus_distinct) failed += " plus_minus_distinct";
        if (options.throw_on_violation)
            throw Error(Errc::HypothesisViolated, "h(z) = " + f.str("z") + " fails:" + failed);
        return rep;
    }

    int top = 0;
    for (int m : m_eval) {
        if (m < 0) throw Error(Errc::InvalidArgument, "negative degree in evaluation list");
        top = std::max(top, m);
    }
    RationalSeries h = f.taylor(top);
    RationalSeries a = h.substitute_power(2) / h;
    for (int m : m_eval) {
        if (h[m] == 0) throw Error(Errc::InvalidArgument, "h_" + std::to_string(m) + " = 0; ratio undefined");
        RatioPrediction pr;
        pr.m = m;
        pr.predicted = rep.predicted_ratio(m);
        pr.exact = from_rational(a[m] / h[m], bits);
        Real diff = abs(pr.predicted - pr.exact);
        pr.relative_error = pr.exact.is_zero() ? diff : diff / abs(pr.exact);
        rep.predictions.push_back(std::move(pr));
    }
    return rep;
}

AsymptoticReport asymptotic_ratio(const DimensionProfile& p, const std::vector<int>& m_eval,
                                  const AsymptoticOptions& options) {
    if (!p.rational_gf)
        throw Error(Errc::NotRational, "profile '" + (p.preset.empty() ? source_name(p.source) : p.preset) +
                                           "' has no rational generating function");
    return asymptotic_ratio(*p.rational_gf, m_eval, options);
}

} // namespace adams::spectra
