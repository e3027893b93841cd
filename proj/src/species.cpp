#include "adams/species.hpp"

#include "adams/errors.hpp"
#include "adams/numeric.hpp"

namespace adams::species {

std::string source_name(SpeciesSource s) {
    switch (s) {
    case SpeciesSource::sigma: return "Sigma";
    case SpeciesSource::pi: return "Pi";
    case SpeciesSource::linear_orders: return "L";
    case SpeciesSource::exponential: return "E";
    case SpeciesSource::linear_orders_of_p: return "L_of_P";
    case SpeciesSource::custom_h: return "custom_h";
    case SpeciesSource::custom_p: return "custom_p";
    }
    return "unknown";
}

namespace {

RationalSeries egf(const std::vector<BigInt>& raw) { return series_from_integers(raw, Flavor::exponential); }

void check_dims(const std::vector<BigInt>& values, std::string_view what) {
    for (std::size_t m = 0; m < values.size(); ++m)
        if (values[m] < 0)
            throw Error(Errc::NotRealizable, std::string(what) + "[" + std::to_string(m) + "] = " + values[m].str() + " is negative");
}

SpeciesProfile finish(RationalSeries h, RationalSeries p, SpeciesSource source) {
    SpeciesProfile out{std::move(h), std::move(p), source};
    check_dims(integer_coefficients(out.h, "h"), "h");
    (void)species_expmul(out, out.max_degree());
    return out;
}

} // namespace

SpeciesProfile species_from_h(const std::vector<BigInt>& h) {
    if (h.empty() || h[0] != 1) throw Error(Errc::InvalidConstantTerm, "species dimensions need h_0 = 1");
    check_dims(h, "h");
    RationalSeries hs = egf(h);
    return finish(hs, log(hs), SpeciesSource::custom_h);
}

SpeciesProfile species_from_p(const std::vector<BigInt>& p, int max_degree) {
    if (max_degree < 0) throw Error(Errc::InvalidArgument, "negative max degree");
    std::vector<BigInt> raw(static_cast<std::size_t>(max_degree) + 1, 0);
    for (std::size_t m = 0; m < p.size() && m <= static_cast<std::size_t>(max_degree); ++m) raw[m] = p[m];
    if (raw[0] != 0) throw Error(Errc::InvalidConstantTerm, "primitive dimensions need p_0 = 0");
    check_dims(raw, "p");
    RationalSeries ps = egf(raw);
    return finish(exp(ps), ps, SpeciesSource::custom_p);
}

SpeciesProfile species_linear_orders_of(const std::vector<BigInt>& p, int max_degree) {
    if (max_degree < 0) throw Error(Errc::InvalidArgument, "negative max degree");
    std::vector<BigInt> raw(static_cast<std::size_t>(max_degree) + 1, 0);
    for (std::size_t m = 0; m < p.size() && m <= static_cast<std::size_t>(max_degree); ++m) raw[m] = p[m];
    if (raw[0] != 0) throw Error(Errc::InvalidConstantTerm, "L o P needs a positive species, p_0 = 0");
    check_dims(raw, "p");
    RationalSeries one = RationalSeries::one(max_degree, Flavor::exponential);
    RationalSeries h = one / (one - egf(raw));
    return finish(h, log(h), SpeciesSource::linear_orders_of_p);
}

SpeciesProfile species_preset(std::string_view name, int M) {
    if (M < 0) throw Error(Errc::InvalidArgument, "negative max degree");
    std::vector<BigInt> ones(static_cast<std::size_t>(M) + 1, 1);
    RationalSeries e = egf(ones);
    RationalSeries one = RationalSeries::one(M, Flavor::exponential);
    if (name == "Sigma") {
        RationalSeries h = one / (one.scaled(Rational(2)) - e);
        return finish(h, log(h), SpeciesSource::sigma);
    }
    if (name == "Pi") {
        RationalSeries p = e - one;
        return finish(exp(p), p, SpeciesSource::pi);
    }
    if (name == "L") {
        RationalSeries h = one / (one - RationalSeries::monomial(Rational(1), 1, M, Flavor::exponential));
        return finish(h, log(h), SpeciesSource::linear_orders);
    }
    if (name == "E") return finish(e, RationalSeries::monomial(Rational(1), 1, M, Flavor::exponential), SpeciesSource::exponential);
    throw Error(Errc::InvalidArgument, "unknown species preset '" + std::string(name) + "'");
}

std::vector<std::string> species_preset_names() { return {"Sigma", "Pi", "L", "E"}; }

combinatorics::TriangleTable species_expmul(const SpeciesProfile& profile, int M) {
    if (M < 0 || M > profile.max_degree())
        throw Error(Errc::DegreeOutOfRange, "degree " + std::to_string(M) + " outside profile of degree " +
                                                std::to_string(profile.max_degree()));
    RationalSeries p = profile.p.truncated(M);
    combinatorics::TriangleTable out(M);
    RationalSeries power = RationalSeries::one(M, Flavor::exponential);
    for (int k = 0; k <= M; ++k) {
        Rational kfact(factorial(k));
        for (int m = 0; m <= M; ++m) {
            Rational value = power[m] / kfact;
            std::string where = "expmul(" + std::to_string(k) + "," + std::to_string(m) + ")";
            if (!is_integer(value))
                throw Error(Errc::NonIntegral, where + " = " + to_string(value) + ": not a Hopf monoid dimension sequence");
            if (value < 0)
                throw Error(Errc::NotRealizable, where + " = " + to_string(value) + ": not a Hopf monoid dimension sequence");
            out(k, m) = to_integer(value);
        }
        power *= p;
    }
    return out;
}

spectra::SpectrumFactorization species_char_poly(const SpeciesProfile& profile, const Rational& n, int m) {
    auto table = species_expmul(profile, m);
    spectra::SpectrumFactorization out;
    out.n = n;
    out.m = m;
    for (int k = 0; k <= m; ++k) out.mult.push_back(table(k, m));
    return out;
}

spectra::TraceTable species_antipode_trace(const SpeciesProfile& profile, int M) {
    if (M < 0 || M > profile.max_degree())
        throw Error(Errc::DegreeOutOfRange, "degree " + std::to_string(M) + " outside profile of degree " +
                                                std::to_string(profile.max_degree()));
    RationalSeries h = profile.h.truncated(M);
    RationalSeries a = RationalSeries::one(M, Flavor::exponential) / h;
    (void)integer_coefficients(a, "antipode trace");
    return {Rational(-1), a.coefficients(), spectra::TraceRoute::generating_function};
}

AssemblyTable assembly_trace(const std::vector<BigInt>& p_dims, int M) {
    auto table = species_expmul(species_from_p(p_dims, M), M);
    AssemblyTable out;
    for (int m = 0; m <= M; ++m) {
        BigInt even = 0, odd = 0;
        for (int k = 0; k <= m; ++k) (k % 2 ? odd : even) += table(k, m);
        out.even.push_back(even);
        out.odd.push_back(odd);
        out.trace.push_back(even - odd);
    }
    return out;
}

} // namespace adams::species
