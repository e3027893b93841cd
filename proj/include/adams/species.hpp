#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "adams/combinatorics.hpp"
#include "adams/series.hpp"
#include "adams/spectra.hpp"

namespace adams::species {

enum class SpeciesSource { sigma, pi, linear_orders, exponential, linear_orders_of_p, custom_h, custom_p };
std::string source_name(SpeciesSource s);

/// Dimension data of a connected Hopf monoid H = E o P, through degree M.
/// Both series are exponential and store raw coefficients: h[m] = dim H[m], p[m] = dim P[m].
struct SpeciesProfile {
    RationalSeries h; // h_0 = 1
    RationalSeries p; // p_0 = 0, exp(p) = h
    SpeciesSource source = SpeciesSource::custom_h;

    int max_degree() const { return h.truncation(); }
    std::vector<BigInt> h_dims() const { return integer_coefficients(h); }
    std::vector<BigInt> p_dims() const { return integer_coefficients(p); }
};

// Validates h_0 = 1, integer dimensions and integral nonnegative expmul.
SpeciesProfile species_from_h(const std::vector<BigInt>& h);
SpeciesProfile species_from_p(const std::vector<BigInt>& p, int max_degree);
// H = L o P: h = 1/(1 - p) as exponential series, p_0 = 0.
SpeciesProfile species_linear_orders_of(const std::vector<BigInt>& p, int max_degree);

// "Sigma", "Pi", "L", "E".
SpeciesProfile species_preset(std::string_view name, int max_degree);
std::vector<std::string> species_preset_names();

// expmul(k, m) = m! [s^k t^m] exp(s p(t)); rows k, columns m.
combinatorics::TriangleTable species_expmul(const SpeciesProfile& profile, int M);

spectra::SpectrumFactorization species_char_poly(const SpeciesProfile& profile, const Rational& n, int m);

// Coefficients of 1/h as an exponential series.
spectra::TraceTable species_antipode_trace(const SpeciesProfile& profile, int M);

/// H-structures split by the parity of their number of connected components.
struct AssemblyTable {
    std::vector<BigInt> even;  // h_e(m) = sum over even k of expmul(k, m)
    std::vector<BigInt> odd;   // h_o(m)
    std::vector<BigInt> trace; // h_e(m) - h_o(m)
};

AssemblyTable assembly_trace(const std::vector<BigInt>& p_dims, int M);

} // namespace adams::species
