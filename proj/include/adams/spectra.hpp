#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "adams/combinatorics.hpp"
#include "adams/polynomial.hpp"
#include "adams/rational_function.hpp"
#include "adams/real.hpp"
#include "adams/series.hpp"

namespace adams::spectra {

enum class ProfileSource { given_h, given_g, given_v, preset };
std::string source_name(ProfileSource s);

/// The mutually determined dimension data h (total), g (primitive), and,
/// for cofree profiles, v (alphabet sizes), all through degree M.
struct DimensionProfile {
    std::vector<BigInt> h;                // h_0 = 1, ..., h_M
    std::vector<BigInt> g;                // g_1, ..., g_M
    std::optional<std::vector<BigInt>> v; // v_1, ..., v_M
    ProfileSource source = ProfileSource::given_h;
    std::string preset;
    std::optional<RationalFunction> rational_gf;
    bool realizable = true;

    int max_degree() const noexcept { return static_cast<int>(h.size()) - 1; }
    RationalSeries h_series() const { return series_from_integers(h); }
    // Throws DegreeOutOfRange past M, NotRealizable for forced profiles with negative g.
    void require(int m, bool allow_nonrealizable = false) const;
};

// Builders. Non-realizable data (some g_i < 0) throws NotRealizable unless `force`.
DimensionProfile profile_from_h(std::vector<BigInt> h, bool force = false);
DimensionProfile profile_from_g(std::vector<BigInt> g, int max_degree, bool force = false);
DimensionProfile profile_from_v(std::vector<BigInt> v, int max_degree);
DimensionProfile profile_from_rational(const RationalFunction& f, int max_degree, bool force = false);

// sym, schur_p, qsym, ssym, peak, fibonacci, geometric:r.
DimensionProfile preset_profile(std::string_view name, int max_degree, bool force = false);
std::vector<std::string> preset_names();

/// prod_k (x - n^k)^{mult[k]} for 0 <= k <= m.
struct SpectrumFactorization {
    Rational n;
    int m = 0;
    std::vector<BigInt> mult; // mult[k], k = 0..m

    BigInt degree() const;
    // Distinct eigenvalues with merged multiplicities (n = 0, +-1 collapse factors).
    std::map<Rational, BigInt> eigenvalues() const;
    Polynomial<Rational> expand() const;
    std::string str() const;
};

SpectrumFactorization char_poly_adams(const DimensionProfile& p, const Rational& n, int m);

struct AntipodeSpectrum {
    int m = 0;
    BigInt emul; // eigenvalue +1
    BigInt omul; // eigenvalue -1
    Polynomial<Rational> expand() const;
    std::string str() const;
};

AntipodeSpectrum char_poly_antipode(const DimensionProfile& p, int m);

Rational trace_adams(const DimensionProfile& p, const Rational& n, int m);

// prod_i (1 - n t^i)^{-g_i} truncated at M.
RationalSeries trace_gf(const DimensionProfile& p, const Rational& n, int M);

// h(t^2)/h(t) by series division.
RationalSeries antipode_trace_gf(const DimensionProfile& p, int M);

// Spectrum of S^n for an integer n: identity for even n, the antipode for odd n.
AntipodeSpectrum comp_power_char_poly(const DimensionProfile& p, long n, int m);

// trace(S o Psi_n) = sum_k (-n)^k mul(k, m).
Rational schur_indicator(const DimensionProfile& p, const Rational& n, int m);

enum class TraceRoute { formula, generating_function, oracle };
std::string route_name(TraceRoute r);

struct TraceTable {
    Rational n;
    std::vector<Rational> values; // a_0..a_M
    TraceRoute route = TraceRoute::formula;
};

TraceTable trace_table(const DimensionProfile& p, const Rational& n, int M, TraceRoute route);

struct AsymptoticOptions {
    mpfr_prec_t precision_bits = 128;
    Rational tolerance = Rational(1, BigInt("100000000000000000000")); // 1e-20
    bool throw_on_violation = true;
};

struct HypothesisChecks {
    bool unique_singularity = false; // R is the only pole in |z| <= R^(1/4)
    bool nonvanishing = false;       // h has no zero in |z| <= R^(1/2)
    bool plus_minus_distinct = false; // h(-sqrt R) != +-h(sqrt R)
    bool all() const { return unique_singularity && nonvanishing && plus_minus_distinct; }
};

struct RatioPrediction {
    int m = 0;
    Real predicted;
    Real exact;
    Real relative_error;
};

struct AsymptoticReport {
    Real R;
    bool R_exact = false;
    std::optional<Rational> R_rational;
    int gamma = 0;
    Real h_star;
    Real h_at_sqrt_R;     // h(R^(1/2))
    Real h_at_minus_sqrt_R; // h(-R^(1/2))
    HypothesisChecks checks;
    AsymptoticOptions options;
    std::vector<RatioPrediction> predictions;

    // R^{m/2} / 2^gamma * (1/h(sqrt R) + (-1)^m / h(-sqrt R))
    Real predicted_ratio(int m) const;
};

// Throws HypothesisViolated (naming the failed check) and NotRational when
// the profile has no rational generating function.
AsymptoticReport asymptotic_ratio(const RationalFunction& f, const std::vector<int>& m_eval,
                                  const AsymptoticOptions& options = {});
AsymptoticReport asymptotic_ratio(const DimensionProfile& p, const std::vector<int>& m_eval,
                                  const AsymptoticOptions& options = {});

// All complex roots of a square-free polynomial over Q, refined to `bits`.
std::vector<Complex> complex_roots(const Polynomial<Rational>& p, mpfr_prec_t bits);

} // namespace adams::spectra
