#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "adams/cofree.hpp"
#include "adams/combinatorics.hpp"
#include "adams/series.hpp"
#include "adams/spectra.hpp"

namespace adams {

using Json = nlohmann::json;

template <class R>
Json series_to_json(const Series<R>& s) {
    Json coeffs = Json::array();
    for (const auto& c : s.coefficients()) coeffs.push_back(RingTraits<R>::str(c));
    return {{"flavor", flavor_name(s.flavor())}, {"truncation", s.truncation()}, {"coeffs", coeffs}};
}

Json integers_to_json(const std::vector<BigInt>& values);
Json rationals_to_json(const std::vector<Rational>& values);

// {"max_degree", "rows_k", "entries"}; entries[r][m] belongs to k = rows_k[r].
Json table_to_json(const combinatorics::TriangleTable& t, int first_row = 0);
// Header "k\m,0,1,...", one line per k.
std::string table_to_csv(const combinatorics::TriangleTable& t, int first_row = 0);

Json factorization_to_json(const spectra::SpectrumFactorization& f);
Json antipode_spectrum_to_json(const spectra::AntipodeSpectrum& a);
Json qpolynomial_to_json(const QPolynomial& p);
Json q_factorization_to_json(const cofree::QSpectrumFactorization& f);
Json asymptotic_report_to_json(const spectra::AsymptoticReport& r, int digits = 30);

} // namespace adams
