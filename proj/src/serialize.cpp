#include "adams/serialize.hpp"

namespace adams {

Json integers_to_json(const std::vector<BigInt>& values) {
    Json out = Json::array();
    for (const auto& v : values) out.push_back(v.str());
    return out;
}

Json rationals_to_json(const std::vector<Rational>& values) {
    Json out = Json::array();
    for (const auto& v : values) out.push_back(to_string(v));
    return out;
}

Json table_to_json(const combinatorics::TriangleTable& t, int first_row) {
    Json rows = Json::array(), entries = Json::array();
    for (int k = first_row; k <= t.max_degree(); ++k) {
        rows.push_back(k);
        Json row = Json::array();
        for (int m = 0; m <= t.max_degree(); ++m) row.push_back(t(k, m).str());
        entries.push_back(row);
    }
    return {{"max_degree", t.max_degree()}, {"rows_k", rows}, {"entries", entries}};
}

std::string table_to_csv(const combinatorics::TriangleTable& t, int first_row) {
    std::string out = "k\\m";
    for (int m = 0; m <= t.max_degree(); ++m) out += "," + std::to_string(m);
    out += "\n";
    for (int k = first_row; k <= t.max_degree(); ++k) {
        out += std::to_string(k);
        for (int m = 0; m <= t.max_degree(); ++m) out += "," + t(k, m).str();
        out += "\n";
    }
    return out;
}

Json factorization_to_json(const spectra::SpectrumFactorization& f) {
    Json factors = Json::array();
    for (std::size_t k = 0; k < f.mult.size(); ++k)
        if (f.mult[k] != 0) factors.push_back({{"k", k}, {"mult", f.mult[k].str()}});
    Json eigen = Json::array();
    for (const auto& [value, mult] : f.eigenvalues()) eigen.push_back({{"value", to_string(value)}, {"mult", mult.str()}});
    return {{"n", to_string(f.n)}, {"m", f.m}, {"factors", factors}, {"eigenvalues", eigen}, {"degree", f.degree().str()}};
}

Json antipode_spectrum_to_json(const spectra::AntipodeSpectrum& a) {
    return {{"m", a.m}, {"plus_one", a.emul.str()}, {"minus_one", a.omul.str()}};
}

Json qpolynomial_to_json(const QPolynomial& p) {
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms()) terms.push_back({{"exp", e}, {"coef", c.str()}});
    return {{"terms", terms}};
}

Json q_factorization_to_json(const cofree::QSpectrumFactorization& f) {
    Json factors = Json::array();
    for (const auto& x : f.palindromic)
        factors.push_back({{"kind", "linear"}, {"sign", x.sign}, {"q_exp", x.inv}, {"mult", x.mult.str()}});
    for (const auto& x : f.quadratic)
        factors.push_back({{"kind", "quadratic"}, {"sign", 1}, {"q_exp", x.exponent}, {"mult", x.mult.str()}});
    return {{"m", f.m}, {"factors", factors}, {"degree", f.degree().str()}, {"text", f.str()}};
}

Json asymptotic_report_to_json(const spectra::AsymptoticReport& r, int digits) {
    Json preds = Json::array();
    for (const auto& p : r.predictions)
        preds.push_back({{"m", p.m},
                         {"predicted", p.predicted.str(digits)},
                         {"exact", p.exact.str(digits)},
                         {"relative_error", p.relative_error.str(6)}});
    Json out{{"R", r.R.str(digits)},
             {"R_exact", r.R_exact},
             {"gamma", r.gamma},
             {"h_star", r.h_star.str(digits)},
             {"h_at_sqrt_R", r.h_at_sqrt_R.str(digits)},
             {"h_at_minus_sqrt_R", r.h_at_minus_sqrt_R.str(digits)},
             {"hypotheses",
              {{"unique_singularity", r.checks.unique_singularity},
               {"nonvanishing", r.checks.nonvanishing},
               {"plus_minus_distinct", r.checks.plus_minus_distinct}}},
             {"precision_bits", r.options.precision_bits},
             {"tolerance", to_string(r.options.tolerance)},
             {"predictions", preds}};
    if (r.R_rational) out["R_rational"] = to_string(*r.R_rational);
    return out;
}

} // namespace adams
