#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "adams/cofree.hpp"
#include "adams/errors.hpp"
#include "adams/euler.hpp"
#include "adams/hopf.hpp"
#include "adams/hopf_json.hpp"
#include "adams/species.hpp"
#include "adams/spectra.hpp"
#include "adams/verify.hpp"
#include "cli.hpp"

namespace py = pybind11;
using namespace adams;

namespace {

py::int_ to_py(const BigInt& x) {
    const std::string s = x.str();
    return py::reinterpret_steal<py::int_>(PyLong_FromString(s.c_str(), nullptr, 10));
}

py::object to_py(const Rational& x) {
    // leaked so that no Python object is destroyed after interpreter shutdown
    static auto* fraction = new py::object(py::module_::import("fractions").attr("Fraction"));
    return (*fraction)(to_py(BigInt(numerator(x))), to_py(BigInt(denominator(x))));
}

py::list to_py(const std::vector<BigInt>& xs) {
    py::list out;
    for (const auto& x : xs) out.append(to_py(x));
    return out;
}

py::list to_py(const std::vector<Rational>& xs) {
    py::list out;
    for (const auto& x : xs) out.append(to_py(x));
    return out;
}

BigInt big(const py::handle& h) { return BigInt(py::str(h).cast<std::string>()); }

std::vector<BigInt> bigs(const py::iterable& xs) {
    std::vector<BigInt> out;
    for (auto x : xs) out.push_back(big(x));
    return out;
}

// int, fractions.Fraction or a "p/q" string
Rational rational(const py::handle& h) { return parse_rational(py::str(h).cast<std::string>()); }

py::object from_json(const nlohmann::json& j) {
    static auto* loads = new py::object(py::module_::import("json").attr("loads"));
    return (*loads)(j.dump());
}

py::dict factorization(const spectra::SpectrumFactorization& f) {
    py::dict factors, eigen;
    for (std::size_t k = 0; k < f.mult.size(); ++k)
        if (f.mult[k] != 0) factors[py::int_(k)] = to_py(f.mult[k]);
    for (const auto& [value, mult] : f.eigenvalues()) eigen[to_py(value)] = to_py(mult);
    py::dict out;
    out["n"] = to_py(f.n);
    out["m"] = f.m;
    out["factors"] = factors;
    out["eigenvalues"] = eigen;
    out["text"] = f.str();
    return out;
}

py::dict qpoly(const QPolynomial& p) {
    py::dict out;
    for (const auto& [e, c] : p.terms()) out[py::int_(e)] = to_py(c);
    return out;
}

combinatorics::WeightedAlphabet alphabet(const py::iterable& v) {
    combinatorics::WeightedAlphabet a{bigs(v)};
    a.validate();
    return a;
}

py::list rows(const Matrix<Rational>& a) {
    py::list out;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        py::list row;
        for (std::size_t j = 0; j < a.cols(); ++j) row.append(to_py(a(i, j)));
        out.append(row);
    }
    return out;
}

py::list table_rows(const combinatorics::TriangleTable& t) {
    py::list out;
    for (const auto& row : t.rows()) out.append(to_py(row));
    return out;
}

} // namespace

PYBIND11_MODULE(adams_spectra, m) {
    m.doc() = "Exact spectra of Adams operators on graded connected Hopf algebras";
    py::register_exception<Error>(m, "AdamsError", PyExc_ValueError);

    m.def("euler_transform", [](const py::iterable& g, std::optional<int> order) {
        auto gs = bigs(g);
        return to_py(integer_coefficients(euler_transform(gs, order.value_or(static_cast<int>(gs.size()))), "euler transform"));
    }, py::arg("g"), py::arg("order") = py::none());
    m.def("inverse_euler_transform", [](const py::iterable& h, bool force) {
        return to_py(inverse_euler_transform(bigs(h), force).g);
    }, py::arg("h"), py::arg("allow_nonrealizable") = false);

    py::class_<spectra::DimensionProfile>(m, "Profile")
        .def_static("from_h", [](const py::iterable& h, bool force) { return spectra::profile_from_h(bigs(h), force); },
                    py::arg("h"), py::arg("force") = false)
        .def_static("from_g", [](const py::iterable& g, int M, bool force) { return spectra::profile_from_g(bigs(g), M, force); },
                    py::arg("g"), py::arg("max_degree"), py::arg("force") = false)
        .def_static("from_v", [](const py::iterable& v, int M) { return spectra::profile_from_v(bigs(v), M); },
                    py::arg("v"), py::arg("max_degree"))
        .def_static("preset", [](const std::string& name, int M, bool force) { return spectra::preset_profile(name, M, force); },
                    py::arg("name"), py::arg("max_degree"), py::arg("force") = false)
        .def_property_readonly("h", [](const spectra::DimensionProfile& p) { return to_py(p.h); })
        .def_property_readonly("g", [](const spectra::DimensionProfile& p) { return to_py(p.g); })
        .def_property_readonly("v", [](const spectra::DimensionProfile& p) -> py::object {
            return p.v ? py::object(to_py(*p.v)) : py::none();
        })
        .def_property_readonly("realizable", [](const spectra::DimensionProfile& p) { return p.realizable; })
        .def_property_readonly("max_degree", &spectra::DimensionProfile::max_degree)
        .def("char_poly", [](const spectra::DimensionProfile& p, const py::object& n, int deg) {
            return factorization(spectra::char_poly_adams(p, rational(n), deg));
        }, py::arg("n"), py::arg("m"))
        .def("antipode_spectrum", [](const spectra::DimensionProfile& p, int deg) {
            auto a = spectra::char_poly_antipode(p, deg);
            return py::make_tuple(to_py(a.emul), to_py(a.omul));
        }, py::arg("m"))
        .def("trace", [](const spectra::DimensionProfile& p, const py::object& n, int deg) {
            return to_py(spectra::trace_adams(p, rational(n), deg));
        }, py::arg("n"), py::arg("m"))
        .def("traces", [](const spectra::DimensionProfile& p, const py::object& n, int M, const std::string& route) {
            auto r = route == "gf" ? spectra::TraceRoute::generating_function : spectra::TraceRoute::formula;
            return to_py(spectra::trace_table(p, rational(n), M, r).values);
        }, py::arg("n"), py::arg("max_degree"), py::arg("route") = "formula")
        .def("antipode_trace_gf", [](const spectra::DimensionProfile& p, int M) {
            return to_py(spectra::antipode_trace_gf(p, M).coefficients());
        }, py::arg("max_degree"))
        .def("schur_indicator", [](const spectra::DimensionProfile& p, const py::object& n, int deg) {
            return to_py(spectra::schur_indicator(p, rational(n), deg));
        }, py::arg("n"), py::arg("m"))
        .def("asymptotic_ratio", [](const spectra::DimensionProfile& p, const std::vector<int>& ms, long bits) {
            spectra::AsymptoticOptions o;
            o.precision_bits = bits;
            auto r = spectra::asymptotic_ratio(p, ms, o);
            py::dict out;
            out["R"] = py::float_(std::stod(r.R.str(20)));
            out["gamma"] = r.gamma;
            py::list preds;
            for (const auto& x : r.predictions)
                preds.append(py::make_tuple(x.m, x.predicted.str(30), x.exact.str(30), std::stod(x.relative_error.str(6))));
            out["predictions"] = preds;
            return out;
        }, py::arg("m"), py::arg("precision_bits") = 128);

    m.def("pal_table", [](const py::iterable& v, int M) { return table_rows(combinatorics::pal_table(alphabet(v), M).pal); },
          py::arg("v"), py::arg("max_degree"));
    m.def("mul_table", [](const py::iterable& g, int M) { return table_rows(combinatorics::mul_table(bigs(g), M)); },
          py::arg("g"), py::arg("max_degree"));
    m.def("witt_counts", [](const py::iterable& v, int N) { return to_py(combinatorics::witt_counts(alphabet(v), N)); },
          py::arg("v"), py::arg("max_degree"));
    m.def("cofree_trace", [](const py::iterable& v, int deg) { return to_py(cofree::cofree_trace(alphabet(v), deg)); },
          py::arg("v"), py::arg("m"));
    m.def("q_char_poly", [](const py::iterable& v, int deg) { return cofree::q_char_poly(alphabet(v), deg).str(); },
          py::arg("v"), py::arg("m"));
    m.def("q_trace", [](const py::iterable& v, int deg) { return qpoly(cofree::q_trace(alphabet(v), deg)); },
          py::arg("v"), py::arg("m"));
    m.def("q_trace_at", [](const py::iterable& v, int deg, const py::object& q) {
        auto t = cofree::q_trace_at(alphabet(v), deg, rational(q));
        return py::make_tuple(to_py(t.value), t.gf_normalization_defined);
    }, py::arg("v"), py::arg("m"), py::arg("q"));

    m.def("species_antipode_trace", [](const std::string& preset, int M) {
        return to_py(species::species_antipode_trace(species::species_preset(preset, M), M).values);
    }, py::arg("preset"), py::arg("max_degree"));
    m.def("species_expmul", [](const std::string& preset, int M) {
        return table_rows(species::species_expmul(species::species_preset(preset, M), M));
    }, py::arg("preset"), py::arg("max_degree"));

    py::class_<hopf::RationalInstance>(m, "HopfInstance")
        .def_static("shuffle", [](const py::iterable& v, int M) { return hopf::build_shuffle(alphabet(v), Rational(1), M); },
                    py::arg("v"), py::arg("max_degree"))
        .def_static("sym_powersum", [](int M) { return hopf::build_sym_powersum(M); }, py::arg("max_degree"))
        .def_static("qsym_monomial", [](int M) { return hopf::build_qsym_monomial(M); }, py::arg("max_degree"))
        .def_property_readonly("name", &hopf::RationalInstance::name)
        .def_property_readonly("max_degree", &hopf::RationalInstance::max_degree)
        .def("dimensions", [](const hopf::RationalInstance& i) { return to_py(i.dimensions()); })
        .def("labels", &hopf::RationalInstance::labels, py::arg("m"))
        .def("adams_matrix", [](const hopf::RationalInstance& i, const py::object& n, int deg) {
            return rows(hopf::adams_matrix(i, rational(n), deg));
        }, py::arg("n"), py::arg("m"))
        .def("antipode_matrix", [](const hopf::RationalInstance& i, int deg) { return rows(hopf::antipode_matrix(i, deg)); },
             py::arg("m"))
        .def("adams_char_poly", [](const hopf::RationalInstance& i, const py::object& n, int deg) {
            return to_py(char_poly_exact(hopf::adams_matrix(i, rational(n), deg)).coefficients());
        }, py::arg("n"), py::arg("m"), "coefficients, constant term first")
        .def("to_json", [](const hopf::RationalInstance& i) { return from_json(hopf::instance_to_json(i)); });

    m.def("verify", [](const std::string& suite, std::optional<int> max_degree, std::optional<py::iterable> n,
                       std::optional<py::iterable> v) {
        verify::VerifyBounds b;
        b.max_degree = max_degree;
        if (n) {
            std::vector<Rational> ns;
            for (auto x : *n) ns.push_back(rational(x));
            b.n_values = ns;
        }
        if (v) b.alphabet = alphabet(*v);
        return from_json(verify::run_suite(suite, b).to_json());
    }, py::arg("suite"), py::arg("max_degree") = py::none(), py::arg("n") = py::none(), py::arg("alphabet") = py::none());

    m.def("run_cli", [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code = cli::run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
    }, py::arg("args"));
}
