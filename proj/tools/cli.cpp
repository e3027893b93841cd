#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "adams/cofree.hpp"
#include "adams/combinatorics.hpp"
#include "adams/errors.hpp"
#include "adams/euler.hpp"
#include "adams/oeis.hpp"
#include "adams/serialize.hpp"
#include "adams/species.hpp"
#include "adams/spectra.hpp"
#include "adams/verify.hpp"

namespace adams::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string trim(std::string s) {
    auto b = s.find_first_not_of(" \t\r\n,");
    auto e = s.find_last_not_of(" \t\r\n,");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

// Inline comma list, or "@path" naming a file of comma/whitespace separated values.
std::string list_text(const std::string& raw) {
    if (raw.empty() || raw[0] != '@') return trim(raw);
    std::ifstream in(raw.substr(1));
    if (!in) throw Error(Errc::InvalidArgument, "cannot read " + raw.substr(1));
    std::ostringstream ss;
    ss << in.rdbuf();
    std::string text = ss.str();
    std::replace_if(text.begin(), text.end(), [](char c) { return c == '\n' || c == '\r' || c == '\t' || c == ' '; }, ',');
    std::string squeezed;
    for (char c : text)
        if (c != ',' || (!squeezed.empty() && squeezed.back() != ',')) squeezed += c;
    return trim(squeezed);
}

std::vector<BigInt> integers(const std::string& raw) {
    auto text = list_text(raw);
    return text.empty() ? std::vector<BigInt>{} : parse_integer_list(text);
}

std::vector<Rational> rationals(const std::string& raw) {
    auto text = list_text(raw);
    return text.empty() ? std::vector<Rational>{} : parse_rational_list(text);
}

// "1e-20", "0.001", "1/1000"
Rational parse_tolerance(const std::string& text) {
    if (text.find_first_of("eE.") == std::string::npos) return parse_rational(text);
    std::string mant = text, expo = "0";
    if (auto e = text.find_first_of("eE"); e != std::string::npos) {
        mant = text.substr(0, e);
        expo = text.substr(e + 1);
    }
    long exponent = 0;
    try {
        exponent = std::stol(expo);
    } catch (const std::exception&) {
        throw Error(Errc::ParseError, "bad tolerance '" + text + "'");
    }
    std::string digits;
    long frac = 0;
    bool dot = false;
    for (char c : mant) {
        if (c == '.') {
            dot = true;
        } else {
            digits += c;
            if (dot) ++frac;
        }
    }
    Rational value = parse_rational(digits.empty() ? "0" : digits);
    exponent -= frac;
    return exponent >= 0 ? value * pow(Rational(10), exponent) : value / pow(Rational(10), -exponent);
}

enum class Format { json, csv, text };

Format format_of(const std::string& s) {
    if (s == "json") return Format::json;
    if (s == "csv") return Format::csv;
    return Format::text;
}

std::string csv_list(const std::vector<std::string>& values, const std::string& index_name, int first = 0) {
    std::string out = index_name + ",value\n";
    for (std::size_t i = 0; i < values.size(); ++i) out += std::to_string(first + static_cast<int>(i)) + "," + values[i] + "\n";
    return out;
}

template <class T>
std::vector<std::string> strings(const std::vector<T>& values) {
    std::vector<std::string> out;
    for (const auto& v : values) out.push_back(to_string(v));
    return out;
}

std::string comma(const std::vector<std::string>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) out += (i ? "," : "") + values[i];
    return out;
}

struct Output {
    std::ostream& out;
    Format format;
    std::string command;

    void emit(json j, const std::string& text, const std::optional<std::string>& csv = std::nullopt) const {
        if (format == Format::json) {
            j["schema"] = 1;
            j["command"] = command;
            out << j.dump(2) << "\n";
        } else if (format == Format::csv) {
            out << csv.value_or(text + "\n");
        } else {
            out << text << "\n";
        }
    }
};

struct ProfileArgs {
    std::string preset, h, g, v;
    std::optional<int> max_degree;
    bool force = false;

    void attach(CLI::App* sub, bool with_max_degree = true) {
        sub->add_option("--preset", preset, "sym, schur_p, qsym, ssym, peak, fibonacci, geometric:r");
        sub->add_option("--h", h, "dimensions h_0,h_1,... (or @file)");
        sub->add_option("--g", g, "primitive dimensions g_1,g_2,... (or @file)");
        sub->add_option("--v", v, "alphabet sizes v_1,v_2,... (or @file)");
        if (with_max_degree) sub->add_option("--max-degree", max_degree, "largest degree")->check(CLI::NonNegativeNumber);
        sub->add_flag("--force-nonrealizable", force, "accept negative g for formal computation");
    }

    bool given() const { return !preset.empty() || !h.empty() || !g.empty() || !v.empty(); }

    spectra::DimensionProfile build(int need) const {
        const int sources = !preset.empty() + !h.empty() + !g.empty() + !v.empty();
        if (sources != 1) throw UsageError("exactly one of --preset, --h, --g, --v is required");
        const int M = std::max(need, max_degree.value_or(need));
        if (!preset.empty()) return spectra::preset_profile(preset, M, force);
        if (!h.empty()) return spectra::profile_from_h(integers(h), force);
        if (!g.empty()) {
            auto gs = integers(g);
            return spectra::profile_from_g(gs, max_degree ? M : std::max(need, static_cast<int>(gs.size())), force);
        }
        auto vs = integers(v);
        return spectra::profile_from_v(vs, max_degree ? M : std::max(need, static_cast<int>(vs.size())));
    }
};

json profile_json(const spectra::DimensionProfile& p) {
    json j{{"source", spectra::source_name(p.source)},
           {"max_degree", p.max_degree()},
           {"h", integers_to_json(p.h)},
           {"g", integers_to_json(p.g)},
           {"realizable", p.realizable}};
    j["v"] = p.v ? integers_to_json(*p.v) : json(nullptr);
    if (!p.preset.empty()) j["preset"] = p.preset;
    return j;
}

combinatorics::WeightedAlphabet alphabet_of(const std::string& raw) {
    combinatorics::WeightedAlphabet a{integers(raw)};
    a.validate();
    return a;
}

int require_degree(const std::optional<int>& m, const char* flag) {
    if (!m) throw UsageError(std::string(flag) + " is required");
    return *m;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Adams operator spectra from dimension data", "adams-spectra"};
    app.require_subcommand(1);
    app.set_help_flag("--help", "print help");
    app.set_help_all_flag("--help-all");

    std::string format = "text";
    app.add_option("--format", format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));

    // euler
    auto* euler = app.add_subcommand("euler", "Euler transform and its inverse");
    std::string direction, e_g, e_h;
    std::optional<int> e_max;
    bool e_force = false;
    euler->add_option("direction", direction, "forward or invert")->required()->check(CLI::IsMember({"forward", "invert"}));
    euler->add_option("--g", e_g, "g_1,g_2,... for forward");
    euler->add_option("--h", e_h, "h_0,h_1,... for invert");
    euler->add_option("--max-degree", e_max)->check(CLI::NonNegativeNumber);
    euler->add_flag("--force-nonrealizable", e_force);

    // charpoly
    auto* charpoly = app.add_subcommand("charpoly", "factored characteristic polynomial of the Adams operator");
    ProfileArgs cp_prof;
    cp_prof.attach(charpoly);
    std::string cp_n;
    std::optional<int> cp_m;
    charpoly->add_option("--n", cp_n, "scalar n (rational p/q)")->required();
    charpoly->add_option("--m", cp_m, "degree")->check(CLI::NonNegativeNumber);

    // trace
    auto* trace = app.add_subcommand("trace", "traces of the Adams operator for m = 0..M");
    ProfileArgs tr_prof;
    tr_prof.attach(trace, false);
    std::string tr_n, route = "formula";
    std::optional<int> tr_max;
    trace->add_option("--n", tr_n, "scalar n (rational p/q)")->required();
    trace->add_option("--max-degree,--m", tr_max)->check(CLI::NonNegativeNumber);
    trace->add_option("--route", route, "formula, gf or palindromes")->check(CLI::IsMember({"formula", "gf", "palindromes"}));

    // tracegf
    auto* tracegf = app.add_subcommand("tracegf", "trace generating function");
    ProfileArgs tg_prof;
    tg_prof.attach(tracegf, false);
    std::string tg_n = "-1";
    std::optional<int> tg_max;
    bool tg_antipode = false;
    tracegf->add_option("--n", tg_n, "scalar n (rational p/q)");
    tracegf->add_option("--max-degree,--m", tg_max)->check(CLI::NonNegativeNumber);
    tracegf->add_flag("--antipode", tg_antipode, "use h(t^2)/h(t)");

    // palindromes
    auto* palindromes = app.add_subcommand("palindromes", "pal(k, m) for a weighted alphabet");
    std::string pal_v;
    std::optional<int> pal_max;
    palindromes->add_option("--v", pal_v, "alphabet sizes v_1,v_2,...")->required();
    palindromes->add_option("--max-degree,--m", pal_max)->check(CLI::NonNegativeNumber);

    // qtrace
    auto* qtrace = app.add_subcommand("qtrace", "q-antipode trace and spectrum on the q-shuffle algebra");
    std::string qt_v, qt_q = "symbolic";
    std::optional<int> qt_m;
    bool qt_charpoly = false;
    qtrace->add_option("--v", qt_v, "alphabet sizes v_1,v_2,...")->required();
    qtrace->add_option("--m", qt_m, "degree")->check(CLI::NonNegativeNumber);
    qtrace->add_option("--q", qt_q, "\"symbolic\" or a rational");
    qtrace->add_flag("--charpoly", qt_charpoly, "print the factored characteristic polynomial");

    // witt
    auto* witt = app.add_subcommand("witt", "Lyndon word counts by weight");
    std::string w_v;
    std::optional<int> w_max;
    witt->add_option("--v", w_v, "alphabet sizes v_1,v_2,...")->required();
    witt->add_option("--max-degree,--m", w_max)->check(CLI::NonNegativeNumber);

    // species
    auto* species_cmd = app.add_subcommand("species", "species (Hopf monoid) spectra from exponential dimension data");
    std::string sp_preset, sp_h, sp_p, sp_table = "trace", sp_n = "-1";
    std::optional<int> sp_max, sp_m;
    species_cmd->add_option("--preset", sp_preset, "Sigma, Pi, L or E");
    species_cmd->add_option("--h", sp_h, "dim H[m], m = 0..M");
    species_cmd->add_option("--p", sp_p, "dim P[m], m = 0..M with p_0 = 0");
    species_cmd->add_option("--max-degree", sp_max)->check(CLI::NonNegativeNumber);
    species_cmd->add_option("--table", sp_table, "expmul, trace, assembly or charpoly")
        ->check(CLI::IsMember({"expmul", "trace", "assembly", "charpoly"}));
    species_cmd->add_option("--n", sp_n, "scalar for --table charpoly");
    species_cmd->add_option("--m", sp_m, "degree for --table charpoly")->check(CLI::NonNegativeNumber);

    // asym
    auto* asym = app.add_subcommand("asym", "asymptotic antipode trace ratio for a rational h(t)");
    std::string as_preset, as_num, as_den, as_m = "10,20,40", as_tol = "1e-20";
    long as_bits = 128;
    bool as_lax = false;
    asym->add_option("--preset", as_preset);
    asym->add_option("--num", as_num, "numerator coefficients, constant term first");
    asym->add_option("--den", as_den, "denominator coefficients, constant term first");
    asym->add_option("--m", as_m, "degrees to evaluate");
    asym->add_option("--precision-bits", as_bits)->check(CLI::Range(32L, 1L << 20));
    asym->add_option("--tolerance", as_tol);
    asym->add_flag("--lax", as_lax, "report failed hypotheses instead of failing");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    std::string vf_suite, vf_alphabet;
    std::optional<std::string> vf_n;
    std::optional<int> vf_max;
    verify_cmd->add_option("--suite", vf_suite)->required()->check(CLI::IsMember(verify::suite_names()));
    verify_cmd->add_option("--alphabet", vf_alphabet, "alphabet sizes v_1,v_2,...");
    verify_cmd->add_option("--max-degree,--m", vf_max)->check(CLI::NonNegativeNumber);
    verify_cmd->add_option("--n", vf_n, "scalars n; an empty list runs nothing");

    // oeis
    auto* oeis_cmd = app.add_subcommand("oeis", "compare values with an OEIS entry");
    std::string oe_id, oe_values, oe_seq = "h", oe_cache, oe_import;
    std::optional<long> oe_first;
    bool oe_network = false;
    ProfileArgs oe_prof;
    oeis_cmd->add_option("id", oe_id, "A-number")->required();
    oeis_cmd->add_option("--values", oe_values, "values to compare");
    oe_prof.attach(oeis_cmd);
    oeis_cmd->add_option("--sequence", oe_seq, "h, g or v of the profile")->check(CLI::IsMember({"h", "g", "v"}));
    oeis_cmd->add_option("--first-index", oe_first, "OEIS index of the first value");
    oeis_cmd->add_option("--cache-dir", oe_cache, "cache directory (default $ADAMS_SPECTRA_CACHE)");
    oeis_cmd->add_flag("--allow-network", oe_network, "fetch uncached entries from oeis.org");
    oeis_cmd->add_option("--import", oe_import, "store a local b-file in the cache first");

    for (auto* sub : app.get_subcommands({}))
        sub->add_option("--format", format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n\n" << app.help();
        return 2;
    }

    const Format fmt = format_of(format);
    auto* active = app.get_subcommands().front();
    const Output o{out, fmt, active->get_name()};

    std::string input = "adams-spectra";
    for (const auto& a : args) input += " " + a;

    try {
        if (active == euler) {
            if (direction == "forward") {
                if (e_g.empty()) throw UsageError("euler forward needs --g");
                auto g = integers(e_g);
                const int M = e_max.value_or(static_cast<int>(g.size()));
                auto h = integer_coefficients(euler_transform(g, M), "euler transform");
                o.emit({{"direction", "forward"}, {"input", integers_to_json(g)}, {"result", integers_to_json(h)}},
                       comma(strings(h)), csv_list(strings(h), "m"));
            } else {
                if (e_h.empty()) throw UsageError("euler invert needs --h");
                auto h = integers(e_h);
                auto inv = inverse_euler_transform(h, e_force);
                o.emit({{"direction", "invert"},
                        {"input", integers_to_json(h)},
                        {"result", integers_to_json(inv.g)},
                        {"realizable", inv.realizable}},
                       comma(strings(inv.g)), csv_list(strings(inv.g), "i", 1));
            }
        } else if (active == charpoly) {
            const int m = require_degree(cp_m, "--m");
            const Rational n = parse_rational(cp_n);
            auto p = cp_prof.build(m);
            auto f = spectra::char_poly_adams(p, n, m);
            json j = factorization_to_json(f);
            j["profile"] = profile_json(p);
            std::string csv = "eigenvalue,multiplicity\n";
            for (const auto& [value, mult] : f.eigenvalues()) csv += to_string(value) + "," + mult.str() + "\n";
            o.emit(j, f.str(), csv);
        } else if (active == trace) {
            const int M = require_degree(tr_max, "--max-degree");
            const Rational n = parse_rational(tr_n);
            auto p = tr_prof.build(M);
            std::vector<Rational> values;
            if (route == "palindromes") {
                if (n != -1) throw Error(Errc::NotApplicable, "the palindrome route computes the antipode (n = -1) only");
                if (!p.v) throw Error(Errc::NotApplicable, "the palindrome route needs a cofree profile with an alphabet v");
                combinatorics::WeightedAlphabet a{*p.v};
                for (int m = 0; m <= M; ++m) values.emplace_back(cofree::cofree_trace(a, m));
            } else {
                auto t = spectra::trace_table(p, n, M, route == "gf" ? spectra::TraceRoute::generating_function : spectra::TraceRoute::formula);
                values = t.values;
            }
            o.emit({{"n", to_string(n)}, {"max_degree", M}, {"route", route}, {"values", rationals_to_json(values)}, {"profile", profile_json(p)}},
                   comma(strings(values)), csv_list(strings(values), "m"));
        } else if (active == tracegf) {
            const int M = require_degree(tg_max, "--max-degree");
            auto p = tg_prof.build(M);
            const Rational n = parse_rational(tg_n);
            auto s = tg_antipode ? spectra::antipode_trace_gf(p, M) : spectra::trace_gf(p, n, M);
            json j{{"n", tg_antipode ? std::string("-1") : to_string(n)}, {"series", series_to_json(s)}, {"profile", profile_json(p)}};
            o.emit(j, comma(strings(s.coefficients())), csv_list(strings(s.coefficients()), "m"));
        } else if (active == palindromes) {
            const int M = require_degree(pal_max, "--max-degree");
            auto a = alphabet_of(pal_v);
            auto t = combinatorics::pal_table(a, M);
            json j = table_to_json(t.pal);
            j["alphabet"] = integers_to_json(a.counts);
            j["total"] = integers_to_json(t.total);
            j["even"] = integers_to_json(t.even);
            j["odd"] = integers_to_json(t.odd);
            j["nonpal"] = integers_to_json(t.nonpal);
            j["words"] = integers_to_json(t.words);
            auto csv = table_to_csv(t.pal);
            o.emit(j, csv.substr(0, csv.size() - 1), csv);
        } else if (active == qtrace) {
            const int m = require_degree(qt_m, "--m");
            auto a = alphabet_of(qt_v);
            json j{{"m", m}, {"alphabet", integers_to_json(a.counts)}, {"q", qt_q}};
            if (qt_q == "symbolic") {
                if (qt_charpoly) {
                    auto f = cofree::q_char_poly(a, m);
                    j["charpoly"] = q_factorization_to_json(f);
                    o.emit(j, f.str());
                } else {
                    auto t = cofree::q_trace(a, m);
                    j["trace"] = qpolynomial_to_json(t);
                    o.emit(j, t.str());
                }
            } else {
                const Rational q = parse_rational(qt_q);
                if (qt_charpoly) {
                    auto poly = cofree::q_char_poly(a, m).specialize(q);
                    j["charpoly"] = rationals_to_json(poly.coefficients());
                    o.emit(j, poly.str());
                } else {
                    auto t = cofree::q_trace_at(a, m, q);
                    j["trace"] = to_string(t.value);
                    j["gf_normalization_defined"] = t.gf_normalization_defined;
                    o.emit(j, to_string(t.value) + (t.gf_normalization_defined ? "" : " (generating-function normalization undefined at q = 0)"));
                }
            }
        } else if (active == witt) {
            const int N = require_degree(w_max, "--max-degree");
            auto a = alphabet_of(w_v);
            auto g = combinatorics::witt_counts(a, N);
            o.emit({{"alphabet", integers_to_json(a.counts)}, {"max_degree", N}, {"lyndon", integers_to_json(g)}},
                   comma(strings(g)), csv_list(strings(g), "n", 1));
        } else if (active == species_cmd) {
            const int sources = !sp_preset.empty() + !sp_h.empty() + !sp_p.empty();
            if (sources != 1) throw UsageError("exactly one of --preset, --h, --p is required");
            int M = sp_max.value_or(std::max(sp_m.value_or(0), 8));
            if (sp_table == "charpoly") M = std::max(M, require_degree(sp_m, "--m"));
            auto prof = [&] {
                if (!sp_preset.empty()) return species::species_preset(sp_preset, M);
                if (!sp_h.empty()) {
                    auto built = species::species_from_h(integers(sp_h));
                    M = sp_max.value_or(built.max_degree());
                    return built;
                }
                auto p = integers(sp_p);
                if (p.empty()) throw UsageError("--p is empty");
                M = sp_max.value_or(static_cast<int>(p.size()) - 1);
                return species::species_from_p(p, M);
            }();
            json j{{"source", species::source_name(prof.source)},
                   {"h", integers_to_json(prof.h_dims())},
                   {"p", integers_to_json(prof.p_dims())},
                   {"table", sp_table}};
            if (sp_table == "expmul") {
                auto t = species::species_expmul(prof, M);
                j["expmul"] = table_to_json(t);
                auto csv = table_to_csv(t);
                o.emit(j, csv.substr(0, csv.size() - 1), csv);
            } else if (sp_table == "trace") {
                auto t = species::species_antipode_trace(prof, M);
                j["values"] = rationals_to_json(t.values);
                o.emit(j, comma(strings(t.values)), csv_list(strings(t.values), "m"));
            } else if (sp_table == "assembly") {
                auto a = species::assembly_trace(prof.p_dims(), M);
                j["even"] = integers_to_json(a.even);
                j["odd"] = integers_to_json(a.odd);
                j["values"] = integers_to_json(a.trace);
                std::string csv = "m,even,odd,trace\n";
                for (int m = 0; m <= M; ++m)
                    csv += std::to_string(m) + "," + a.even[m].str() + "," + a.odd[m].str() + "," + a.trace[m].str() + "\n";
                o.emit(j, comma(strings(a.trace)), csv);
            } else {
                auto f = species::species_char_poly(prof, parse_rational(sp_n), *sp_m);
                j["charpoly"] = factorization_to_json(f);
                o.emit(j, f.str());
            }
        } else if (active == asym) {
            auto ms_r = rationals(as_m);
            std::vector<int> ms;
            for (const auto& r : ms_r) {
                if (!is_integer(r) || r < 0) throw UsageError("--m takes nonnegative integers");
                ms.push_back(static_cast<int>(to_integer(r)));
            }
            spectra::AsymptoticOptions opts;
            opts.precision_bits = as_bits;
            opts.tolerance = parse_tolerance(as_tol);
            opts.throw_on_violation = !as_lax;
            spectra::AsymptoticReport r;
            if (!as_preset.empty()) {
                if (!as_num.empty() || !as_den.empty()) throw UsageError("--preset excludes --num/--den");
                const int M = ms.empty() ? 0 : *std::max_element(ms.begin(), ms.end());
                r = spectra::asymptotic_ratio(spectra::preset_profile(as_preset, M), ms, opts);
            } else {
                if (as_num.empty() || as_den.empty()) throw UsageError("give --preset or both --num and --den");
                r = spectra::asymptotic_ratio(RationalFunction(Polynomial<Rational>(rationals(as_num)), Polynomial<Rational>(rationals(as_den))), ms, opts);
            }
            std::string text = "R = " + r.R.str(20) + ", gamma = " + std::to_string(r.gamma);
            std::string csv = "m,predicted,exact,relative_error\n";
            for (const auto& p : r.predictions) {
                text += "\nm = " + std::to_string(p.m) + ": predicted " + p.predicted.str(20) + ", exact " + p.exact.str(20) +
                        ", relative error " + p.relative_error.str(6);
                csv += std::to_string(p.m) + "," + p.predicted.str(30) + "," + p.exact.str(30) + "," + p.relative_error.str(6) + "\n";
            }
            if (!r.checks.all()) text += "\nwarning: hypotheses not satisfied";
            o.emit(asymptotic_report_to_json(r), text, csv);
        } else if (active == verify_cmd) {
            verify::VerifyBounds b;
            b.max_degree = vf_max;
            if (vf_n) b.n_values = rationals(*vf_n);
            if (!vf_alphabet.empty()) b.alphabet = alphabet_of(vf_alphabet);
            auto report = verify::run_suite(vf_suite, b);
            std::string text = std::string(report.passed() ? "PASS" : "FAIL") + " " + report.suite + ": " +
                               std::to_string(report.checks.size() - report.failures()) + "/" + std::to_string(report.checks.size()) +
                               " checks passed";
            std::string csv = "check,passed\n";
            for (const auto& c : report.checks) {
                csv += c.name + "," + (c.passed ? "true" : "false") + "\n";
                if (!c.passed) text += "\n  failed " + c.name + ": " + c.detail.dump();
            }
            o.emit(report.to_json(), text, csv);
            return report.passed() ? 0 : 1;
        } else if (active == oeis_cmd) {
            oeis::Client client(oe_cache.empty() ? oeis::default_cache_dir() : std::filesystem::path(oe_cache), oe_network);
            if (!oe_import.empty()) {
                std::ifstream in(oe_import, std::ios::binary);
                if (!in) throw Error(Errc::InvalidArgument, "cannot read " + oe_import);
                std::ostringstream ss;
                ss << in.rdbuf();
                client.store(oe_id, ss.str(), "imported");
            }
            std::vector<BigInt> values;
            std::optional<long> first = oe_first;
            if (!oe_values.empty()) {
                if (oe_prof.given()) throw UsageError("--values excludes profile options");
                values = integers(oe_values);
            } else if (oe_prof.given()) {
                auto p = oe_prof.build(oe_prof.max_degree.value_or(10));
                if (oe_seq == "h") {
                    values = p.h;
                    if (!first) first = 0;
                } else if (oe_seq == "g") {
                    values = p.g;
                    if (!first) first = 1;
                } else {
                    if (!p.v) throw Error(Errc::NotApplicable, "this profile has no alphabet v");
                    values = *p.v;
                    if (!first) first = 1;
                }
            } else {
                throw UsageError("give --values or a profile");
            }
            auto rec = client.lookup(oe_id);
            auto m = oeis::check(rec, values, first);
            json j{{"id", m.id},
                   {"match", m.match},
                   {"compared", m.compared},
                   {"first_index", m.first_index},
                   {"offline", rec.offline},
                   {"fetched_at", rec.fetched_at}};
            std::string text = std::string(m.match ? "match " : "mismatch ") + m.id + " (" + std::to_string(m.compared) + " terms from index " +
                               std::to_string(m.first_index) + ")";
            if (m.mismatch_index) {
                j["mismatch"] = {{"index", *m.mismatch_index}, {"expected", m.expected->str()}, {"actual", m.actual->str()}};
                text += ": a(" + std::to_string(*m.mismatch_index) + ") = " + m.expected->str() + ", computed " + m.actual->str();
            }
            o.emit(j, text);
            return m.match ? 0 : 1;
        }
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n\n" << active->help();
        return 2;
    } catch (const Error& e) {
        const std::string name(errc_name(e.code()));
        if (fmt == Format::json)
            out << json{{"schema", 1}, {"command", active->get_name()}, {"error", {{"name", name}, {"message", e.what()}, {"input", input}}}}.dump(2)
                << "\n";
        err << "error: " << e.what() << "\n  input: " << input << "\n";
        return 1;
    } catch (const std::filesystem::filesystem_error& e) {
        err << "error: " << e.what() << "\n  input: " << input << "\n";
        return 1;
    }
    return 0;
}

} // namespace adams::cli
