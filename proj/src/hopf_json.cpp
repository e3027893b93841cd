#include "adams/hopf_json.hpp"

#include "adams/errors.hpp"

namespace adams::hopf {

template <class R>
nlohmann::json instance_to_json(const HopfInstance<R>& inst) {
    using Traits = RingTraits<R>;
    nlohmann::json out;
    out["schema"] = 1;
    out["kind"] = "hopf_instance";
    out["ring"] = std::string(Traits::name);
    out["name"] = inst.name();
    out["braid_q"] = Traits::str(inst.braid_q());
    const int M = inst.max_degree();
    out["basis"] = nlohmann::json::array();
    for (int m = 0; m <= M; ++m) out["basis"].push_back(inst.labels(m));
    out["product"] = nlohmann::json::array();
    for (int p = 0; p <= M; ++p)
        for (int r = 0; p + r <= M; ++r)
            for (std::size_t i = 0; i < inst.dim(p); ++i)
                for (std::size_t j = 0; j < inst.dim(r); ++j)
                    for (const auto& e : inst.product(p, i, r, j))
                        out["product"].push_back({p, i, r, j, e.index, Traits::str(e.coeff)});
    out["coproduct"] = nlohmann::json::array();
    for (int m = 0; m <= M; ++m)
        for (std::size_t k = 0; k < inst.dim(m); ++k)
            for (const auto& t : inst.coproduct(m, k)) out["coproduct"].push_back({m, k, t.p, t.i, t.j, Traits::str(t.coeff)});
    return out;
}

std::string instance_ring(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("ring") || !j["ring"].is_string())
        throw Error(Errc::ParseError, "hopf instance JSON lacks a \"ring\" string");
    return j["ring"].get<std::string>();
}

template <class R>
HopfInstance<R> instance_from_json(const nlohmann::json& j, bool verify) {
    using Traits = RingTraits<R>;
    try {
        if (j.at("schema").get<int>() != 1) throw Error(Errc::ParseError, "unsupported schema " + j.at("schema").dump());
        if (j.at("kind").get<std::string>() != "hopf_instance") throw Error(Errc::ParseError, "not a hopf_instance document");
        if (instance_ring(j) != Traits::name)
            throw Error(Errc::RingMismatch, "instance ring '" + instance_ring(j) + "' but '" + std::string(Traits::name) + "' requested");
        auto basis = j.at("basis").get<std::vector<std::vector<std::string>>>();
        HopfInstance<R> inst(j.at("name").get<std::string>(), basis, Traits::parse(j.at("braid_q").get<std::string>()));
        const int M = inst.max_degree();
        auto check_degree = [M](long d) {
            if (d < 0 || d > M) throw Error(Errc::ParseError, "degree " + std::to_string(d) + " out of range");
        };
        std::map<std::tuple<int, std::size_t, int, std::size_t>, std::vector<SparseEntry<R>>> products;
        for (const auto& row : j.at("product")) {
            int p = row.at(0).get<int>(), r = row.at(2).get<int>();
            check_degree(p);
            check_degree(r);
            check_degree(p + r);
            auto i = row.at(1).get<std::size_t>(), jj = row.at(3).get<std::size_t>(), k = row.at(4).get<std::size_t>();
            if (i >= inst.dim(p) || jj >= inst.dim(r)) throw Error(Errc::ParseError, "product index out of range");
            products[{p, i, r, jj}].push_back({k, Traits::parse(row.at(5).get<std::string>())});
        }
        for (auto& [key, entries] : products)
            inst.set_product(std::get<0>(key), std::get<1>(key), std::get<2>(key), std::get<3>(key), std::move(entries));
        std::map<std::pair<int, std::size_t>, std::vector<CoproductTerm<R>>> coproducts;
        for (const auto& row : j.at("coproduct")) {
            int m = row.at(0).get<int>(), p = row.at(2).get<int>();
            check_degree(m);
            auto k = row.at(1).get<std::size_t>();
            if (k >= inst.dim(m)) throw Error(Errc::ParseError, "coproduct index out of range");
            coproducts[{m, k}].push_back({p, row.at(3).get<std::size_t>(), row.at(4).get<std::size_t>(),
                                          Traits::parse(row.at(5).get<std::string>())});
        }
        for (auto& [key, terms] : coproducts) inst.set_coproduct(key.first, key.second, std::move(terms));
        if (verify) inst.verify_axioms();
        return inst;
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::ParseError, std::string("hopf instance JSON: ") + e.what());
    }
}

template nlohmann::json instance_to_json(const HopfInstance<Rational>&);
template nlohmann::json instance_to_json(const HopfInstance<LaurentPoly>&);
template HopfInstance<Rational> instance_from_json(const nlohmann::json&, bool);
template HopfInstance<LaurentPoly> instance_from_json(const nlohmann::json&, bool);

} // namespace adams::hopf
