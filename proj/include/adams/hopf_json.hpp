#pragma once

#include <string>

#include <json.hpp>

#include "adams/hopf.hpp"

namespace adams::hopf {

// {"schema": 1, "kind": "hopf_instance", "ring", "name", "braid_q", "basis",
//  "product": [[p, i, r, j, k, coeff]...], "coproduct": [[m, k, p, i, j, coeff]...]}
// Coefficients are strings so that they round-trip exactly.
template <class R>
nlohmann::json instance_to_json(const HopfInstance<R>& inst);

// Throws ParseError on malformed input and RingMismatch when "ring" differs from R.
template <class R>
HopfInstance<R> instance_from_json(const nlohmann::json& j, bool verify = true);

// "rational" or "laurent".
std::string instance_ring(const nlohmann::json& j);

} // namespace adams::hopf
