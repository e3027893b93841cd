#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "adams/combinatorics.hpp"
#include "adams/numeric.hpp"

namespace adams::verify {

struct CheckResult {
    std::string name;
    bool passed = true;
    nlohmann::json detail; // counterexample payload on failure
};

struct VerifyReport {
    std::string suite;
    std::vector<CheckResult> checks;

    bool passed() const;
    std::size_t failures() const;
    nlohmann::json to_json() const;
};

/// Unset fields fall back to per-suite defaults. An explicitly empty n list
/// makes every suite vacuous.
struct VerifyBounds {
    std::optional<int> max_degree;
    std::optional<std::vector<Rational>> n_values;
    std::optional<combinatorics::WeightedAlphabet> alphabet;
};

std::vector<std::string> suite_names();

// oracle, identities, qidentities, species, figures. Unknown names throw
// InvalidArgument; check failures are reported, never thrown.
VerifyReport run_suite(std::string_view name, const VerifyBounds& bounds = {});

// Reference arrays, rows k = 1..6 and columns m = 1..6.
const std::vector<std::vector<long>>& figure_mul_array();
const std::vector<std::vector<long>>& figure_pal_array();

} // namespace adams::verify
