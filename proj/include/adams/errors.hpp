#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace adams {

// Every failure raised by the library carries one of these codes. The CLI
// prints the code name verbatim, so renaming an enumerator is a format change.
enum class Errc {
    NonUnitConstant,
    InvalidConstantTerm,
    FlavorMismatch,
    RingMismatch,
    TruncationMismatch,
    NonIntegral,
    NotRealizable,
    DegreeOutOfRange,
    DimensionMismatch,
    TooLarge,
    HypothesisViolated,
    NotRational,
    NotApplicable,
    NotNilpotent,
    AxiomViolated,
    CacheMiss,
    NetworkError,
    ParseError,
    InvalidArgument,
};

constexpr std::string_view errc_name(Errc code) noexcept {
    switch (code) {
    case Errc::NonUnitConstant: return "NonUnitConstant";
    case Errc::InvalidConstantTerm: return "InvalidConstantTerm";
    case Errc::FlavorMismatch: return "FlavorMismatch";
    case Errc::RingMismatch: return "RingMismatch";
    case Errc::TruncationMismatch: return "TruncationMismatch";
    case Errc::NonIntegral: return "NonIntegral";
    case Errc::NotRealizable: return "NotRealizable";
    case Errc::DegreeOutOfRange: return "DegreeOutOfRange";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::TooLarge: return "TooLarge";
    case Errc::HypothesisViolated: return "HypothesisViolated";
    case Errc::NotRational: return "NotRational";
    case Errc::NotApplicable: return "NotApplicable";
    case Errc::NotNilpotent: return "NotNilpotent";
    case Errc::AxiomViolated: return "AxiomViolated";
    case Errc::CacheMiss: return "CacheMiss";
    case Errc::NetworkError: return "NetworkError";
    case Errc::ParseError: return "ParseError";
    case Errc::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    Errc code() const noexcept { return code_; }
    std::string_view name() const noexcept { return errc_name(code_); }

private:
    Errc code_;
};

} // namespace adams
