#pragma once

#include <stdexcept>
#include <string>

namespace mori {

// Every recoverable failure carries one of these named conditions. The CLI
// maps them to exit code 2 and prints the name on stderr, so the set of names
// is part of the external interface.
enum class errc {
    range_error,
    forced_containment,
    smoothness_obstruction,
    not_applicable,
    not_an_sqm,
    unsupported_family,
    empty_interval,
    not_fano,
    interval_error,
    arity_mismatch,
    decomposition_invalid,
    parse_error,
};

inline const char* errc_name(errc code) {
    switch (code) {
        case errc::range_error: return "RangeError";
        case errc::forced_containment: return "ForcedContainment";
        case errc::smoothness_obstruction: return "SmoothnessObstruction";
        case errc::not_applicable: return "NotApplicable";
        case errc::not_an_sqm: return "NotAnSQM";
        case errc::unsupported_family: return "UnsupportedFamily";
        case errc::empty_interval: return "EmptyInterval";
        case errc::not_fano: return "NotFano";
        case errc::interval_error: return "IntervalError";
        case errc::arity_mismatch: return "ArityMismatch";
        case errc::decomposition_invalid: return "DecompositionInvalid";
        case errc::parse_error: return "ParseError";
    }
    return "UnknownError";
}

class classification_error : public std::runtime_error {
public:
    classification_error(errc code, const std::string& detail)
        : std::runtime_error(std::string(errc_name(code)) + ": " + detail),
          code_(code) {}

    errc code() const { return code_; }
    const char* name() const { return errc_name(code_); }

private:
    errc code_;
};

} // namespace mori
