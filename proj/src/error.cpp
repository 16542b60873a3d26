#include "plim/error.hpp"

namespace plim {

std::string_view error_code_name(ErrorCode code) {
    switch (code) {
    case ErrorCode::domain_not_covered: return "domain-not-covered";
    case ErrorCode::non_monotone_x: return "non-monotone-x";
    case ErrorCode::value_out_of_range: return "value-out-of-range";
    case ErrorCode::budget_exceeded: return "budget-exceeded";
    case ErrorCode::inconsistent_thread: return "inconsistent-thread";
    case ErrorCode::depth_mismatch: return "depth-mismatch";
    case ErrorCode::bonding_mismatch: return "bonding-mismatch";
    case ErrorCode::not_commuting: return "not-commuting";
    case ErrorCode::depth_too_small: return "depth-too-small";
    case ErrorCode::bad_depth: return "bad-depth";
    case ErrorCode::empty_input: return "empty-input";
    case ErrorCode::empty_fixed_set: return "empty-fixed-set";
    case ErrorCode::precondition: return "precondition";
    case ErrorCode::parse_error: return "parse-error";
    case ErrorCode::io_error: return "io-error";
    }
    return "unknown";
}

Error::Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& reason)
    : Error(ErrorCode::parse_error,
            "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + reason),
      line_(line), column_(column), reason_(reason) {}

} // namespace plim
