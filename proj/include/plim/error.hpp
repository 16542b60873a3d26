#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace plim {

/// Stable error identifiers. The CLI prints the name returned by
/// error_code_name(); do not renumber.
enum class ErrorCode {
    domain_not_covered = 1,
    non_monotone_x,
    value_out_of_range,
    budget_exceeded,
    inconsistent_thread,
    depth_mismatch,
    bonding_mismatch,
    not_commuting,
    depth_too_small,
    bad_depth,
    empty_input,
    empty_fixed_set,
    precondition,
    parse_error,
    io_error,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what);

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Parse failure carrying a 1-based source position.
class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& reason);

    [[nodiscard]] std::size_t line() const noexcept { return line_; }
    [[nodiscard]] std::size_t column() const noexcept { return column_; }
    [[nodiscard]] const std::string& reason() const noexcept { return reason_; }

private:
    std::size_t line_;
    std::size_t column_;
    std::string reason_;
};

} // namespace plim
