#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "plim/dynamics.hpp"
#include "plim/rational.hpp"

namespace plim::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_error = 1;
inline constexpr int exit_hypothesis_failure = 2;

enum class Subcommand { eval, compose, fix, commute, certify_pair, certify_seq, threads, induce, mouron, plot };

struct RunConfig {
    Subcommand subcommand = Subcommand::fix;
    std::vector<std::filesystem::path> inputs;
    /// Argument of `eval`.
    std::optional<UnitRational> point;
    std::size_t depth = 3;
    std::size_t max_branches = unlimited;
    std::size_t breakpoint_budget = unlimited;
    Rational slope_bound{3};
    std::optional<UnitRational> root;
    std::optional<std::filesystem::path> out;
    unsigned workers = 1;
    /// `plot`: scatter threads from this dump instead of the map graph.
    std::optional<std::filesystem::path> threads_file;
    int scale = 400;
};

/// Throws Error(precondition) when a budget is zero or the slope bound
/// is not positive.
void validate(const RunConfig& config);

/// Executes one subcommand. Returns exit_ok, exit_error on operational
/// failure (message on err), or exit_hypothesis_failure when the
/// computation succeeded but the checked property does not hold.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv-style arguments (without the program name) and runs.
int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace plim::cli
