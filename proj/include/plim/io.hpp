#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "plim/dynamics.hpp"
#include "plim/inverse_limit.hpp"
#include "plim/plmap.hpp"

namespace plim {

// plmap v1:
//
//   # optional comments, anywhere after '#'
//   plmap v1 <n>
//   <p>/<q> <r>/<s>      (n lines: breakpoint x then y)
//
// Every rational must be in lowest terms with `/1` on integers.

/// Throws ParseError (line, column, reason) or the make_plmap errors.
PLMap parse_plmap(std::string_view text);
/// As parse_plmap; Error(io_error) if the file cannot be read.
PLMap parse_plmap_file(const std::filesystem::path& path);
std::string emit_plmap(const PLMap& m);

// threads v1:
//
//   threads v1 depth=<d> root=<p>/<q>
//   <x1> <x2> ... <xd>   (one thread per line)

std::string emit_threads(std::span<const Thread> threads, std::size_t depth, const UnitRational& root);
std::string emit_threads(const BranchTree& tree);

struct ThreadDump {
    std::size_t depth = 0;
    UnitRational root;
    std::vector<Thread> threads;
};

/// Validates every line against the bonding map and the header.
ThreadDump parse_threads(std::string_view text, const PLMap& bonding);
ThreadDump parse_threads_file(const std::filesystem::path& path, const PLMap& bonding);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

/// Pixel layout: a point (x, y) of the unit square is drawn at
/// (margin + x·scale, margin + (1 − y)·scale), printed with three
/// decimals. Nothing else in the document depends on floating point.
struct SvgOptions {
    int scale = 400;
    int margin = 20;
};

/// Graph of m as a polyline through its breakpoints, the diagonal, and
/// the fixed points (circles for points, thick segments for intervals).
std::string svg_plot(const PLMap& m, const SvgOptions& options = {});
/// Scatter of the distinct (x₁, x₂) projections; depth-1 threads are skipped.
std::string svg_plot(std::span<const Thread> threads, const SvgOptions& options = {});

} // namespace plim
