#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include "plim/inverse_limit.hpp"
#include "plim/plmap.hpp"

namespace plim {

inline constexpr std::size_t unlimited = std::numeric_limits<std::size_t>::max();

/// mⁿ. Throws Error(budget_exceeded) once an intermediate iterate has
/// more than `budget` breakpoints.
PLMap iterate(const PLMap& m, std::size_t n, std::size_t budget = unlimited);

/// (x, m(x), …, mⁿ(x)).
std::vector<UnitRational> orbit(const PLMap& m, const UnitRational& x, std::size_t n);

/// A coordinate whose preimage contains proper intervals (flat pieces of
/// the bonding map). Only the left endpoint of each such interval is
/// followed by the enumeration.
struct IntervalBranch {
    /// 1-based index of the interval-valued coordinate.
    std::size_t position = 0;
    /// Coordinates x₁ … x_{position−1} leading to it.
    std::vector<UnitRational> prefix;
    IntervalSet set;

    friend bool operator==(const IntervalBranch&, const IntervalBranch&) = default;
};

struct BranchTree {
    UnitRational root;
    std::size_t depth = 0;
    /// Lexicographic by coordinate sequence.
    std::vector<Thread> branches;
    /// Set iff more than max_branches threads exist.
    bool truncated = false;
    std::vector<IntervalBranch> interval_branches;
};

/// All threads (root, x₂, …, x_depth) under h, in lexicographic order,
/// capped at max_branches. Subtrees are distributed over `workers`
/// threads; the result does not depend on the worker count.
BranchTree backward_branches(const PLMap& h, const UnitRational& root, std::size_t depth,
                             std::size_t max_branches = unlimited, unsigned workers = 1);

} // namespace plim
