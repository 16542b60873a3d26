#pragma once

#include <span>
#include <string>
#include <vector>

#include "plim/rational.hpp"

namespace plim {

/// Closed interval [lo, hi] inside [0, 1]; lo == hi encodes a point.
struct Interval {
    UnitRational lo;
    UnitRational hi;

    [[nodiscard]] bool is_point() const { return lo == hi; }
    [[nodiscard]] bool contains(const UnitRational& x) const { return lo <= x && x <= hi; }

    friend bool operator==(const Interval&, const Interval&) = default;
};

/// Finite union of closed intervals in merged canonical form: sorted,
/// pairwise disjoint, and no two components sharing an endpoint.
class IntervalSet {
public:
    IntervalSet() = default;

    /// Accepts intervals in any order, overlapping or touching; throws
    /// Error(precondition) if some lo > hi.
    static IntervalSet from_intervals(std::vector<Interval> intervals);
    static IntervalSet point(UnitRational x);
    static IntervalSet interval(UnitRational lo, UnitRational hi);
    static IntervalSet unit();

    [[nodiscard]] std::span<const Interval> intervals() const { return intervals_; }
    [[nodiscard]] bool empty() const { return intervals_.empty(); }
    [[nodiscard]] std::size_t size() const { return intervals_.size(); }

    [[nodiscard]] bool contains(const UnitRational& x) const;
    [[nodiscard]] bool contains(const IntervalSet& other) const;

    [[nodiscard]] IntervalSet unite(const IntervalSet& other) const;
    [[nodiscard]] IntervalSet intersect(const IntervalSet& other) const;

    /// Smallest member; set must be nonempty.
    [[nodiscard]] const UnitRational& min() const;
    [[nodiscard]] const UnitRational& max() const;

    friend bool operator==(const IntervalSet&, const IntervalSet&) = default;

private:
    std::vector<Interval> intervals_;
};

/// Exact distance min |a - b| over a in A, b in B. Throws
/// Error(empty_input) if either set is empty.
Rational separation(const IntervalSet& a, const IntervalSet& b);

/// `{0/1, [1/3, 1/2]}`: points bare, proper intervals bracketed.
std::string to_string(const IntervalSet& s);

} // namespace plim
