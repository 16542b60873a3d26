#include "plim/interval_set.hpp"

#include <algorithm>

#include "plim/error.hpp"

namespace plim {

IntervalSet IntervalSet::from_intervals(std::vector<Interval> intervals) {
    for (const auto& iv : intervals) {
        if (iv.hi < iv.lo) {
            throw Error(ErrorCode::precondition,
                        "interval [" + to_string(iv.lo) + ", " + to_string(iv.hi) + "] has lo > hi");
        }
    }
    std::sort(intervals.begin(), intervals.end(),
              [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    IntervalSet out;
    for (auto& iv : intervals) {
        if (!out.intervals_.empty() && iv.lo <= out.intervals_.back().hi) {
            if (out.intervals_.back().hi < iv.hi) {
                out.intervals_.back().hi = std::move(iv.hi);
            }
        } else {
            out.intervals_.push_back(std::move(iv));
        }
    }
    return out;
}

IntervalSet IntervalSet::point(UnitRational x) {
    IntervalSet out;
    out.intervals_.push_back({x, x});
    return out;
}

IntervalSet IntervalSet::interval(UnitRational lo, UnitRational hi) {
    return from_intervals({{std::move(lo), std::move(hi)}});
}

IntervalSet IntervalSet::unit() { return interval(UnitRational(0, 1), UnitRational(1, 1)); }

bool IntervalSet::contains(const UnitRational& x) const {
    auto it = std::upper_bound(intervals_.begin(), intervals_.end(), x,
                               [](const UnitRational& v, const Interval& iv) { return v < iv.lo; });
    return it != intervals_.begin() && std::prev(it)->contains(x);
}

bool IntervalSet::contains(const IntervalSet& other) const {
    return intersect(other) == other;
}

IntervalSet IntervalSet::unite(const IntervalSet& other) const {
    std::vector<Interval> all(intervals_);
    all.insert(all.end(), other.intervals_.begin(), other.intervals_.end());
    return from_intervals(std::move(all));
}

IntervalSet IntervalSet::intersect(const IntervalSet& other) const {
    std::vector<Interval> out;
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < intervals_.size() && j < other.intervals_.size()) {
        const auto& a = intervals_[i];
        const auto& b = other.intervals_[j];
        const auto& lo = std::max(a.lo, b.lo);
        const auto& hi = std::min(a.hi, b.hi);
        if (lo <= hi) {
            out.push_back({lo, hi});
        }
        if (a.hi < b.hi) {
            ++i;
        } else {
            ++j;
        }
    }
    // Components of a canonical set never touch, so pieces of the
    // intersection cannot touch either.
    IntervalSet s;
    s.intervals_ = std::move(out);
    return s;
}

const UnitRational& IntervalSet::min() const {
    if (empty()) {
        throw Error(ErrorCode::empty_input, "min of empty interval set");
    }
    return intervals_.front().lo;
}

const UnitRational& IntervalSet::max() const {
    if (empty()) {
        throw Error(ErrorCode::empty_input, "max of empty interval set");
    }
    return intervals_.back().hi;
}

Rational separation(const IntervalSet& a, const IntervalSet& b) {
    if (a.empty() || b.empty()) {
        throw Error(ErrorCode::empty_input, "separation of an empty interval set");
    }
    std::optional<Rational> best;
    for (const auto& x : a.intervals()) {
        for (const auto& y : b.intervals()) {
            Rational gap(0);
            if (x.hi < y.lo) {
                gap = y.lo.value() - x.hi.value();
            } else if (y.hi < x.lo) {
                gap = x.lo.value() - y.hi.value();
            }
            if (!best || gap < *best) {
                best = gap;
            }
        }
    }
    return *best;
}

std::string to_string(const IntervalSet& s) {
    std::string out = "{";
    bool first = true;
    for (const auto& iv : s.intervals()) {
        if (!first) {
            out += ", ";
        }
        first = false;
        if (iv.is_point()) {
            out += to_string(iv.lo);
        } else {
            out += "[" + to_string(iv.lo) + ", " + to_string(iv.hi) + "]";
        }
    }
    return out + "}";
}

} // namespace plim
