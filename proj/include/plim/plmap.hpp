#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "plim/interval_set.hpp"
#include "plim/rational.hpp"

namespace plim {

struct Breakpoint {
    UnitRational x;
    UnitRational y;

    friend bool operator==(const Breakpoint&, const Breakpoint&) = default;
};

/// Continuous piecewise-linear self-map of [0, 1].
///
/// Stored canonically: breakpoint abscissae strictly increase from 0 to 1
/// and no three consecutive breakpoints are collinear, so two maps are
/// equal as functions iff they compare equal.
class PLMap {
public:
    /// The identity map.
    PLMap();

    /// Validates and canonicalizes. Throws Error with
    /// domain_not_covered, non_monotone_x or value_out_of_range.
    static PLMap make(std::vector<Breakpoint> points);
    static PLMap identity() { return {}; }

    [[nodiscard]] std::span<const Breakpoint> breakpoints() const { return points_; }
    [[nodiscard]] std::size_t piece_count() const { return points_.size() - 1; }
    /// Slope of piece i, between breakpoints i and i+1.
    [[nodiscard]] Rational slope(std::size_t piece) const;

    [[nodiscard]] UnitRational operator()(const UnitRational& x) const;

    friend bool operator==(const PLMap&, const PLMap&) = default;

private:
    explicit PLMap(std::vector<Breakpoint> canonical) : points_(std::move(canonical)) {}

    std::vector<Breakpoint> points_;
};

PLMap make_plmap(std::vector<Breakpoint> points);

inline UnitRational eval(const PLMap& m, const UnitRational& x) { return m(x); }

/// outer ∘ inner, exact.
PLMap compose(const PLMap& outer, const PLMap& inner);

/// A sup-norm distance together with the smallest abscissa attaining it.
struct Distance {
    Rational value;
    UnitRational witness;
};

/// ‖a − b‖∞, maximized over the common refinement of both partitions.
Distance sup_dist(const PLMap& a, const PLMap& b);

/// ‖f∘g − g∘f‖∞; zero iff the maps commute.
Distance commutator_defect(const PLMap& f, const PLMap& g);

IntervalSet fixed_points(const PLMap& m);

struct Surjectivity {
    bool surjective = false;
    IntervalSet range;
};

Surjectivity is_surjective(const PLMap& m);

IntervalSet image(const PLMap& m, const IntervalSet& s);
IntervalSet preimage(const PLMap& m, const IntervalSet& s);

struct SlopeProfile {
    std::vector<Rational> slopes;
    /// Interior breakpoints where the slope changes sign or an adjacent
    /// piece is flat.
    std::vector<UnitRational> critical;
    /// Minimum |slope| over non-flat pieces; empty if every piece is flat.
    std::optional<Rational> min_abs_slope;
    Rational bound;
    bool exceeds_bound = false;
    bool constant_abs_slope = false;

    friend bool operator==(const SlopeProfile&, const SlopeProfile&) = default;
};

/// Throws Error(precondition) unless bound > 0.
SlopeProfile slope_profile(const PLMap& m, const Rational& bound);

/// Largest denominator bit length among the breakpoint coordinates.
std::size_t max_denominator_bits(const PLMap& m);

} // namespace plim
