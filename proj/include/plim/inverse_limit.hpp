#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "plim/interval_set.hpp"
#include "plim/plmap.hpp"

namespace plim {

/// Depth-n truncation (x₁, …, xₙ) of a point of the inverse limit of
/// [0, 1] under a bonding map h, with h(x_{i+1}) = x_i exactly.
///
/// The bonding map is shared between threads; equality compares the map
/// structurally.
class Thread {
public:
    /// Throws Error(inconsistent_thread) naming the first 1-based index i
    /// with h(x_{i+1}) != x_i, or Error(bad_depth) for empty coords.
    static Thread make(std::shared_ptr<const PLMap> bonding, std::vector<UnitRational> coords);
    static Thread make(const PLMap& bonding, std::vector<UnitRational> coords);

    [[nodiscard]] const PLMap& bonding() const { return *bonding_; }
    [[nodiscard]] const std::shared_ptr<const PLMap>& shared_bonding() const { return bonding_; }
    [[nodiscard]] std::span<const UnitRational> coords() const { return coords_; }
    [[nodiscard]] std::size_t depth() const { return coords_.size(); }
    [[nodiscard]] const UnitRational& operator[](std::size_t i) const { return coords_[i]; }

    friend bool operator==(const Thread& a, const Thread& b);

private:
    Thread(std::shared_ptr<const PLMap> bonding, std::vector<UnitRational> coords)
        : bonding_(std::move(bonding)), coords_(std::move(coords)) {}

    friend Thread shift(const Thread&);
    friend Thread unshift(const Thread&);
    friend Thread truncate(const Thread&, std::size_t);
    friend class ThreadBuilder;

    std::shared_ptr<const PLMap> bonding_;
    std::vector<UnitRational> coords_;
};

/// Constructs threads whose consistency is already guaranteed by the
/// caller (enumeration by exact preimages). Not for general use.
class ThreadBuilder {
public:
    static Thread trusted(std::shared_ptr<const PLMap> bonding, std::vector<UnitRational> coords) {
        return Thread(std::move(bonding), std::move(coords));
    }
};

Thread make_thread(const PLMap& h, std::vector<UnitRational> coords);

/// Σ 2^{-i} |a_i − b_i|, i = 1..n.
Rational thread_metric(const Thread& a, const Thread& b);

/// (h(x₁), x₁, …, x_{n−1}); keeps the depth.
Thread shift(const Thread& t);
/// (x₂, …, xₙ); throws Error(depth_too_small) at depth 1.
Thread unshift(const Thread& t);
/// (x₁, …, x_d); throws Error(bad_depth) unless 1 <= d <= depth.
Thread truncate(const Thread& t, std::size_t d);

/// Coordinatewise action of a map k commuting with a fixed bonding map.
/// Commutation is checked once at construction.
class InducedMap {
public:
    /// Throws Error(not_commuting) carrying the defect and its witness.
    InducedMap(PLMap k, std::shared_ptr<const PLMap> bonding);
    InducedMap(PLMap k, const PLMap& bonding);

    [[nodiscard]] const PLMap& map() const { return map_; }

    /// Throws Error(bonding_mismatch) if t uses a different bonding map.
    [[nodiscard]] Thread operator()(const Thread& t) const;

private:
    PLMap map_;
    std::shared_ptr<const PLMap> bonding_;
};

Thread induce(const PLMap& k, const Thread& t);

/// Finite-depth check that F∘G = G∘F equals the shift on t, and that
/// F∘G undoes the shift-extension: F(G(unshift t)) = truncate(t, n−1).
/// Throws bonding_mismatch if t's bonding map is not f∘g, not_commuting
/// if f and g do not commute, depth_too_small if depth(t) < 2.
bool mouron_check(const PLMap& f, const PLMap& g, const Thread& t);

/// Per-coordinate feasible sets for threads whose coordinates all lie in
/// a seed set, after exact constraint propagation along the bonding map.
struct FixedThreadSet {
    std::vector<IntervalSet> per_coordinate;
    bool empty = true;
    std::optional<Thread> witness;
};

/// Exact projections of the depth-n threads with every coordinate in
/// `seed`. A backward sweep keeps coordinates that extend to x_n, then a
/// forward sweep keeps those that also reach back to x₁; the result is
/// the fixpoint of the pairwise constraints.
FixedThreadSet propagate_thread_constraints(const PLMap& h, const IntervalSet& seed, std::size_t depth);

/// Threads fixed by the map induced by k. Throws Error(not_commuting).
FixedThreadSet fixed_threads(const PLMap& k, const PLMap& h, std::size_t depth);

struct FixedThreadSeparation {
    /// separation(Fix f, Fix g)
    Rational delta;
    /// Lower bound on the thread metric between Fix(F) and Fix(G).
    Rational bound;
};

FixedThreadSeparation fixed_thread_separation(const PLMap& f, const PLMap& g, const PLMap& h, std::size_t depth);

} // namespace plim
