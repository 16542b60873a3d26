#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "plim/dynamics.hpp"
#include "plim/inverse_limit.hpp"
#include "plim/plmap.hpp"

namespace plim {

struct DepthReport {
    std::size_t depth = 0;
    /// No thread of this depth is fixed by both induced maps.
    bool fixed_threads_disjoint = false;
    /// Lower bound on the thread metric between Fix(F) and Fix(G).
    Rational metric_bound;

    friend bool operator==(const DepthReport&, const DepthReport&) = default;
};

/// Verdict on "f, g commute, are surjective and share no fixed point",
/// plus the finite-depth consequences for the induced maps on the
/// inverse limit with bonding map f∘g.
struct PairCertificate {
    Distance defect;
    Surjectivity surjective_f;
    Surjectivity surjective_g;
    IntervalSet fix_f;
    IntervalSet fix_g;
    Rational fix_separation;
    bool hypotheses_met = false;
    std::size_t max_denominator_bits = 0;
    /// Depth reports exist only for exactly commuting pairs.
    bool depth_reports_applicable = false;
    std::vector<DepthReport> depth_reports;
};

/// Throws Error(budget_exceeded) if f∘g or g∘f has more than
/// `breakpoint_budget` breakpoints, Error(precondition) for an empty or
/// zero depth list.
PairCertificate certify_pair(const PLMap& f, const PLMap& g, const std::vector<std::size_t>& depths,
                             std::size_t breakpoint_budget = unlimited);

enum class SequenceVerdict {
    stages_commute_exactly,
    defects_decreasing,
    defects_nonmonotone,
    separation_collapsing,
    separation_bounded_below,
};

std::string_view verdict_name(SequenceVerdict v);
std::optional<SequenceVerdict> parse_verdict(std::string_view name);

struct StageRecord {
    std::size_t k = 0;
    Distance defect;
    Rational fix_separation;
    SlopeProfile slope_f;
    SlopeProfile slope_g;
    /// sup_dist to the next stage; absent on the last stage.
    std::optional<Distance> step_f;
    std::optional<Distance> step_g;
};

struct CauchySummary {
    bool defects_nonincreasing = false;
    bool step_f_nonincreasing = false;
    bool step_g_nonincreasing = false;
    bool separations_nonincreasing = false;

    friend bool operator==(const CauchySummary&, const CauchySummary&) = default;
};

/// Stage-by-stage evidence for an approximating sequence of pairs. Says
/// nothing about the limit maps themselves.
struct SequenceReport {
    Rational slope_bound;
    std::vector<StageRecord> stages;
    CauchySummary cauchy;
    /// One defect verdict followed by one separation verdict.
    std::vector<SequenceVerdict> verdicts;
};

/// Throws Error(precondition) with fewer than two stages.
SequenceReport certify_sequence(const std::vector<std::pair<PLMap, PLMap>>& stages,
                                const Rational& slope_bound = Rational(3));

// Serialization: JSON with sorted keys, rationals as "p/q" strings,
// two-space indent and a trailing newline.
std::string serialize(const PairCertificate& c);
std::string serialize(const SequenceReport& r);
std::string serialize(const FixedThreadSet& s);
PairCertificate parse_pair_certificate(std::string_view text);
SequenceReport parse_sequence_report(std::string_view text);

} // namespace plim
