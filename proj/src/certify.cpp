#include "plim/certify.hpp"

#include <algorithm>

#include <json.hpp>

#include "plim/error.hpp"

namespace plim {

namespace {

using nlohmann::json;

void check_budget(const PLMap& m, std::size_t budget) {
    if (m.breakpoints().size() > budget) {
        throw Error(ErrorCode::budget_exceeded, "composition has " + std::to_string(m.breakpoints().size()) +
                                                    " breakpoints, budget " + std::to_string(budget));
    }
}

std::size_t bits_of(const IntervalSet& s) {
    std::size_t bits = 0;
    for (const auto& iv : s.intervals()) {
        bits = std::max({bits, denominator_bits(iv.lo.value()), denominator_bits(iv.hi.value())});
    }
    return bits;
}

// Nonincreasing check over a sequence of rationals.
bool nonincreasing(const std::vector<Rational>& v) {
    for (std::size_t i = 1; i < v.size(); ++i) {
        if (v[i] > v[i - 1]) {
            return false;
        }
    }
    return true;
}

Distance stage_defect(const PLMap& f, const PLMap& g) { return commutator_defect(f, g); }

// --- JSON encoding -------------------------------------------------------

json encode(const Rational& r) { return to_string(r); }

json encode(const UnitRational& u) { return to_string(u); }

json encode(const Distance& d) { return json{{"value", encode(d.value)}, {"witness", encode(d.witness)}}; }

json encode(const IntervalSet& s) {
    json out = json::array();
    for (const auto& iv : s.intervals()) {
        out.push_back(json::array({encode(iv.lo), encode(iv.hi)}));
    }
    return out;
}

json encode(const Surjectivity& s) { return json{{"range", encode(s.range)}, {"surjective", s.surjective}}; }

json encode(const SlopeProfile& p) {
    json slopes = json::array();
    for (const auto& s : p.slopes) {
        slopes.push_back(encode(s));
    }
    json critical = json::array();
    for (const auto& c : p.critical) {
        critical.push_back(encode(c));
    }
    return json{{"bound", encode(p.bound)},
                {"constant_abs_slope", p.constant_abs_slope},
                {"critical", critical},
                {"exceeds_bound", p.exceeds_bound},
                {"min_abs_slope", p.min_abs_slope ? encode(*p.min_abs_slope) : json(nullptr)},
                {"slopes", slopes}};
}

// --- JSON decoding -------------------------------------------------------

[[noreturn]] void malformed(const std::string& what) {
    throw Error(ErrorCode::parse_error, "malformed report: " + what);
}

Rational decode_rational(const json& j) {
    if (!j.is_string()) {
        malformed("expected a rational string");
    }
    auto r = parse_canonical_rational(j.get<std::string>());
    if (!r) {
        malformed("non-canonical rational '" + j.get<std::string>() + "'");
    }
    return *r;
}

UnitRational decode_unit(const json& j) { return UnitRational(decode_rational(j)); }

Distance decode_distance(const json& j) { return {decode_rational(j.at("value")), decode_unit(j.at("witness"))}; }

IntervalSet decode_set(const json& j) {
    std::vector<Interval> intervals;
    for (const auto& iv : j) {
        intervals.push_back({decode_unit(iv.at(0)), decode_unit(iv.at(1))});
    }
    return IntervalSet::from_intervals(std::move(intervals));
}

Surjectivity decode_surjectivity(const json& j) {
    return {j.at("surjective").get<bool>(), decode_set(j.at("range"))};
}

SlopeProfile decode_slope_profile(const json& j) {
    SlopeProfile p;
    p.bound = decode_rational(j.at("bound"));
    p.constant_abs_slope = j.at("constant_abs_slope").get<bool>();
    for (const auto& c : j.at("critical")) {
        p.critical.push_back(decode_unit(c));
    }
    p.exceeds_bound = j.at("exceeds_bound").get<bool>();
    if (!j.at("min_abs_slope").is_null()) {
        p.min_abs_slope = decode_rational(j.at("min_abs_slope"));
    }
    for (const auto& s : j.at("slopes")) {
        p.slopes.push_back(decode_rational(s));
    }
    return p;
}

json parse_document(std::string_view text, std::string_view kind) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::parse_error, std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object() || j.value("kind", "") != kind) {
        malformed("expected kind '" + std::string(kind) + "'");
    }
    return j;
}

template <typename Fn>
auto guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const json::exception& e) {
        malformed(e.what());
    }
}

std::string emit(const json& j) { return j.dump(2) + "\n"; }

} // namespace

PairCertificate certify_pair(const PLMap& f, const PLMap& g, const std::vector<std::size_t>& depths,
                             std::size_t breakpoint_budget) {
    if (depths.empty()) {
        throw Error(ErrorCode::precondition, "certify_pair needs at least one depth");
    }
    for (auto d : depths) {
        if (d < 1) {
            throw Error(ErrorCode::precondition, "depths must be >= 1");
        }
    }
    PLMap fg = compose(f, g);
    check_budget(fg, breakpoint_budget);
    PLMap gf = compose(g, f);
    check_budget(gf, breakpoint_budget);

    PairCertificate c;
    c.defect = sup_dist(fg, gf);
    c.surjective_f = is_surjective(f);
    c.surjective_g = is_surjective(g);
    c.fix_f = fixed_points(f);
    c.fix_g = fixed_points(g);
    c.fix_separation = separation(c.fix_f, c.fix_g);
    bool commute = sgn(c.defect.value) == 0;
    c.hypotheses_met =
        commute && c.surjective_f.surjective && c.surjective_g.surjective && sgn(c.fix_separation) > 0;
    c.max_denominator_bits =
        std::max({max_denominator_bits(f), max_denominator_bits(g), max_denominator_bits(fg), bits_of(c.fix_f),
                  bits_of(c.fix_g), denominator_bits(c.defect.value), denominator_bits(c.fix_separation)});

    c.depth_reports_applicable = commute;
    if (commute) {
        // A thread fixed by F and by G has every coordinate in Fix f ∩ Fix g.
        IntervalSet common = c.fix_f.intersect(c.fix_g);
        Rational bound = c.fix_separation / 2;
        for (auto d : depths) {
            FixedThreadSet shared = propagate_thread_constraints(fg, common, d);
            c.depth_reports.push_back({d, shared.empty, bound});
        }
    }
    return c;
}

std::string_view verdict_name(SequenceVerdict v) {
    switch (v) {
    case SequenceVerdict::stages_commute_exactly: return "stages-commute-exactly";
    case SequenceVerdict::defects_decreasing: return "defects-decreasing";
    case SequenceVerdict::defects_nonmonotone: return "defects-nonmonotone";
    case SequenceVerdict::separation_collapsing: return "separation-collapsing";
    case SequenceVerdict::separation_bounded_below: return "separation-bounded-below";
    }
    return "unknown";
}

std::optional<SequenceVerdict> parse_verdict(std::string_view name) {
    for (auto v : {SequenceVerdict::stages_commute_exactly, SequenceVerdict::defects_decreasing,
                   SequenceVerdict::defects_nonmonotone, SequenceVerdict::separation_collapsing,
                   SequenceVerdict::separation_bounded_below}) {
        if (verdict_name(v) == name) {
            return v;
        }
    }
    return std::nullopt;
}

SequenceReport certify_sequence(const std::vector<std::pair<PLMap, PLMap>>& stages, const Rational& slope_bound) {
    if (stages.size() < 2) {
        throw Error(ErrorCode::precondition, "certify_sequence needs at least two stages");
    }
    SequenceReport report;
    report.slope_bound = slope_bound;
    std::vector<Rational> defects;
    std::vector<Rational> separations;
    std::vector<Rational> steps_f;
    std::vector<Rational> steps_g;
    for (std::size_t k = 0; k < stages.size(); ++k) {
        const auto& [f, g] = stages[k];
        StageRecord rec;
        rec.k = k + 1;
        rec.defect = stage_defect(f, g);
        rec.fix_separation = separation(fixed_points(f), fixed_points(g));
        rec.slope_f = slope_profile(f, slope_bound);
        rec.slope_g = slope_profile(g, slope_bound);
        if (k + 1 < stages.size()) {
            rec.step_f = sup_dist(f, stages[k + 1].first);
            rec.step_g = sup_dist(g, stages[k + 1].second);
            steps_f.push_back(rec.step_f->value);
            steps_g.push_back(rec.step_g->value);
        }
        defects.push_back(rec.defect.value);
        separations.push_back(rec.fix_separation);
        report.stages.push_back(std::move(rec));
    }

    report.cauchy.defects_nonincreasing = nonincreasing(defects);
    report.cauchy.separations_nonincreasing = nonincreasing(separations);
    report.cauchy.step_f_nonincreasing = nonincreasing(steps_f);
    report.cauchy.step_g_nonincreasing = nonincreasing(steps_g);

    bool all_commute = std::all_of(defects.begin(), defects.end(), [](const Rational& d) { return sgn(d) == 0; });
    bool decreasing = true;
    for (std::size_t i = 1; i < defects.size(); ++i) {
        bool settled = sgn(defects[i]) == 0 && sgn(defects[i - 1]) == 0;
        decreasing = decreasing && (defects[i] < defects[i - 1] || settled);
    }
    if (all_commute) {
        report.verdicts.push_back(SequenceVerdict::stages_commute_exactly);
    } else if (decreasing) {
        report.verdicts.push_back(SequenceVerdict::defects_decreasing);
    } else {
        report.verdicts.push_back(SequenceVerdict::defects_nonmonotone);
    }

    bool collapsing = std::any_of(separations.begin(), separations.end(), [](const Rational& s) { return sgn(s) == 0; });
    for (std::size_t i = 1; i < separations.size(); ++i) {
        collapsing = collapsing || separations[i] < separations[i - 1];
    }
    report.verdicts.push_back(collapsing ? SequenceVerdict::separation_collapsing
                                         : SequenceVerdict::separation_bounded_below);
    return report;
}

std::string serialize(const PairCertificate& c) {
    json depth_reports;
    if (c.depth_reports_applicable) {
        depth_reports = json::array();
        for (const auto& r : c.depth_reports) {
            depth_reports.push_back(json{{"depth", r.depth},
                                         {"fixed_threads_disjoint", r.fixed_threads_disjoint},
                                         {"metric_bound", encode(r.metric_bound)}});
        }
    } else {
        depth_reports = "not-applicable";
    }
    json j{{"kind", "pair-certificate"},
           {"version", 1},
           {"defect", encode(c.defect)},
           {"surjective_f", encode(c.surjective_f)},
           {"surjective_g", encode(c.surjective_g)},
           {"fix_f", encode(c.fix_f)},
           {"fix_g", encode(c.fix_g)},
           {"fix_separation", encode(c.fix_separation)},
           {"hypotheses_met", c.hypotheses_met},
           {"max_denominator_bits", c.max_denominator_bits},
           {"depth_reports", depth_reports}};
    return emit(j);
}

PairCertificate parse_pair_certificate(std::string_view text) {
    json j = parse_document(text, "pair-certificate");
    return guarded([&] {
        PairCertificate c;
        c.defect = decode_distance(j.at("defect"));
        c.surjective_f = decode_surjectivity(j.at("surjective_f"));
        c.surjective_g = decode_surjectivity(j.at("surjective_g"));
        c.fix_f = decode_set(j.at("fix_f"));
        c.fix_g = decode_set(j.at("fix_g"));
        c.fix_separation = decode_rational(j.at("fix_separation"));
        c.hypotheses_met = j.at("hypotheses_met").get<bool>();
        c.max_denominator_bits = j.at("max_denominator_bits").get<std::size_t>();
        const json& reports = j.at("depth_reports");
        c.depth_reports_applicable = reports.is_array();
        if (c.depth_reports_applicable) {
            for (const auto& r : reports) {
                c.depth_reports.push_back({r.at("depth").get<std::size_t>(),
                                           r.at("fixed_threads_disjoint").get<bool>(),
                                           decode_rational(r.at("metric_bound"))});
            }
        } else if (reports != "not-applicable") {
            malformed("depth_reports");
        }
        return c;
    });
}

std::string serialize(const SequenceReport& r) {
    json stages = json::array();
    for (const auto& s : r.stages) {
        stages.push_back(json{{"k", s.k},
                              {"defect", encode(s.defect)},
                              {"fix_separation", encode(s.fix_separation)},
                              {"slope_f", encode(s.slope_f)},
                              {"slope_g", encode(s.slope_g)},
                              {"step_f", s.step_f ? encode(*s.step_f) : json(nullptr)},
                              {"step_g", s.step_g ? encode(*s.step_g) : json(nullptr)}});
    }
    json verdicts = json::array();
    for (auto v : r.verdicts) {
        verdicts.push_back(std::string(verdict_name(v)));
    }
    json j{{"kind", "sequence-report"},
           {"version", 1},
           {"slope_bound", encode(r.slope_bound)},
           {"stages", stages},
           {"cauchy_summary",
            {{"defects_nonincreasing", r.cauchy.defects_nonincreasing},
             {"separations_nonincreasing", r.cauchy.separations_nonincreasing},
             {"step_f_nonincreasing", r.cauchy.step_f_nonincreasing},
             {"step_g_nonincreasing", r.cauchy.step_g_nonincreasing}}},
           {"verdicts", verdicts}};
    return emit(j);
}

SequenceReport parse_sequence_report(std::string_view text) {
    json j = parse_document(text, "sequence-report");
    return guarded([&] {
        SequenceReport r;
        r.slope_bound = decode_rational(j.at("slope_bound"));
        for (const auto& s : j.at("stages")) {
            StageRecord rec;
            rec.k = s.at("k").get<std::size_t>();
            rec.defect = decode_distance(s.at("defect"));
            rec.fix_separation = decode_rational(s.at("fix_separation"));
            rec.slope_f = decode_slope_profile(s.at("slope_f"));
            rec.slope_g = decode_slope_profile(s.at("slope_g"));
            if (!s.at("step_f").is_null()) {
                rec.step_f = decode_distance(s.at("step_f"));
            }
            if (!s.at("step_g").is_null()) {
                rec.step_g = decode_distance(s.at("step_g"));
            }
            r.stages.push_back(std::move(rec));
        }
        const json& c = j.at("cauchy_summary");
        r.cauchy.defects_nonincreasing = c.at("defects_nonincreasing").get<bool>();
        r.cauchy.separations_nonincreasing = c.at("separations_nonincreasing").get<bool>();
        r.cauchy.step_f_nonincreasing = c.at("step_f_nonincreasing").get<bool>();
        r.cauchy.step_g_nonincreasing = c.at("step_g_nonincreasing").get<bool>();
        for (const auto& v : j.at("verdicts")) {
            auto parsed = parse_verdict(v.get<std::string>());
            if (!parsed) {
                malformed("unknown verdict " + v.get<std::string>());
            }
            r.verdicts.push_back(*parsed);
        }
        return r;
    });
}

std::string serialize(const FixedThreadSet& s) {
    json sets = json::array();
    for (const auto& set : s.per_coordinate) {
        sets.push_back(encode(set));
    }
    json witness = nullptr;
    if (s.witness) {
        witness = json::array();
        for (const auto& x : s.witness->coords()) {
            witness.push_back(encode(x));
        }
    }
    json j{{"kind", "fixed-thread-set"},
           {"version", 1},
           {"depth", s.per_coordinate.size()},
           {"empty", s.empty},
           {"per_coordinate", sets},
           {"witness", witness}};
    return emit(j);
}

} // namespace plim
