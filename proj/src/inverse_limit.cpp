#include "plim/inverse_limit.hpp"

#include "plim/error.hpp"

namespace plim {

namespace {

void require_same_bonding(const Thread& a, const Thread& b) {
    if (a.shared_bonding() != b.shared_bonding() && a.bonding() != b.bonding()) {
        throw Error(ErrorCode::bonding_mismatch, "threads use different bonding maps");
    }
}

} // namespace

Thread Thread::make(std::shared_ptr<const PLMap> bonding, std::vector<UnitRational> coords) {
    if (coords.empty()) {
        throw Error(ErrorCode::bad_depth, "a thread needs at least one coordinate");
    }
    const PLMap& h = *bonding;
    for (std::size_t i = 0; i + 1 < coords.size(); ++i) {
        UnitRational image = h(coords[i + 1]);
        if (image != coords[i]) {
            throw Error(ErrorCode::inconsistent_thread,
                        "inconsistent thread at index " + std::to_string(i + 1) + ": h(" +
                            to_string(coords[i + 1]) + ") = " + to_string(image) + " != " + to_string(coords[i]));
        }
    }
    return Thread(std::move(bonding), std::move(coords));
}

Thread Thread::make(const PLMap& bonding, std::vector<UnitRational> coords) {
    return make(std::make_shared<const PLMap>(bonding), std::move(coords));
}

bool operator==(const Thread& a, const Thread& b) {
    if (a.coords_ != b.coords_) {
        return false;
    }
    return a.bonding_ == b.bonding_ || *a.bonding_ == *b.bonding_;
}

Thread make_thread(const PLMap& h, std::vector<UnitRational> coords) {
    return Thread::make(h, std::move(coords));
}

Rational thread_metric(const Thread& a, const Thread& b) {
    if (a.depth() != b.depth()) {
        throw Error(ErrorCode::depth_mismatch, "threads of depth " + std::to_string(a.depth()) + " and " +
                                                   std::to_string(b.depth()));
    }
    require_same_bonding(a, b);
    Rational sum(0);
    Rational weight(1, 2);
    for (std::size_t i = 0; i < a.depth(); ++i) {
        sum += weight * abs_value(a[i].value() - b[i].value());
        weight /= 2;
    }
    return sum;
}

Thread shift(const Thread& t) {
    std::vector<UnitRational> coords;
    coords.reserve(t.depth());
    coords.push_back(t.bonding()(t[0]));
    coords.insert(coords.end(), t.coords_.begin(), t.coords_.end() - 1);
    return Thread(t.bonding_, std::move(coords));
}

Thread unshift(const Thread& t) {
    if (t.depth() < 2) {
        throw Error(ErrorCode::depth_too_small, "unshift needs depth >= 2");
    }
    return Thread(t.bonding_, std::vector<UnitRational>(t.coords_.begin() + 1, t.coords_.end()));
}

Thread truncate(const Thread& t, std::size_t d) {
    if (d < 1 || d > t.depth()) {
        throw Error(ErrorCode::bad_depth,
                    "cannot truncate depth " + std::to_string(t.depth()) + " thread to " + std::to_string(d));
    }
    return Thread(t.bonding_, std::vector<UnitRational>(t.coords_.begin(), t.coords_.begin() + d));
}

InducedMap::InducedMap(PLMap k, std::shared_ptr<const PLMap> bonding)
    : map_(std::move(k)), bonding_(std::move(bonding)) {
    Distance defect = commutator_defect(map_, *bonding_);
    if (sgn(defect.value) != 0) {
        throw Error(ErrorCode::not_commuting, "map does not commute with the bonding map: defect " +
                                                  to_string(defect.value) + " at x = " + to_string(defect.witness));
    }
}

InducedMap::InducedMap(PLMap k, const PLMap& bonding)
    : InducedMap(std::move(k), std::make_shared<const PLMap>(bonding)) {}

Thread InducedMap::operator()(const Thread& t) const {
    if (t.shared_bonding() != bonding_ && t.bonding() != *bonding_) {
        throw Error(ErrorCode::bonding_mismatch, "thread uses a different bonding map");
    }
    std::vector<UnitRational> coords;
    coords.reserve(t.depth());
    for (const auto& x : t.coords()) {
        coords.push_back(map_(x));
    }
    return Thread::make(t.shared_bonding(), std::move(coords));
}

Thread induce(const PLMap& k, const Thread& t) {
    return InducedMap(k, t.shared_bonding())(t);
}

bool mouron_check(const PLMap& f, const PLMap& g, const Thread& t) {
    if (t.bonding() != compose(f, g)) {
        throw Error(ErrorCode::bonding_mismatch, "thread bonding map is not f∘g");
    }
    Distance defect = commutator_defect(f, g);
    if (sgn(defect.value) != 0) {
        throw Error(ErrorCode::not_commuting,
                    "f and g do not commute: defect " + to_string(defect.value) + " at x = " + to_string(defect.witness));
    }
    if (t.depth() < 2) {
        throw Error(ErrorCode::depth_too_small, "mouron check needs depth >= 2");
    }
    InducedMap big_f(f, t.shared_bonding());
    InducedMap big_g(g, t.shared_bonding());
    Thread shifted = shift(t);
    if (big_f(big_g(t)) != shifted || big_g(big_f(t)) != shifted) {
        return false;
    }
    return big_f(big_g(unshift(t))) == truncate(t, t.depth() - 1);
}

FixedThreadSet propagate_thread_constraints(const PLMap& h, const IntervalSet& seed, std::size_t depth) {
    if (depth < 1) {
        throw Error(ErrorCode::bad_depth, "depth must be >= 1");
    }
    std::vector<IntervalSet> sets(depth, seed);
    for (std::size_t i = depth - 1; i-- > 0;) {
        sets[i] = sets[i].intersect(image(h, sets[i + 1]));
    }
    for (std::size_t i = 0; i + 1 < depth; ++i) {
        sets[i + 1] = sets[i + 1].intersect(preimage(h, sets[i]));
    }

    FixedThreadSet out;
    out.empty = false;
    for (const auto& s : sets) {
        out.empty = out.empty || s.empty();
    }
    if (!out.empty) {
        std::vector<UnitRational> coords{sets[0].min()};
        for (std::size_t i = 1; i < depth; ++i) {
            IntervalSet next = sets[i].intersect(preimage(h, IntervalSet::point(coords.back())));
            coords.push_back(next.min());
        }
        out.witness = Thread::make(h, std::move(coords));
    }
    out.per_coordinate = std::move(sets);
    return out;
}

FixedThreadSet fixed_threads(const PLMap& k, const PLMap& h, std::size_t depth) {
    Distance defect = commutator_defect(k, h);
    if (sgn(defect.value) != 0) {
        throw Error(ErrorCode::not_commuting, "map does not commute with the bonding map: defect " +
                                                  to_string(defect.value) + " at x = " + to_string(defect.witness));
    }
    return propagate_thread_constraints(h, fixed_points(k), depth);
}

FixedThreadSeparation fixed_thread_separation(const PLMap& f, const PLMap& g, const PLMap& h, std::size_t depth) {
    if (depth < 1) {
        throw Error(ErrorCode::bad_depth, "depth must be >= 1");
    }
    for (const PLMap* k : {&f, &g}) {
        Distance defect = commutator_defect(*k, h);
        if (sgn(defect.value) != 0) {
            throw Error(ErrorCode::not_commuting, "map does not commute with the bonding map: defect " +
                                                      to_string(defect.value) + " at x = " + to_string(defect.witness));
        }
    }
    IntervalSet fix_f = fixed_points(f);
    IntervalSet fix_g = fixed_points(g);
    if (fix_f.empty() || fix_g.empty()) {
        throw Error(ErrorCode::empty_fixed_set, "a continuous self-map of [0, 1] must have a fixed point");
    }
    Rational delta = separation(fix_f, fix_g);
    Rational bound = delta / 2;
    return {std::move(delta), std::move(bound)};
}

} // namespace plim
