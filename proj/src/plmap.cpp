#include "plim/plmap.hpp"

#include <algorithm>

#include "plim/error.hpp"

namespace plim {

namespace {

bool collinear(const Breakpoint& a, const Breakpoint& b, const Breakpoint& c) {
    Rational lhs = (b.y.value() - a.y.value()) * (c.x.value() - b.x.value());
    Rational rhs = (c.y.value() - b.y.value()) * (b.x.value() - a.x.value());
    return lhs == rhs;
}

std::vector<Breakpoint> drop_collinear(std::vector<Breakpoint> points) {
    std::vector<Breakpoint> out;
    out.reserve(points.size());
    for (auto& p : points) {
        while (out.size() >= 2 && collinear(out[out.size() - 2], out.back(), p)) {
            out.pop_back();
        }
        out.push_back(std::move(p));
    }
    return out;
}

// Value of the segment (x0, y0)-(x1, y1) at x; the caller guarantees x0 < x1.
Rational interpolate(const Breakpoint& a, const Breakpoint& b, const Rational& x) {
    return a.y.value() + (b.y.value() - a.y.value()) * (x - a.x.value()) / (b.x.value() - a.x.value());
}

// Abscissa in [a.x, b.x] where the segment takes value y; requires a.y != b.y.
Rational solve_on_piece(const Breakpoint& a, const Breakpoint& b, const Rational& y) {
    return a.x.value() + (y - a.y.value()) * (b.x.value() - a.x.value()) / (b.y.value() - a.y.value());
}

UnitRational unit(Rational r) { return UnitRational(std::move(r)); }

} // namespace

PLMap::PLMap() : points_{{UnitRational(0, 1), UnitRational(0, 1)}, {UnitRational(1, 1), UnitRational(1, 1)}} {}

PLMap PLMap::make(std::vector<Breakpoint> points) {
    if (points.size() < 2 || points.front().x != UnitRational(0, 1) || points.back().x != UnitRational(1, 1)) {
        throw Error(ErrorCode::domain_not_covered, "breakpoints must start at x = 0 and end at x = 1");
    }
    for (std::size_t i = 1; i < points.size(); ++i) {
        if (!(points[i - 1].x < points[i].x)) {
            throw Error(ErrorCode::non_monotone_x,
                        "breakpoint abscissae not strictly increasing at index " + std::to_string(i));
        }
    }
    return PLMap(drop_collinear(std::move(points)));
}

PLMap make_plmap(std::vector<Breakpoint> points) { return PLMap::make(std::move(points)); }

Rational PLMap::slope(std::size_t piece) const {
    const auto& a = points_.at(piece);
    const auto& b = points_.at(piece + 1);
    return (b.y.value() - a.y.value()) / (b.x.value() - a.x.value());
}

UnitRational PLMap::operator()(const UnitRational& x) const {
    auto it = std::lower_bound(points_.begin(), points_.end(), x,
                               [](const Breakpoint& p, const UnitRational& v) { return p.x < v; });
    if (it->x == x) {
        return it->y;
    }
    return unit(interpolate(*std::prev(it), *it, x.value()));
}

PLMap compose(const PLMap& outer, const PLMap& inner) {
    auto outer_points = outer.breakpoints();
    auto inner_points = inner.breakpoints();

    std::vector<UnitRational> xs;
    xs.reserve(inner_points.size() + outer_points.size());
    for (std::size_t i = 0; i + 1 < inner_points.size(); ++i) {
        const auto& a = inner_points[i];
        const auto& b = inner_points[i + 1];
        xs.push_back(a.x);
        if (a.y == b.y) {
            continue;
        }
        const auto& lo = std::min(a.y, b.y);
        const auto& hi = std::max(a.y, b.y);
        auto first = std::upper_bound(outer_points.begin(), outer_points.end(), lo,
                                      [](const UnitRational& v, const Breakpoint& p) { return v < p.x; });
        for (auto it = first; it != outer_points.end() && it->x < hi; ++it) {
            xs.push_back(unit(solve_on_piece(a, b, it->x.value())));
        }
    }
    xs.push_back(inner_points.back().x);
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

    std::vector<Breakpoint> points;
    points.reserve(xs.size());
    for (auto& x : xs) {
        UnitRational y = outer(inner(x));
        points.push_back({std::move(x), std::move(y)});
    }
    return PLMap::make(std::move(points));
}

Distance sup_dist(const PLMap& a, const PLMap& b) {
    std::vector<UnitRational> xs;
    for (const auto& p : a.breakpoints()) {
        xs.push_back(p.x);
    }
    for (const auto& p : b.breakpoints()) {
        xs.push_back(p.x);
    }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

    Distance best{Rational(-1), UnitRational()};
    for (const auto& x : xs) {
        Rational d = abs_value(a(x).value() - b(x).value());
        if (d > best.value) {
            best = {std::move(d), x};
        }
    }
    return best;
}

Distance commutator_defect(const PLMap& f, const PLMap& g) {
    return sup_dist(compose(f, g), compose(g, f));
}

IntervalSet fixed_points(const PLMap& m) {
    auto points = m.breakpoints();
    std::vector<Interval> found;
    for (std::size_t i = 0; i + 1 < points.size(); ++i) {
        const auto& a = points[i];
        const auto& b = points[i + 1];
        Rational s = m.slope(i);
        if (s == 1) {
            if (a.y == a.x) {
                found.push_back({a.x, b.x});
            }
            continue;
        }
        // a.y + s (x - a.x) = x
        Rational x = (a.y.value() - s * a.x.value()) / (1 - s);
        if (a.x.value() <= x && x <= b.x.value()) {
            UnitRational u = unit(std::move(x));
            found.push_back({u, u});
        }
    }
    return IntervalSet::from_intervals(std::move(found));
}

Surjectivity is_surjective(const PLMap& m) {
    auto points = m.breakpoints();
    auto [lo, hi] = std::minmax_element(points.begin(), points.end(),
                                        [](const Breakpoint& p, const Breakpoint& q) { return p.y < q.y; });
    Surjectivity out;
    out.range = IntervalSet::interval(lo->y, hi->y);
    out.surjective = out.range == IntervalSet::unit();
    return out;
}

IntervalSet image(const PLMap& m, const IntervalSet& s) {
    auto points = m.breakpoints();
    std::vector<Interval> out;
    for (const auto& iv : s.intervals()) {
        for (std::size_t i = 0; i + 1 < points.size(); ++i) {
            const auto& a = points[i];
            const auto& b = points[i + 1];
            if (b.x < iv.lo) {
                continue;
            }
            if (iv.hi < a.x) {
                break;
            }
            const auto& lo = std::max(a.x, iv.lo);
            const auto& hi = std::min(b.x, iv.hi);
            UnitRational ylo = m(lo);
            UnitRational yhi = m(hi);
            if (yhi < ylo) {
                std::swap(ylo, yhi);
            }
            out.push_back({std::move(ylo), std::move(yhi)});
        }
    }
    return IntervalSet::from_intervals(std::move(out));
}

IntervalSet preimage(const PLMap& m, const IntervalSet& s) {
    auto points = m.breakpoints();
    std::vector<Interval> out;
    for (std::size_t i = 0; i + 1 < points.size(); ++i) {
        const auto& a = points[i];
        const auto& b = points[i + 1];
        const auto& ylo = std::min(a.y, b.y);
        const auto& yhi = std::max(a.y, b.y);
        for (const auto& iv : s.intervals()) {
            if (iv.hi < ylo) {
                continue;
            }
            if (yhi < iv.lo) {
                break;
            }
            if (a.y == b.y) {
                out.push_back({a.x, b.x});
                continue;
            }
            // The clipped target [c, d] lies within the piece's range, so
            // both solutions land inside [a.x, b.x].
            const auto& c = std::max(ylo, iv.lo);
            const auto& d = std::min(yhi, iv.hi);
            UnitRational xc = unit(solve_on_piece(a, b, c.value()));
            UnitRational xd = (c == d) ? xc : unit(solve_on_piece(a, b, d.value()));
            if (xd < xc) {
                std::swap(xc, xd);
            }
            out.push_back({std::move(xc), std::move(xd)});
        }
    }
    return IntervalSet::from_intervals(std::move(out));
}

SlopeProfile slope_profile(const PLMap& m, const Rational& bound) {
    if (sgn(bound) <= 0) {
        throw Error(ErrorCode::precondition, "slope bound must be positive");
    }
    SlopeProfile out;
    out.bound = bound;
    for (std::size_t i = 0; i < m.piece_count(); ++i) {
        out.slopes.push_back(m.slope(i));
    }
    auto points = m.breakpoints();
    for (std::size_t i = 1; i < out.slopes.size(); ++i) {
        if (sgn(out.slopes[i - 1]) != sgn(out.slopes[i])) {
            out.critical.push_back(points[i].x);
        }
    }
    bool constant = true;
    for (const auto& s : out.slopes) {
        if (sgn(s) == 0) {
            continue;
        }
        Rational a = abs_value(s);
        if (!out.min_abs_slope) {
            out.min_abs_slope = a;
        } else {
            constant = constant && a == *out.min_abs_slope;
            if (a < *out.min_abs_slope) {
                out.min_abs_slope = a;
            }
        }
    }
    out.exceeds_bound = out.min_abs_slope && *out.min_abs_slope > bound;
    out.constant_abs_slope = out.min_abs_slope && constant;
    return out;
}

std::size_t max_denominator_bits(const PLMap& m) {
    std::size_t bits = 0;
    for (const auto& p : m.breakpoints()) {
        bits = std::max({bits, denominator_bits(p.x.value()), denominator_bits(p.y.value())});
    }
    return bits;
}

} // namespace plim
