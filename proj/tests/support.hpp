#pragma once

// Shared fixtures, generators and independent oracles for the test suites.
// The oracles here never call into the library's evaluation or solving
// code: they scan breakpoints linearly and locate roots by bisection.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "plim/plmap.hpp"
#include "plim/rational.hpp"

namespace plim::test {

inline Rational q(long p, long d = 1) { return rat(p, d); }
inline UnitRational u(long p, long d = 1) { return UnitRational(p, d); }

inline PLMap map_of(std::initializer_list<std::pair<std::pair<long, long>, std::pair<long, long>>> pts) {
    std::vector<Breakpoint> bps;
    for (const auto& [x, y] : pts) {
        bps.push_back({u(x.first, x.second), u(y.first, y.second)});
    }
    return make_plmap(std::move(bps));
}

inline PLMap identity() { return PLMap::identity(); }
inline PLMap tent() { return map_of({{{0, 1}, {0, 1}}, {{1, 2}, {1, 1}}, {{1, 1}, {0, 1}}}); }
inline PLMap halve() { return map_of({{{0, 1}, {0, 1}}, {{1, 1}, {1, 2}}}); }
inline PLMap reflect() { return map_of({{{0, 1}, {1, 1}}, {{1, 1}, {0, 1}}}); }

/// Five pieces, |slope| = 4 on each: 0→1→0→1→1/2→1.
inline PLMap steep() {
    return map_of({{{0, 1}, {0, 1}},
                   {{1, 4}, {1, 1}},
                   {{1, 2}, {0, 1}},
                   {{3, 4}, {1, 1}},
                   {{7, 8}, {1, 2}},
                   {{1, 1}, {1, 1}}});
}

// --- oracles ---------------------------------------------------------------

/// Linear scan of the breakpoints; independent of PLMap::operator().
inline Rational naive_eval(const PLMap& m, const Rational& x) {
    auto pts = m.breakpoints();
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        const Rational& x0 = pts[i].x.value();
        const Rational& x1 = pts[i + 1].x.value();
        if (x0 <= x && x <= x1) {
            const Rational& y0 = pts[i].y.value();
            const Rational& y1 = pts[i + 1].y.value();
            Rational t = (x - x0) / (x1 - x0);
            return y0 + t * (y1 - y0);
        }
    }
    return Rational(-1);
}

/// Simplest rational (smallest denominator) in the closed interval [lo, hi],
/// 0 <= lo <= hi, via the Stern–Brocot descent.
inline Rational simplest_between(Rational lo, Rational hi) {
    mpz_class fl = lo.get_num() / lo.get_den();
    if (Rational(fl) == lo) {
        return lo;
    }
    if (Rational(fl + 1) <= hi) {
        return Rational(fl + 1);
    }
    // lo, hi share the integer part fl; recurse on reciprocals of the
    // fractional parts.
    Rational a = lo - Rational(fl);
    Rational b = hi - Rational(fl);
    Rational inner = simplest_between(1 / b, 1 / a);
    Rational out = Rational(fl) + 1 / inner;
    out.canonicalize();
    return out;
}

/// Roots of m(x) − x found without solving linear equations: zeros at
/// grid points are taken directly; strict sign changes between adjacent
/// grid points are bisected to width 2^-80 and snapped to the simplest
/// rational in the bracket. Valid when roots have small denominators.
inline std::vector<Rational> bisection_fixed_points(const PLMap& m) {
    std::vector<Rational> grid;
    for (const auto& p : m.breakpoints()) {
        grid.push_back(p.x.value());
    }
    auto diff = [&](const Rational& x) -> Rational { return naive_eval(m, x) - x; };
    std::vector<Rational> roots;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (sgn(diff(grid[i])) == 0) {
            roots.push_back(grid[i]);
        }
        if (i + 1 == grid.size()) {
            break;
        }
        Rational lo = grid[i];
        Rational hi = grid[i + 1];
        int slo = sgn(diff(lo));
        int shi = sgn(diff(hi));
        if (slo == 0 || shi == 0 || slo == shi) {
            continue;
        }
        const Rational width = Rational(1) / Rational(mpz_class(1) << 80);
        while (hi - lo > width) {
            Rational mid = (lo + hi) / 2;
            int s = sgn(diff(mid));
            if (s == 0) {
                lo = hi = mid;
                break;
            }
            (s == slo ? lo : hi) = mid;
        }
        roots.push_back(simplest_between(lo, hi));
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

// --- generators --------------------------------------------------------------

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    std::uint64_t below(std::uint64_t n) { return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(rng_); }

    /// Uniform-ish rational in [0, 1] with denominator <= max_den.
    UnitRational unit(long max_den = 1000000) {
        long d = static_cast<long>(below(static_cast<std::uint64_t>(max_den))) + 1;
        long p = static_cast<long>(below(static_cast<std::uint64_t>(d) + 1));
        return UnitRational(p, d);
    }

    /// Random PL map with at most max_points breakpoints.
    PLMap map(std::size_t max_points = 12, long max_den = 1000000) {
        std::size_t n = 2 + below(max_points - 1);
        std::vector<UnitRational> xs{UnitRational(0, 1), UnitRational(1, 1)};
        while (xs.size() < n) {
            xs.push_back(unit(max_den));
            std::sort(xs.begin(), xs.end());
            xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
        }
        std::vector<Breakpoint> bps;
        for (auto& x : xs) {
            bps.push_back({std::move(x), unit(max_den)});
        }
        return make_plmap(std::move(bps));
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

} // namespace plim::test
