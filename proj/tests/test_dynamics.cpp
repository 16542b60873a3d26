#include <doctest.h>

#include <algorithm>

#include "plim/dynamics.hpp"
#include "plim/error.hpp"
#include "support.hpp"

using namespace plim;
using namespace plim::test;

namespace {

std::vector<std::vector<UnitRational>> coords_of(const BranchTree& tree) {
    std::vector<std::vector<UnitRational>> out;
    for (const auto& t : tree.branches) {
        out.emplace_back(t.coords().begin(), t.coords().end());
    }
    return out;
}

// Flat at 1/2 on [1/3, 2/3]; everything else steep.
PLMap plateau() {
    return map_of({{{0, 1}, {0, 1}}, {{1, 3}, {1, 2}}, {{2, 3}, {1, 2}}, {{1, 1}, {1, 1}}});
}

} // namespace

TEST_CASE("iterate examples") {
    CHECK(iterate(tent(), 1) == tent());
    CHECK(iterate(tent(), 2) == compose(tent(), tent()));
    CHECK(iterate(identity(), 10) == identity());
    CHECK(iterate(tent(), 5).piece_count() == 32);
}

TEST_CASE("iterate fails loudly past the breakpoint budget") {
    CHECK(iterate(tent(), 4, 17) == compose(tent(), compose(tent(), compose(tent(), tent()))));
    try {
        iterate(tent(), 5, 17);
        FAIL("expected budget-exceeded");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::budget_exceeded);
    }
    CHECK_THROWS_AS(iterate(tent(), 0), Error);
}

TEST_CASE("orbit examples") {
    CHECK(orbit(tent(), u(2, 3), 3) == std::vector{u(2, 3), u(2, 3), u(2, 3), u(2, 3)});
    CHECK(orbit(tent(), u(1, 2), 2) == std::vector{u(1, 2), u(1), u(0)});
    CHECK(orbit(identity(), u(3, 11), 4) == std::vector<UnitRational>(5, u(3, 11)));
    CHECK(orbit(tent(), u(1, 5), 0) == std::vector{u(1, 5)});
}

TEST_CASE("backward_branches examples") {
    auto a = backward_branches(tent(), u(2, 3), 2);
    CHECK(coords_of(a) == std::vector<std::vector<UnitRational>>{{u(2, 3), u(1, 3)}, {u(2, 3), u(2, 3)}});
    CHECK_FALSE(a.truncated);
    CHECK(a.interval_branches.empty());

    auto b = backward_branches(tent(), u(0), 2);
    CHECK(coords_of(b) == std::vector<std::vector<UnitRational>>{{u(0), u(0)}, {u(0), u(1)}});

    auto c = backward_branches(identity(), u(5, 9), 6);
    CHECK(coords_of(c) == std::vector<std::vector<UnitRational>>{std::vector<UnitRational>(6, u(5, 9))});

    auto d = backward_branches(tent(), u(1, 7), 1);
    CHECK(coords_of(d) == std::vector<std::vector<UnitRational>>{{u(1, 7)}});
}

TEST_CASE("tent map branch count doubles with depth for a generic root") {
    for (std::size_t depth = 1; depth <= 12; ++depth) {
        auto tree = backward_branches(tent(), u(2, 7), depth);
        CHECK(tree.branches.size() == (std::size_t{1} << (depth - 1)));
    }
}

TEST_CASE("branches are consistent, rooted and lexicographic") {
    Gen gen(8);
    for (int i = 0; i < 10; ++i) {
        auto h = gen.map(5, 20);
        auto root = gen.unit(20);
        auto tree = backward_branches(h, root, 5, 5000);
        auto coords = coords_of(tree);
        CHECK(std::is_sorted(coords.begin(), coords.end()));
        CHECK(std::adjacent_find(coords.begin(), coords.end()) == coords.end());
        for (auto& c : coords) {
            CHECK(c.front() == root);
            CHECK(c.size() == 5);
            CHECK_NOTHROW(make_thread(h, c));
        }
    }
}

TEST_CASE("max_branches truncates to a lexicographic prefix") {
    auto full = backward_branches(tent(), u(2, 7), 6);
    auto cut = backward_branches(tent(), u(2, 7), 6, 10);
    CHECK(cut.truncated);
    REQUIRE(cut.branches.size() == 10);
    for (std::size_t i = 0; i < 10; ++i) {
        CHECK(cut.branches[i] == full.branches[i]);
    }
    auto exact = backward_branches(tent(), u(2, 7), 6, 32);
    CHECK_FALSE(exact.truncated);
    CHECK(exact.branches.size() == 32);
    CHECK_THROWS_AS(backward_branches(tent(), u(1, 2), 0), Error);
    CHECK_THROWS_AS(backward_branches(tent(), u(1, 2), 3, 0), Error);
}

TEST_CASE("worker count does not change the output") {
    for (std::size_t cap : {unlimited, std::size_t{37}, std::size_t{1}}) {
        auto one = backward_branches(tent(), u(2, 3), 10, cap, 1);
        for (unsigned w : {2U, 3U, 8U}) {
            auto many = backward_branches(tent(), u(2, 3), 10, cap, w);
            CHECK(many.branches == one.branches);
            CHECK(many.truncated == one.truncated);
            CHECK(many.interval_branches == one.interval_branches);
        }
    }
    auto one = backward_branches(plateau(), u(1, 2), 5, 7, 1);
    for (unsigned w : {2U, 5U}) {
        auto many = backward_branches(plateau(), u(1, 2), 5, 7, w);
        CHECK(many.branches == one.branches);
        CHECK(many.interval_branches == one.interval_branches);
    }
}

TEST_CASE("flat pieces produce interval branch records") {
    auto tree = backward_branches(plateau(), u(1, 2), 2);
    // preimage of 1/2 is [1/3, 2/3]; the left endpoint represents it
    CHECK(coords_of(tree) == std::vector<std::vector<UnitRational>>{{u(1, 2), u(1, 3)}});
    REQUIRE(tree.interval_branches.size() == 1);
    CHECK(tree.interval_branches[0].position == 2);
    CHECK(tree.interval_branches[0].prefix == std::vector{u(1, 2)});
    CHECK(tree.interval_branches[0].set == IntervalSet::interval(u(1, 3), u(2, 3)));

    auto deeper = backward_branches(plateau(), u(1, 2), 4);
    for (const auto& t : deeper.branches) {
        CHECK_NOTHROW(make_thread(plateau(), {t.coords().begin(), t.coords().end()}));
    }
}

TEST_CASE("extending leaves of a shallow tree gives the deep tree") {
    const std::size_t a = 4;
    const std::size_t b = 3;
    auto deep = backward_branches(tent(), u(3, 5), a + b);
    std::vector<Thread> stitched;
    for (const auto& leaf : backward_branches(tent(), u(3, 5), a).branches) {
        for (const auto& ext : backward_branches(tent(), leaf[a - 1], b + 1).branches) {
            std::vector<UnitRational> coords(leaf.coords().begin(), leaf.coords().end());
            coords.insert(coords.end(), ext.coords().begin() + 1, ext.coords().end());
            stitched.push_back(make_thread(tent(), coords));
        }
    }
    CHECK(stitched == deep.branches);
}
