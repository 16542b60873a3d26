#include <doctest.h>

#include "plim/error.hpp"
#include "plim/rational.hpp"
#include "support.hpp"

using namespace plim;
using plim::test::q;

TEST_CASE("rationals print with an explicit denominator") {
    CHECK(to_string(q(0)) == "0/1");
    CHECK(to_string(q(1)) == "1/1");
    CHECK(to_string(q(2, 4)) == "1/2");
    CHECK(to_string(q(3, -6)) == "-1/2");
}

TEST_CASE("canonical parser accepts exactly lowest-term p/q") {
    CHECK(parse_canonical_rational("2/3") == q(2, 3));
    CHECK(parse_canonical_rational("0/1") == q(0));
    CHECK(parse_canonical_rational("-7/2") == q(-7, 2));
    CHECK(parse_canonical_rational("1/340282366920938463463374607431768211457").has_value());

    for (const char* bad : {"2/4", "1", "0/2", "01/2", "1/02", "1/0", "-0/1", "+1/2", "1/-2", "a/2", "1/2x", "/2",
                            "1/", "", " 1/2"}) {
        CAPTURE(bad);
        CHECK_FALSE(parse_canonical_rational(bad).has_value());
    }
}

TEST_CASE("to_string and the canonical parser round-trip") {
    plim::test::Gen gen(7);
    for (int i = 0; i < 200; ++i) {
        Rational r = gen.unit(1000000000).value() - gen.unit().value();
        CHECK(parse_canonical_rational(to_string(r)) == r);
    }
}

TEST_CASE("UnitRational enforces [0, 1] and canonical form") {
    CHECK(UnitRational(2, 4).value() == q(1, 2));
    CHECK(to_string(UnitRational(2, 4)) == "1/2");
    CHECK(UnitRational(0, 1) < UnitRational(1, 3));
    CHECK(UnitRational(1, 1) == UnitRational(3, 3));
    CHECK_THROWS_AS(UnitRational(3, 2), Error);
    CHECK_THROWS_AS(UnitRational(-1, 5), Error);
    try {
        UnitRational bad(5, 4);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::value_out_of_range);
    }
}

TEST_CASE("denominator bit length") {
    CHECK(denominator_bits(q(1)) == 1);
    CHECK(denominator_bits(q(1, 2)) == 2);
    CHECK(denominator_bits(q(1, 255)) == 8);
    CHECK(denominator_bits(q(1, 256)) == 9);
}
