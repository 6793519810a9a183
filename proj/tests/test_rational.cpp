#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tensorcolor/rational.hpp"

using tc::Rat;

TEST_CASE("construction normalizes sign and gcd") {
    CHECK(Rat(2, 4) == Rat(1, 2));
    CHECK(Rat(-3, -6) == Rat(1, 2));
    CHECK(Rat(3, -6) == Rat(-1, 2));
    CHECK(Rat(0, 7) == Rat(0));
    CHECK(Rat(0, -7).den == 1);
    CHECK_THROWS_AS(Rat(1, 0), tc::InvalidParams);
}

TEST_CASE("arithmetic stays exact") {
    CHECK(Rat(1, 3) + Rat(1, 6) == Rat(1, 2));
    CHECK(Rat(2, 3) * Rat(3, 4) == Rat(1, 2));
    CHECK(Rat(1, 2) - Rat(1, 3) == Rat(1, 6));
    CHECK(Rat(1, 2) / Rat(1, 4) == Rat(2));
    CHECK(-Rat(1, 2) == Rat(-1, 2));
    CHECK_THROWS_AS(Rat(1) / Rat(0), tc::InvalidParams);
}

TEST_CASE("comparisons cross-multiply") {
    CHECK(Rat(1, 3) < Rat(34, 100));
    CHECK(Rat(1, 3) > Rat(33, 100));
    CHECK(Rat(1, 3) <= Rat(1, 3));
    CHECK(Rat(-1, 2) < Rat(0));
    CHECK(Rat(7, 40) >= Rat(7, 41));
    // near the int64 edge: 2^40-scale counts against 2^20-scale denominators
    CHECK(Rat((1LL << 40) + 1, 1LL << 20) > Rat(1LL << 40, 1LL << 20));
}

TEST_CASE("floor_mul computes floor(r*k)") {
    CHECK(Rat(1, 40).floor_mul(100) == 2);
    CHECK(Rat(1, 40).floor_mul(39) == 0);
    CHECK(Rat(2, 3).floor_mul(4) == 2);
    CHECK(Rat(0).floor_mul(99) == 0);
    CHECK(Rat(3).floor_mul(5) == 15);
    CHECK(Rat(-1, 3).floor_mul(2) == -1); // floor(-2/3)
}

TEST_CASE("parse accepts fractions, integers, decimals") {
    CHECK(Rat::parse("1/40") == Rat(1, 40));
    CHECK(Rat::parse("3") == Rat(3));
    CHECK(Rat::parse("0") == Rat(0));
    CHECK(Rat::parse("0.015") == Rat(3, 200));
    CHECK(Rat::parse("0.125") == Rat(1, 8));
    CHECK(Rat::parse("-0.5") == Rat(-1, 2));
    CHECK(Rat::parse("2/4") == Rat(1, 2));
    CHECK_THROWS_AS(Rat::parse("abc"), tc::InvalidParams);
    CHECK_THROWS_AS(Rat::parse(""), tc::InvalidParams);
    CHECK_THROWS_AS(Rat::parse("1/0"), tc::InvalidParams);
}

TEST_CASE("to_string round-trips through parse") {
    for (Rat r : {Rat(0), Rat(5), Rat(-7), Rat(1, 40), Rat(-3, 8), Rat(550, 7)}) {
        CHECK(Rat::parse(r.to_string()) == r);
    }
    CHECK(Rat(1, 40).to_string() == "1/40");
    CHECK(Rat(4).to_string() == "4");
}

TEST_CASE("is_zero and to_double") {
    CHECK(Rat(0).is_zero());
    CHECK_FALSE(Rat(1, 1000000).is_zero());
    CHECK(Rat(1, 2).to_double() == doctest::Approx(0.5));
}
