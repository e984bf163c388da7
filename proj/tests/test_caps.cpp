#include "supercount/caps.hpp"

#include "doctest.h"

using namespace supercount;

TEST_SUITE("caps") {

TEST_CASE("defaults") {
    Caps def = parse_caps(nullptr);
    CHECK(def.oracle == 1000000);
    CHECK(def.direct == 200000);
    Caps empty = parse_caps("");
    CHECK(empty.oracle == def.oracle);
    CHECK(empty.direct == def.direct);
}

TEST_CASE("overrides") {
    Caps both = parse_caps("oracle=5000,direct=77");
    CHECK(both.oracle == 5000);
    CHECK(both.direct == 77);
    Caps one = parse_caps("direct=300000");
    CHECK(one.oracle == 1000000);
    CHECK(one.direct == 300000);
}

TEST_CASE("rejects malformed input") {
    CHECK_THROWS_AS(parse_caps("oracle"), ParseError);
    CHECK_THROWS_AS(parse_caps("budget=10"), ParseError);
    CHECK_THROWS_AS(parse_caps("oracle=1"), ParseError);
    CHECK_THROWS_AS(parse_caps("oracle=ten"), error);
}

}  // TEST_SUITE
