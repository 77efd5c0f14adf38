#include "mfcat/errors.hpp"
#include "mfcat/series.hpp"

#include <doctest.h>

using namespace mfcat;

TEST_CASE("parse and ord") {
    Series e7 = parse("x^3 + x*y^3");
    CHECK(e7.ord() == Ord{Ord::Kind::value, 3});
    CHECK(parse("x^2 + y^3").ord().n == 2);
    CHECK(parse("x - y^5").ord().n == 1);
    CHECK(parse("0").is_zero());
    CHECK(parse("0").ord().kind == Ord::Kind::infinite);
}

TEST_CASE("parse errors carry offsets") {
    try {
        parse("x + * y");
        FAIL("no error");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 4);
    }
    CHECK_THROWS_AS(parse("x y"), ParseError);
    CHECK_THROWS_AS(parse("(x + y"), ParseError);
}

TEST_CASE("compact notation") {
    CHECK(parse("x3+xy3", ParseOptions{true}) == parse("x^3 + x*y^3"));
    CHECK_THROWS_AS(parse("xy"), ParseError);
}

TEST_CASE("multiplication") {
    CHECK(parse("x") * parse("y") == parse("x*y"));
    Series t36 = parse("y") * (parse("y - x^2") * parse("y - 2*x^2"));
    CHECK(t36 == parse("y^3 - 3*x^2*y^2 + 2*x^4*y"));
    Series a = parse("x^2").truncate(4), b = parse("y^3").truncate(4);
    CHECK((a * b).is_zero());
    CHECK((a * b).precision() == 4);
}

TEST_CASE("invert_unit") {
    CHECK(parse("1 - x").invert_unit(4) == parse("1 + x + x^2 + x^3").truncate(4));
    Series t = parse("2 - x").invert_unit(3);
    CHECK(t == parse("1/2 + 1/4*x + 1/8*x^2").truncate(3));
    CHECK_THROWS(parse("x").invert_unit(4));
}

TEST_CASE("associates and exact division") {
    CHECK(are_associates(parse("x - y"), parse("2*y - 2*x")));
    CHECK_FALSE(are_associates(parse("x"), parse("x + y")));
    auto q = exact_divide(parse("x^2 - y^2"), parse("x - y"));
    REQUIRE(q);
    CHECK(*q == parse("x + y"));
    CHECK_FALSE(exact_divide(parse("x^2 + y"), parse("x")));
}
