#include <doctest.h>

#include "staudt/errors.hpp"
#include "staudt/plane.hpp"
#include "staudt/textio.hpp"

using namespace staudt;

namespace {
const std::vector<std::string> XYZ{"x", "y", "z"};
}

TEST_CASE("rational literals") {
    CHECK(parse_rational("7") == Rational(7));
    CHECK(parse_rational("-3/4") == Rational(-3, 4));
    CHECK(parse_rational(" 5/10 ") == Rational(1, 2));
    CHECK_THROWS_AS(parse_rational("1/0"), parse_error);
    CHECK_THROWS_AS(parse_rational("a"), parse_error);
}

TEST_CASE("scalar parsing respects the field") {
    GroundField f7 = GroundField::prime(7);
    CHECK(parse_scalar("10", f7).res() == 3);
    CHECK(parse_scalar("-1", f7).res() == 6);
    CHECK(parse_scalar("1/2", f7).res() == 4); // 2 * 4 = 8 = 1
    GroundField q = GroundField::rationals();
    CHECK(parse_scalar("-3/4", q).rat() == Rational(-3, 4));
}

TEST_CASE("polynomial parsing round trips and normalizes") {
    GroundField q = GroundField::rationals();
    MultiPoly p = parse_poly("3/4*x^2*y - z + x^2*y", q, XYZ);
    CHECK(p == parse_poly("7/4*x^2*y - z", q, XYZ));
    CHECK(parse_poly(p.str(XYZ), q, XYZ) == p);
    CHECK(parse_poly("(x + y)^2 - x^2 - 2*x*y", q, XYZ) == parse_poly("y^2", q, XYZ));
    CHECK_THROWS_AS(parse_poly("x + ", q, XYZ), parse_error);
    CHECK_THROWS_AS(parse_poly("w", q, XYZ), parse_error);
}

TEST_CASE("point and line literals") {
    GroundField q = GroundField::rationals();
    ProjPoint p = parse_point("[1:2:3]", q);
    CHECK(p == ProjPoint::of_ints(q, 2, 4, 6));
    CHECK(parse_point("[ -1 : 0 : 1/2 ]", q) == ProjPoint::of_ints(q, -2, 0, 1));
    CHECK_THROWS_AS(parse_point("[0:0:0]", q), domain_error);
    CHECK_THROWS_AS(parse_point("(1:2:3)", q), parse_error);

    ProjLine l = parse_line("<1:0:-1>", q);
    CHECK(l.incident(ProjPoint::of_ints(q, 1, 5, 1)));
    CHECK(parse_line("[1:0:-1]", q) == l);
}

TEST_CASE("rational set literals with ranges") {
    // range supplies -2..3; the standalone 1 is a duplicate, 3/2 is not
    auto xs = parse_rational_set("{1, 3/2, -2..3}");
    REQUIRE(xs.size() == 7);
    CHECK(xs.front() == Rational(-2));
    CHECK(xs.back() == Rational(3));

    auto ys = parse_rational_set("{-2,...,3,1/2}");
    REQUIRE(ys.size() == 7);
    CHECK(ys[0] == Rational(-2));
    CHECK(ys[3] == Rational(1, 2));
    CHECK(ys.back() == Rational(3));

    CHECK(parse_rational_set("{}").empty());
    CHECK_THROWS_AS(parse_rational_set("1,2"), parse_error);
    CHECK_THROWS_AS(parse_rational_set("{...,3}"), parse_error);
}

TEST_CASE("exponent vector literals") {
    Monomial m = parse_exponent_vector("(2,0,3)");
    REQUIRE(m.e.size() == 3);
    CHECK(m.e[0] == 2);
    CHECK(m.e[1] == 0);
    CHECK(m.e[2] == 3);
    CHECK_THROWS_AS(parse_exponent_vector("2,0,3"), parse_error);
}
