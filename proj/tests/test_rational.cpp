#include <doctest.h>

#include "specnorm/rational.hpp"

using namespace specnorm;

TEST_CASE("rational parsing is exact") {
    CHECK(parse_rational("5/2") == Rational(5, 2));
    CHECK(parse_rational("-1/3") == Rational(-1, 3));
    CHECK(parse_rational("7") == Rational(7));
    CHECK(parse_rational("-4") == Rational(-4));
    CHECK(parse_rational("0.25") == Rational(1, 4));
    CHECK(parse_rational("-2.5") == Rational(-5, 2));
    CHECK(parse_rational("0") == Rational(0));
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
}

TEST_CASE("rational formatting round-trips") {
    CHECK(format_rational(Rational(5, 2)) == "5/2");
    CHECK(format_rational(Rational(-7, 3)) == "-7/3");
    CHECK(format_rational(Rational(4)) == "4");
    CHECK(parse_rational(format_rational(Rational(22, 7))) == Rational(22, 7));
}

TEST_CASE("bounds order correctly") {
    const Bound n = Bound::neg_inf();
    const Bound p = Bound::pos_inf();
    const Bound a = Bound::finite(Rational(1, 2));
    const Bound b = Bound::finite(Rational(3, 2));
    CHECK(n < a);
    CHECK(a < b);
    CHECK(b < p);
    CHECK(n < p);
    CHECK(a == Bound::finite(Rational(1, 2)));
    CHECK(a.is_finite());
    CHECK_FALSE(p.is_finite());
    CHECK(a.value() == Rational(1, 2));
}
