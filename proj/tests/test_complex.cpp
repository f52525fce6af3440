#include <doctest.h>

#include "specnorm/complex.hpp"

using namespace specnorm;

namespace {

OrbitGenerator gen(const std::string& id, int degree, Rational action, int group) {
    OrbitGenerator g;
    g.id = id;
    g.degree = degree;
    g.action = std::move(action);
    g.group = group;
    return g;
}

// g2 in degree 0 with d(g2) = g0 + g1 in degree 1, actions 0, 1, 2.
FilteredComplex three_generator_example() {
    FilteredComplex c;
    c.generators = {gen("g0", 1, Rational(0), 0), gen("g1", 1, Rational(1), 1),
                    gen("g2", 0, Rational(2), 2)};
    c.differential = gf2::Matrix::zero(3, 3);
    c.differential.set_column(2, gf2::Vector({0, 1}));
    return c;
}

}  // namespace

TEST_CASE("validation accepts the basic example") {
    CHECK(validate(three_generator_example()).ok);
}

TEST_CASE("validation rejects broken differentials") {
    FilteredComplex c = three_generator_example();

    SUBCASE("action raised") {
        c.differential = gf2::Matrix::zero(3, 3);
        c.differential.set_column(0, gf2::Vector({1}));  // degree ok? g0 deg 1 -> g1 deg 1
        const auto report = validate(c);
        CHECK_FALSE(report.ok);
    }
    SUBCASE("degree wrong") {
        c.differential = gf2::Matrix::zero(3, 3);
        c.differential.set_column(2, gf2::Vector({2}));
        CHECK_FALSE(validate(c).ok);
    }
    SUBCASE("square nonzero") {
        FilteredComplex d;
        d.generators = {gen("a", 2, Rational(0), 0), gen("b", 1, Rational(1), 1),
                        gen("c", 0, Rational(2), 2)};
        d.differential = gf2::Matrix::zero(3, 3);
        d.differential.set_column(2, gf2::Vector({1}));
        d.differential.set_column(1, gf2::Vector({0}));
        CHECK_FALSE(validate(d).ok);
    }
    SUBCASE("sort order violated") {
        std::swap(c.generators[0], c.generators[1]);
        c.differential = gf2::Matrix::zero(3, 3);
        CHECK_FALSE(validate(c).ok);
    }
}

TEST_CASE("window endpoints must avoid the spectrum") {
    const FilteredComplex c = three_generator_example();
    CHECK_THROWS_AS(window_indices(c, Window::below(Rational(1))), std::invalid_argument);
    CHECK_THROWS_AS(window_indices(c, Window::above(Rational(0))), std::invalid_argument);
    CHECK(window_indices(c, Window::below(Rational(3, 2))) == std::vector<int>{0, 1});
    CHECK(window_indices(c, Window::full()) == std::vector<int>{0, 1, 2});
}

TEST_CASE("window subquotient drops entries below the window") {
    const FilteredComplex c = three_generator_example();
    const FilteredComplex sub = window_subquotient(c, Window::above(Rational(1, 2)));
    REQUIRE(sub.size() == 2);
    CHECK(sub.generators[0].id == "g1");
    // d(g2) = g0 + g1 compresses to g1 alone
    CHECK(sub.differential.column(1) == gf2::Vector({0}));
    CHECK(validate(sub).ok);
}

TEST_CASE("cohomology of the example") {
    const FilteredComplex c = three_generator_example();
    SUBCASE("full window") {
        const auto h = cohomology(c);
        // ker in degree 1 is spanned by g0, g1; image is g0 + g1
        const auto dims = h.dimension_by_degree();
        CHECK(h.dimension() == 1);
        CHECK(dims.at(1) == 1);
    }
    SUBCASE("window isolating the pair") {
        const auto h = cohomology(c, Window::above(Rational(1, 2)));
        CHECK(h.dimension() == 0);  // g2 kills g1 inside, g2 is not closed there? g2 maps to g1
    }
    SUBCASE("zero differential counts generators") {
        FilteredComplex z = c;
        z.differential = gf2::Matrix::zero(3, 3);
        CHECK(cohomology(z).dimension() == 3);
    }
}

TEST_CASE("class coordinates express cocycles in the basis") {
    const FilteredComplex c = three_generator_example();
    const auto h = cohomology(c);
    REQUIRE(h.dimension() == 1);
    // g0 and g1 represent the same class
    const auto a = class_coordinates(c, h, gf2::Vector({0}));
    const auto b = class_coordinates(c, h, gf2::Vector({1}));
    REQUIRE(a);
    REQUIRE(b);
    CHECK(*a == *b);
    CHECK_FALSE(a->is_zero());
    // the coboundary is the zero class
    const auto z = class_coordinates(c, h, gf2::Vector({0, 1}));
    REQUIRE(z);
    CHECK(z->is_zero());
    // a non-cocycle has no coordinates
    CHECK_FALSE(class_coordinates(c, h, gf2::Vector({2})).has_value());
}

TEST_CASE("barcode of a zero differential is all infinite bars") {
    FilteredComplex c = three_generator_example();
    c.differential = gf2::Matrix::zero(3, 3);
    const auto bars = barcode(c);
    REQUIRE(bars.size() == 3);
    for (const auto& b : bars) CHECK_FALSE(b.death.has_value());
}

TEST_CASE("barcode pairs an acyclic pair into one finite bar") {
    FilteredComplex c;
    c.generators = {gen("a", 1, Rational(0), 0), gen("b", 0, Rational(1), 1)};
    c.differential = gf2::Matrix::zero(2, 2);
    c.differential.set_column(1, gf2::Vector({0}));
    const auto bars = barcode(c);
    REQUIRE(bars.size() == 1);
    CHECK(bars[0].birth == Rational(0));
    REQUIRE(bars[0].death.has_value());
    CHECK(*bars[0].death == Rational(1));
    CHECK(bars[0].degree == 1);
}

TEST_CASE("barcode of the example pairs the younger class with g2") {
    // elder rule: the class born at g0 persists; the g1-born class dies at 2
    const auto bars = barcode(three_generator_example());
    REQUIRE(bars.size() == 2);
    CHECK(bars[0].birth == Rational(0));
    CHECK_FALSE(bars[0].death.has_value());
    CHECK(bars[1].birth == Rational(1));
    REQUIRE(bars[1].death.has_value());
    CHECK(*bars[1].death == Rational(2));
}

TEST_CASE("barcode csv formatting") {
    const auto csv = barcode_csv(barcode(three_generator_example()));
    CHECK(csv == "birth,death,degree\n0,inf,1\n1,2,1\n");
}
