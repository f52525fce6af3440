#include <doctest.h>

#include "specnorm/colimit.hpp"

using namespace specnorm;

TEST_CASE("preset diagrams validate") {
    CHECK(validate_diagram(annulus_diagram()).ok);
    CHECK(validate_diagram(ball_diagram()).ok);
}

TEST_CASE("diagram validation catches structural mistakes") {
    CofinalDiagram d = annulus_diagram();
    SUBCASE("stage-0 slope must be below the basic period") {
        d.stages.front().slope = Rational(3, 2);
        CHECK_FALSE(validate_diagram(d).ok);
    }
    SUBCASE("slopes must increase") {
        d.stages.back().slope = Rational(1, 4);
        CHECK_FALSE(validate_diagram(d).ok);
    }
    SUBCASE("unit must be a degree-0 cocycle") {
        d.unit = gf2::Vector{};
        CHECK_FALSE(validate_diagram(d).ok);
    }
}

TEST_CASE("diagram stages grow by one family per period crossing") {
    const CofinalDiagram a = annulus_diagram();
    REQUIRE(a.stages.size() == 3);
    CHECK(a.stages[0].complex.size() == 2);
    CHECK(a.stages[1].complex.size() == 4);
    CHECK(a.stages[2].complex.size() == 6);

    const CofinalDiagram b = ball_diagram();
    CHECK(b.stages[0].complex.size() == 1);
    CHECK(b.stages[1].complex.size() == 3);
    CHECK(b.stages[2].complex.size() == 5);
}

TEST_CASE("colimit of the annulus keeps the unit") {
    const ColimitSpace s = colimit(annulus_diagram(), Window::full());
    CHECK(s.basis.dimension() == 6);
    CHECK_FALSE(s.unit_image.is_zero());
    CHECK(s.dimension_by_degree.at(0) == 3);
    CHECK(s.dimension_by_degree.at(1) == 3);
}

TEST_CASE("colimit of the ball kills the unit") {
    const ColimitSpace s = colimit(ball_diagram(), Window::full());
    CHECK(s.basis.dimension() == 3);
    CHECK(s.unit_image.is_zero());
}

TEST_CASE("unstabilized diagrams are refused") {
    CofinalDiagram d = annulus_diagram();
    d.stabilized = false;
    CHECK_THROWS_AS(colimit(d, Window::full()), std::invalid_argument);
    CHECK_THROWS_AS(c_sh(d), std::invalid_argument);
}

TEST_CASE("symplectic cohomology vanishing is read off the unit") {
    CHECK(sh_nonzero(annulus_diagram()));
    CHECK_FALSE(sh_nonzero(ball_diagram()));
}

TEST_CASE("the capacity of the annulus is infinite") {
    CHECK(c_sh(annulus_diagram()) == Bound::pos_inf());
}

TEST_CASE("the capacity of the ball is its first period") {
    CHECK(c_sh(ball_diagram()) == Bound::finite(Rational(1)));
}

TEST_CASE("appending an equal-slope stage changes nothing") {
    CofinalDiagram d = annulus_diagram();
    const ColimitSpace before = colimit(d, Window::full());
    append_same_slope_stage(d, Rational(7, 2));
    CHECK(validate_diagram(d).ok);
    const ColimitSpace after = colimit(d, Window::full());
    CHECK(after.basis.dimension() == before.basis.dimension());
    CHECK(after.unit_image.is_zero() == before.unit_image.is_zero());
    CHECK(sh_nonzero(d));
    CHECK_THROWS_AS(append_same_slope_stage(d, Rational(1, 4)), std::invalid_argument);
}

TEST_CASE("capacity bound for the ball") {
    const DomainModel d = ball_domain();
    const std::vector<ModelHamiltonian> hams = {
        make_model(d, make_H_zero_A(d, Rational(1, 2)), DifferentialSpec::zero(), "shallow"),
        make_model(d, make_H_zero_A(d, Rational(5, 2)), DifferentialSpec::zero(), "deep")};
    const ThmBReport rep = thmB_bound_check(ball_diagram(), hams);
    CHECK(rep.ok);
    CHECK(rep.c_sh_value == Bound::finite(Rational(1)));
    REQUIRE(rep.rows.size() == 2);
    CHECK(rep.rows[0].c1 == Rational(1, 2));
    CHECK(rep.rows[1].c1 == Rational(1));
    CHECK(rep.rows[1].gamma_value == Rational(1));
}

TEST_CASE("capacity bound refuses nonvanishing symplectic cohomology") {
    CHECK_THROWS_AS(thmB_bound_check(annulus_diagram(), {}), std::invalid_argument);
}

TEST_CASE("projection factorization bounds c(1) from below") {
    const DomainModel d = annulus_domain();
    const auto H = make_H_delta_A(d, Rational(1, 10), Rational(5, 2), Rational(2),
                                  Rational(1, 2));
    const auto m = make_model(d, H.profile, DifferentialSpec::zero(), "step");
    const CofinalDiagram diagram = annulus_diagram();

    const auto rep = factorization_check(diagram, m, H.classification, Rational(3, 10));
    CHECK(rep.ok);
    CHECK(rep.lower_bound == Rational(11, 5));
    CHECK(rep.c_value == Rational(9, 4));
    CHECK(rep.c_value >= rep.lower_bound);

    // eps outside (delta*A, eta_A) breaks the window separation
    CHECK_THROWS_AS(factorization_check(diagram, m, H.classification, Rational(1, 5)),
                    std::invalid_argument);
    CHECK_THROWS_AS(factorization_check(diagram, m, H.classification, Rational(3, 5)),
                    std::invalid_argument);
}
