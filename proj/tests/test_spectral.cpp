#include <doctest.h>

#include "specnorm/spectral.hpp"

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

FilteredComplex three_generator_example() {
    FilteredComplex c;
    c.generators = {gen("g0", 1, Rational(0), 0), gen("g1", 1, Rational(1), 1),
                    gen("g2", 0, Rational(2), 2)};
    c.differential = gf2::Matrix::zero(3, 3);
    c.differential.set_column(2, gf2::Vector({0, 1}));
    return c;
}

const RadialProfile& sandwich_profile() {
    static const RadialProfile p = RadialProfile::from_breakpoints(
        {Rational(0), Rational(1, 3), Rational(1)},
        {Rational(-1), Rational(-1), Rational(0)}, Rational(0));
    return p;
}

}  // namespace

TEST_CASE("spectral invariant picks the cheapest representative") {
    const FilteredComplex c = three_generator_example();
    // g0 and g1 are cohomologous; the cheapest representative is g0
    const auto r = spectral_invariant(c, gf2::Vector({1}), "[g1]");
    CHECK_FALSE(r.zero_class);
    CHECK(r.value == Rational(0));
    CHECK(r.witness == gf2::Vector({0}));
    CHECK(r.method == "reduction");

    const auto b = spectral_invariant_brute(c, gf2::Vector({1}));
    CHECK(b.value == r.value);
    CHECK(b.witness == r.witness);
}

TEST_CASE("the zero class is a sentinel, not a number") {
    const FilteredComplex c = three_generator_example();
    const auto r = spectral_invariant(c, gf2::Vector({0, 1}), "0");
    CHECK(r.zero_class);
    const auto b = spectral_invariant_brute(c, gf2::Vector({0, 1}));
    CHECK(b.zero_class);
}

TEST_CASE("non-cocycles are rejected") {
    const FilteredComplex c = three_generator_example();
    CHECK_THROWS_AS(spectral_invariant(c, gf2::Vector({2})), std::invalid_argument);
}

TEST_CASE("c(1) of the step Hamiltonian is the inner plateau depth") {
    const DomainModel d = annulus_domain();
    const auto H = make_H_delta_A(d, Rational(1, 10), Rational(5, 2), Rational(2),
                                  Rational(1, 2));
    const auto m = make_model(d, H.profile, DifferentialSpec::zero(), "step");
    const auto r = c_unit(m);
    CHECK(r.value == Rational(9, 4));  // (1 - delta) * A
}

TEST_CASE("c(1) of the wedge is its depth") {
    const DomainModel d = annulus_domain();
    const auto m = make_model(d, make_H_zero_A(d, Rational(5, 2)));
    CHECK(c_unit(m).value == Rational(5, 2));
}

TEST_CASE("c(1) of the zero Hamiltonian vanishes") {
    const DomainModel d = annulus_domain();
    const auto m = make_model(d, RadialProfile::zero());
    CHECK(c_unit(m).value == Rational(0));
    CHECK(gamma(m) == Rational(0));
    CHECK(hofer_norm(m) == Rational(0));
}

TEST_CASE("contraction rescales c(1) exactly") {
    const DomainModel d = annulus_domain();
    const auto wedge = make_H_zero_A(d, Rational(5, 2));
    const Rational r(1, 3);
    const auto m = make_model(d, contract(wedge, r));
    CHECK(c_unit(m).value == r * Rational(5, 2));
}

TEST_CASE("spectral norm of the wedge equals its Hofer norm") {
    const DomainModel d = annulus_domain();
    const auto m = make_model(d, make_H_zero_A(d, Rational(5, 2)));
    CHECK(gamma(m) == Rational(5, 2));
    CHECK(hofer_norm(m) == Rational(5, 2));
    CHECK(gamma(m) <= hofer_norm(m));
}

TEST_CASE("ball unit saturates at the first family") {
    const DomainModel d = ball_domain();
    SUBCASE("deep wedge caps at 1") {
        const auto m = make_model(d, make_H_zero_A(d, Rational(5, 2)));
        CHECK(c_unit(m).value == Rational(1));
        CHECK(gamma(m) == Rational(1));
    }
    SUBCASE("shallow wedge keeps its depth") {
        const auto m = make_model(d, make_H_zero_A(d, Rational(1, 2)));
        CHECK(c_unit(m).value == Rational(1, 2));
        CHECK(gamma(m) == Rational(1, 2));
    }
}

TEST_CASE("embedding distance equals the scale gap") {
    const DomainModel d = annulus_domain();
    const auto m = make_model(d, sandwich_profile());
    CHECK(embedding_distance(m, Rational(1), Rational(1)) == Rational(0));
    CHECK(embedding_distance(m, Rational(1, 2), Rational(0)) == Rational(1, 2));
    // w = 2 degenerates the scaled slope (it hits a period); the canonical
    // sandwich fallback still certifies the distance
    CHECK(embedding_distance(m, Rational(3), Rational(1)) == Rational(2));
    CHECK(embedding_distance(m, Rational(1), Rational(3)) == Rational(2));
}

TEST_CASE("embedding distance checks its sandwich preconditions") {
    const DomainModel d = annulus_domain();
    const auto m = make_model(d, make_H_zero_A(d, Rational(5, 2)));  // depth 5/2, not 1
    CHECK_THROWS_AS(embedding_distance(m, Rational(1), Rational(0)), std::invalid_argument);
}

TEST_CASE("axiom suite passes on comparable wedges") {
    const DomainModel d = annulus_domain();
    const auto deep = make_model(d, make_H_zero_A(d, Rational(5, 2)));
    const auto flat = make_model(d, make_H_zero_A(d, Rational(3, 2)));
    const auto report = axiom_suite({{deep, flat}});
    CHECK(report.ok);
    // monotonicity applies: deep <= flat pointwise
    bool saw_monotonicity = false;
    for (const auto& c : report.checks)
        if (c.name.find("monotonicity") != std::string::npos) saw_monotonicity = true;
    CHECK(saw_monotonicity);
}

TEST_CASE("triangle inequality on rescalings of the sandwich") {
    const DomainModel d = annulus_domain();
    const auto check =
        triangle_check(d, sandwich_profile(), Rational(1, 2), Rational(3, 4));
    CHECK(check.ok);
}

TEST_CASE("skeleton value lemma replay") {
    const DomainModel d = annulus_domain();
    const auto flat = RadialProfile::from_breakpoints(
        {Rational(0), Rational(1, 3), Rational(1)},
        {Rational(-5, 2), Rational(-5, 2), Rational(0)}, Rational(0));
    SUBCASE("flat-bottomed profile") {
        const auto m = make_model(d, flat);
        const auto rep = skeleton_lemma_check(m, Rational(5, 2));
        CHECK(rep.ok);
        CHECK(rep.value == Rational(5, 2));
    }
    SUBCASE("deeper flat bottom") {
        const auto deep = scale_profile(flat, Rational(3, 2));  // depth 15/4
        const auto m = make_model(d, deep);
        const auto rep = skeleton_lemma_check(m, Rational(15, 4));
        CHECK(rep.ok);
        CHECK(rep.value == Rational(15, 4));
    }
    SUBCASE("mismatched depth is a precondition error") {
        const auto m = make_model(d, flat);
        CHECK_THROWS_AS(skeleton_lemma_check(m, Rational(3)), std::invalid_argument);
    }
    SUBCASE("the wedge has no flat inner region") {
        const auto m = make_model(d, make_H_zero_A(d, Rational(5, 2)));
        CHECK_THROWS_AS(skeleton_lemma_check(m, Rational(5, 2)), std::invalid_argument);
    }
    SUBCASE("vanishing symplectic cohomology is refused") {
        const DomainModel b = ball_domain();
        const auto m = make_model(b, make_H_zero_A(b, Rational(5, 2)));
        CHECK_THROWS_AS(skeleton_lemma_check(m, Rational(5, 2)), std::invalid_argument);
    }
}
