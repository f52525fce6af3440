#include <doctest.h>

#include "specnorm/radial.hpp"

using namespace specnorm;

TEST_CASE("eta measures distance to the positive spectrum") {
    const ReebSpectrumModel reeb;  // arithmetic, t0 = 1
    CHECK(eta(reeb, Rational(5, 2)) == Rational(1, 2));
    CHECK(eta(reeb, Rational(3, 10)) == Rational(7, 10));  // nearest period is 1, not 0
    CHECK(eta(reeb, Rational(1, 2)) == Rational(1, 2));
    CHECK(eta(reeb, Rational(7, 4)) == Rational(1, 4));
    CHECK(eta(reeb, Rational(2)) == Rational(0));
    CHECK_THROWS_AS(eta(reeb, Rational(-1)), std::invalid_argument);
}

TEST_CASE("spectrum membership and enumeration") {
    const ReebSpectrumModel reeb;
    CHECK(reeb.contains(Rational(3)));
    CHECK_FALSE(reeb.contains(Rational(5, 2)));
    CHECK_FALSE(reeb.contains(Rational(0)));
    const auto ps = reeb.periods_in(Rational(0), Rational(5, 2));
    REQUIRE(ps.size() == 2);
    CHECK(ps[0].period == Rational(1));
    CHECK(ps[1].period == Rational(2));
    CHECK(reeb.min_period() == Rational(1));
}

TEST_CASE("profile basics") {
    const auto h = RadialProfile::from_breakpoints(
        {Rational(0), Rational(1, 2), Rational(1)},
        {Rational(-1), Rational(-1), Rational(0)}, Rational(0));
    CHECK(h.segment_slope(0) == Rational(0));
    CHECK(h.segment_slope(1) == Rational(2));
    CHECK(h.segment_slope(2) == Rational(0));
    CHECK(h.value_at(Rational(1, 4)) == Rational(-1));
    CHECK(h.value_at(Rational(3, 4)) == Rational(-1, 2));
    CHECK(h.value_at(Rational(5)) == Rational(0));
    CHECK(h.is_compactly_supported());
    CHECK(h.min_on_support() == Rational(-1));
    CHECK(h.max_on_support() == Rational(0));

    CHECK_THROWS_AS(RadialProfile::from_breakpoints({Rational(1)}, {Rational(0)}, Rational(0)),
                    std::invalid_argument);
    CHECK_THROWS_AS(RadialProfile::from_breakpoints({Rational(0), Rational(0)},
                                                    {Rational(0), Rational(0)}, Rational(0)),
                    std::invalid_argument);
}

TEST_CASE("profiles with a slope on the spectrum are rejected") {
    const ReebSpectrumModel reeb;
    const auto bad = RadialProfile::from_breakpoints(
        {Rational(0), Rational(1)}, {Rational(-1), Rational(0)}, Rational(0));
    CHECK_THROWS_AS(validate_profile(reeb, bad), std::invalid_argument);
    const auto good = RadialProfile::from_breakpoints(
        {Rational(0), Rational(1)}, {Rational(-5, 2), Rational(0)}, Rational(1, 2));
    CHECK_NOTHROW(validate_profile(reeb, good));
}

TEST_CASE("H_{delta,A} orbit inventory and action windows") {
    const DomainModel d = annulus_domain();
    const auto H = make_H_delta_A(d, Rational(1, 10), Rational(5, 2), Rational(2),
                                  Rational(1, 2));
    const auto& cls = H.classification;
    CHECK(cls.eta_A == Rational(1, 2));
    CHECK(cls.r_I == Rational(9, 4));
    CHECK(cls.r_IV == Rational(0));
    CHECK(cls.II_lo == Rational(47, 20));
    CHECK(cls.II_hi == Rational(49, 20));
    CHECK(cls.III_lo == Rational(1));
    CHECK(cls.III_hi == Rational(2));

    OrbitInventory inv = enumerate_orbits(d, H.profile);
    CHECK(inv.generator_count() == 12);
    classify_H_delta_A_orbits(inv, cls);
    for (const auto& c : inv.constants) {
        if (c.type == OrbitType::I) CHECK(c.action == cls.r_I);
        if (c.type == OrbitType::IV) CHECK(c.action == Rational(0));
    }
    int n_II = 0, n_III = 0;
    for (const auto& f : inv.families) {
        if (f.type == OrbitType::II) {
            ++n_II;
            CHECK(f.action >= cls.II_lo);
            CHECK(f.action <= cls.II_hi);
        }
        if (f.type == OrbitType::III) {
            ++n_III;
            CHECK(f.action >= cls.III_lo);
            CHECK(f.action <= cls.III_hi);
        }
    }
    CHECK(n_II == 2);
    CHECK(n_III == 2);
}

TEST_CASE("H_{delta,A} parameter validation") {
    const DomainModel d = annulus_domain();
    CHECK_THROWS_AS(make_H_delta_A(d, Rational(0), Rational(5, 2), Rational(2), Rational(1, 2)),
                    std::invalid_argument);
    CHECK_THROWS_AS(make_H_delta_A(d, Rational(1, 10), Rational(2), Rational(2), Rational(1, 2)),
                    std::invalid_argument);  // A on the spectrum
    CHECK_THROWS_AS(make_H_delta_A(d, Rational(1, 10), Rational(5, 2), Rational(2), Rational(1)),
                    std::invalid_argument);  // sigma not below T0
}

TEST_CASE("separation of the action windows") {
    const DomainModel d = annulus_domain();
    const auto H = make_H_delta_A(d, Rational(1, 10), Rational(5, 2), Rational(2),
                                  Rational(1, 2));
    // delta*A = 1/4 and eta_A = 1/2: separation holds iff eps is between them
    CHECK(separation_check(H.classification, Rational(3, 10)).ok);
    const auto low = separation_check(H.classification, Rational(1, 5));
    CHECK_FALSE(low.ok);
    CHECK(low.failing_inequality.find("delta*A < eps") != std::string::npos);
    const auto high = separation_check(H.classification, Rational(3, 5));
    CHECK_FALSE(high.ok);
    CHECK(high.failing_inequality.find("eps < eta_A") != std::string::npos);
}

TEST_CASE("the wedge profile H_{0,A}") {
    const DomainModel d = annulus_domain();
    const auto h = make_H_zero_A(d, Rational(5, 2));
    CHECK(h.value_at(Rational(0)) == Rational(-5, 2));
    CHECK(h.value_at(Rational(1)) == Rational(0));
    CHECK(h.is_compactly_supported());
    // a single corner at r = 1 with slopes (5/2, 0): families of periods 1, 2
    const auto inv = enumerate_orbits(d, h);
    CHECK(inv.families.size() == 2);
    CHECK(inv.families[0].action == Rational(1));
    CHECK(inv.families[1].action == Rational(2));
    REQUIRE(inv.constants.size() >= 1);
    CHECK(inv.constants.front().action == Rational(5, 2));
}

TEST_CASE("the flat profile K_{r1,tau}") {
    const DomainModel d = annulus_domain();
    const auto K = make_K(d, Rational(1), Rational(3, 2));
    CHECK(K.classification.I_action == Rational(0));
    CHECK(K.classification.II_lo == Rational(1));
    CHECK(K.classification.II_hi == Rational(1));
    const auto inv = enumerate_orbits(d, K.profile);
    REQUIRE(inv.families.size() == 1);
    CHECK(inv.families[0].action == Rational(1));
    CHECK_THROWS_AS(make_K(d, Rational(1), Rational(2)), std::invalid_argument);
}

TEST_CASE("contract scales every orbit action by the factor") {
    const DomainModel d = annulus_domain();
    const auto h = make_H_zero_A(d, Rational(5, 2));
    const Rational r(1, 3);
    const auto hr = contract(h, r);
    CHECK(hr.value_at(Rational(0)) == -Rational(5, 2) * r);
    const auto a = enumerate_orbits(d, h);
    const auto b = enumerate_orbits(d, hr);
    REQUIRE(a.families.size() == b.families.size());
    for (std::size_t i = 0; i < a.families.size(); ++i)
        CHECK(b.families[i].action == a.families[i].action * r);
    REQUIRE(a.constants.size() == b.constants.size());
    for (std::size_t i = 0; i < a.constants.size(); ++i)
        CHECK(b.constants[i].action == a.constants[i].action * r);
    CHECK_THROWS_AS(contract(h, Rational(2)), std::invalid_argument);
}

TEST_CASE("tau extension keeps values and adds a positive final slope") {
    const DomainModel d = annulus_domain();
    const auto h = make_H_zero_A(d, Rational(5, 2));
    const auto ext = tau_extension(h, d.reeb, Rational(1, 2), Rational(1, 4));
    CHECK_FALSE(ext.is_compactly_supported());
    CHECK(ext.final_slope == Rational(1, 2));
    CHECK(ext.value_at(Rational(1, 2)) == h.value_at(Rational(1, 2)));
    // no new orbit families beyond the compact part
    CHECK(enumerate_orbits(d, ext).families.size() ==
          enumerate_orbits(d, h).families.size());
    CHECK_THROWS_AS(tau_extension(h, d.reeb, Rational(3, 2), Rational(1, 4)),
                    std::invalid_argument);
}

TEST_CASE("profile comparison and difference extrema") {
    const DomainModel d = annulus_domain();
    const auto h = make_H_zero_A(d, Rational(5, 2));
    const auto k = make_H_zero_A(d, Rational(3, 2));
    CHECK(profile_leq(h, k));
    CHECK_FALSE(profile_leq(k, h));
    const auto [lo, hi] = profile_difference_extrema(h, k);
    CHECK(lo == Bound::finite(Rational(0)));
    CHECK(hi == Bound::finite(Rational(1)));

    const auto ext = tau_extension(h, d.reeb, Rational(1, 2), Rational(1, 4));
    const auto [lo2, hi2] = profile_difference_extrema(h, ext);
    CHECK(hi2 == Bound::pos_inf());  // ext - h grows without bound
    const auto [lo3, hi3] = profile_difference_extrema(ext, h);
    CHECK(lo3 == Bound::neg_inf());
}

TEST_CASE("build_complex orders generators by action and validates") {
    const DomainModel d = annulus_domain();
    const auto H = make_H_delta_A(d, Rational(1, 10), Rational(5, 2), Rational(2),
                                  Rational(1, 2));
    const auto c = build_complex(d, H.profile);
    REQUIRE(c.size() == 12);
    CHECK(validate(c).ok);
    for (int i = 1; i < c.size(); ++i)
        CHECK(c.generators[i - 1].action <= c.generators[i].action);
    // lowest actions are the outer constants, highest the inner-corner families
    CHECK(c.generators[0].action == Rational(0));
    CHECK(c.generators[c.size() - 1].action == Rational(49, 20));
}

TEST_CASE("ball family degrees follow the linear rule") {
    const DomainModel d = ball_domain();
    const auto h = make_H_zero_A(d, Rational(5, 2));
    const auto inv = enumerate_orbits(d, h);
    REQUIRE(inv.families.size() == 2);
    // period k has Morse-0 member degree -2k + 1... offset - step*k = 1 - 2k
    CHECK(inv.families[0].degree0 == -1);
    CHECK(inv.families[1].degree0 == -3);
}
