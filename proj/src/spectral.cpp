#include "specnorm/spectral.hpp"

#include <algorithm>
#include <stdexcept>

namespace specnorm {

namespace {

void require_cocycle(const FilteredComplex& c, const gf2::Vector& z) {
    if (!c.differential.apply(z).is_zero())
        throw std::invalid_argument("spectral invariant requires a cocycle");
    for (int i : z.support())
        if (i < 0 || i >= c.size())
            throw std::invalid_argument("cocycle support outside the complex");
}

SpectralResult result_from_witness(const FilteredComplex& c, gf2::Vector witness,
                                   const std::string& label, const char* method) {
    SpectralResult out;
    out.class_label = label;
    out.method = method;
    if (witness.is_zero()) {
        out.zero_class = true;
        return out;
    }
    out.value = c.generators[witness.pivot()].action;
    out.witness = std::move(witness);
    return out;
}

}  // namespace

SpectralResult spectral_invariant(const FilteredComplex& c, const gf2::Vector& cocycle,
                                  const std::string& label) {
    require_cocycle(c, cocycle);
    // Minimizing the pivot over the coset minimizes the max action, because
    // the generator order refines the action order.
    const auto coboundaries = gf2::image_basis(c.differential);
    gf2::Vector witness = gf2::reduce_against(cocycle, coboundaries);
    return result_from_witness(c, std::move(witness), label, "reduction");
}

SpectralResult spectral_invariant_brute(const FilteredComplex& c, const gf2::Vector& cocycle,
                                        const std::string& label) {
    require_cocycle(c, cocycle);
    const auto coboundaries = gf2::image_basis(c.differential);
    const int k = static_cast<int>(coboundaries.size());
    if (k > 22) throw std::invalid_argument("brute-force coset too large");
    gf2::Vector best = cocycle;
    auto better = [&](const gf2::Vector& x, const gf2::Vector& y) {
        if (x.is_zero() != y.is_zero()) return x.is_zero();
        if (x.is_zero()) return false;
        return x.pivot() < y.pivot();
    };
    for (long long mask = 1; mask < (1LL << k); ++mask) {
        gf2::Vector z = cocycle;
        for (int i = 0; i < k; ++i)
            if (mask & (1LL << i)) z += coboundaries[i];
        if (better(z, best)) best = z;
    }
    return result_from_witness(c, std::move(best), label, "brute-force");
}

ModelHamiltonian make_model(const DomainModel& d, const RadialProfile& h,
                            const DifferentialSpec& diff, const std::string& name) {
    ModelHamiltonian m;
    m.name = name;
    m.domain = d;
    m.profile = h;
    m.complex = build_complex(d, h, diff);

    // the maximal-action degree-0 constant and its region
    int best = -1;
    for (int i = 0; i < m.complex.size(); ++i) {
        const auto& g = m.complex.generators[i];
        if (g.kind != OrbitGenerator::Kind::ConstantOrbit || g.degree != 0) continue;
        if (best < 0 || g.action > m.complex.generators[best].action) best = i;
    }
    if (best < 0) throw std::invalid_argument("model has no degree-0 constant orbit");

    if (d.unit_rule == DomainModel::UnitRule::MinRegion) {
        m.unit_index = best;
        const int region = m.complex.generators[best].group;
        for (int i = 0; i < m.complex.size(); ++i)
            if (m.complex.generators[i].group == region) m.filling_block.push_back(i);
    } else {
        int cheapest = best;
        for (int i = 0; i < m.complex.size(); ++i) {
            const auto& g = m.complex.generators[i];
            if (g.kind != OrbitGenerator::Kind::FamilyMember || g.degree != 0) continue;
            if (g.action < 0) continue;  // below the filling window, cannot carry the unit
            if (g.action < m.complex.generators[cheapest].action) cheapest = i;
        }
        m.unit_index = cheapest;
        m.filling_block.push_back(cheapest);
    }

    if (!m.complex.differential.column(m.unit_index).is_zero())
        throw std::invalid_argument("designated unit is not a cocycle");
    return m;
}

SpectralResult c_unit(const ModelHamiltonian& m) {
    if (m.unit_index < 0) throw std::invalid_argument("model has no designated unit");
    const SpectralResult unit_result =
        spectral_invariant(m.complex, gf2::Vector::unit(m.unit_index), "1");
    if (unit_result.zero_class)
        throw std::invalid_argument("designated unit class vanishes");

    // implicit formula: c(1) = max over nonzero beta in the filling image
    const int k = static_cast<int>(m.filling_block.size());
    if (k > 20) throw std::invalid_argument("filling block too large");
    bool attained = false;
    for (long long mask = 1; mask < (1LL << k); ++mask) {
        std::vector<int> support;
        for (int i = 0; i < k; ++i)
            if (mask & (1LL << i)) support.push_back(m.filling_block[i]);
        std::sort(support.begin(), support.end());
        const auto r = spectral_invariant(m.complex, gf2::Vector(std::move(support)));
        if (r.zero_class) continue;
        if (r.value > unit_result.value)
            throw std::logic_error("implicit unit formula violated: a filling class exceeds c(1)");
        if (r.value == unit_result.value) attained = true;
    }
    if (!attained) throw std::logic_error("implicit unit formula violated: max not attained");
    return unit_result;
}

Rational gamma(const ModelHamiltonian& m) {
    const ModelHamiltonian bar =
        make_model(m.domain, scale_profile(m.profile, Rational(-1)), DifferentialSpec::zero(),
                   m.name.empty() ? "" : m.name + "-bar");
    const Rational g = c_unit(m).value + c_unit(bar).value;
    if (g < 0) throw std::logic_error("spectral norm is negative");
    return g;
}

Rational hofer_norm(const ModelHamiltonian& m) {
    return m.profile.max_on_support() - m.profile.min_on_support();
}

namespace {

// A two-segment sandwich profile with value -w on [0, rho], chosen so the
// rising slope avoids the Reeb spectrum.
RadialProfile canonical_sandwich(const DomainModel& d, const Rational& w) {
    for (int q = 2; q < 1000; ++q) {
        const Rational rho(1, q);
        const Rational slope = w / (1 - rho);
        if (!d.reeb.contains(slope))
            return RadialProfile::from_breakpoints({Rational(0), rho, Rational(1)},
                                                   {-w, -w, Rational(0)}, Rational(0));
    }
    throw std::logic_error("no admissible sandwich profile found");
}

}  // namespace

Rational embedding_distance(const ModelHamiltonian& m, const Rational& s,
                            const Rational& s_prime) {
    // precondition: h == -1 near the skeleton, -1 <= h <= 0
    if (m.profile.value_at(0) != -1 || m.profile.segment_slope(0) != 0)
        throw std::invalid_argument("profile must be constant -1 near the skeleton");
    if (!m.profile.is_compactly_supported() || m.profile.min_on_support() != -1 ||
        m.profile.max_on_support() > 0)
        throw std::invalid_argument("profile must satisfy -1 <= h <= 0 with compact support");

    const Rational w = s - s_prime;
    if (w == 0) return Rational(0);
    RadialProfile scaled = scale_profile(m.profile, w);
    try {
        // gamma also builds the negated profile, so both orientations must
        // avoid the spectrum
        validate_profile(m.domain.reeb, scaled);
        validate_profile(m.domain.reeb, scale_profile(scaled, Rational(-1)));
    } catch (const std::invalid_argument&) {
        const Rational aw = w < 0 ? -w : w;
        scaled = canonical_sandwich(m.domain, aw);
    }
    const Rational g = gamma(make_model(m.domain, scaled));
    if (m.domain.unit_rule == DomainModel::UnitRule::MinRegion) {
        const Rational aw = w < 0 ? -w : w;
        if (g != aw)
            throw std::logic_error("embedding distance deviates from |s - s'|");
    }
    return g;
}

void AxiomReport::add(AxiomCheck c) {
    if (!c.ok) ok = false;
    checks.push_back(std::move(c));
}

AxiomReport axiom_suite(
    const std::vector<std::pair<ModelHamiltonian, ModelHamiltonian>>& pairs) {
    AxiomReport report;
    int idx = 0;
    for (const auto& [mh, mk] : pairs) {
        const std::string tag = "pair " + std::to_string(idx++);
        const Rational ch = c_unit(mh).value;
        const Rational ck = c_unit(mk).value;
        const auto [lo, hi] = profile_difference_extrema(mh.profile, mk.profile);
        const Bound diff = Bound::finite(ch - ck);

        AxiomCheck cont{tag + ": continuity", true, ""};
        if (diff < lo || hi < diff) {
            cont.ok = false;
            cont.detail = "c(1,H) - c(1,K) = " + format_rational(ch - ck) +
                          " escapes the K-H oscillation bounds";
        }
        report.add(std::move(cont));

        if (profile_leq(mh.profile, mk.profile)) {
            AxiomCheck mono{tag + ": monotonicity", true, ""};
            if (!(ch >= ck)) {
                mono.ok = false;
                mono.detail = "H <= K but c(1,H) < c(1,K)";
            }
            report.add(std::move(mono));
        }

        for (const auto* mm : {&mh, &mk}) {
            AxiomCheck spec{tag + ": spectrality", true, ""};
            if (!mm->complex.action_in_spectrum(c_unit(*mm).value)) {
                spec.ok = false;
                spec.detail = "c(1) is not an orbit action";
            }
            report.add(std::move(spec));
        }
    }
    return report;
}

AxiomCheck triangle_check(const DomainModel& d, const RadialProfile& base, const Rational& s,
                          const Rational& s_prime) {
    AxiomCheck out{"triangle inequality on rescalings", true, ""};
    const Rational cs = c_unit(make_model(d, scale_profile(base, s))).value;
    const Rational cs2 = c_unit(make_model(d, scale_profile(base, s_prime))).value;
    const Rational csum = c_unit(make_model(d, scale_profile(base, s + s_prime))).value;
    if (!(csum <= cs + cs2)) {
        out.ok = false;
        out.detail = "c(1,(s+s')H) = " + format_rational(csum) + " exceeds " +
                     format_rational(cs + cs2);
    }
    return out;
}

SkeletonLemmaReport skeleton_lemma_check(const ModelHamiltonian& m, const Rational& A) {
    SkeletonLemmaReport rep;
    auto fail = [&](const std::string& why) {
        rep.ok = false;
        if (rep.counterexample.empty()) rep.counterexample = why;
    };

    if (m.domain.unit_rule != DomainModel::UnitRule::MinRegion)
        throw std::invalid_argument(
            "the skeleton value lemma needs nonvanishing symplectic cohomology");
    if (!(A > 0)) throw std::invalid_argument("A must be positive");
    if (!m.profile.is_compactly_supported())
        throw std::invalid_argument("profile must be compactly supported");
    if (m.profile.value_at(0) != -A)
        throw std::invalid_argument("profile must equal -A on the skeleton region");
    if (m.profile.min_on_support() != -A || m.profile.max_on_support() > 0)
        throw std::invalid_argument("profile must satisfy -A <= h <= 0");
    if (m.profile.segment_slope(0) != 0)
        throw std::invalid_argument("profile must be flat on an inner region");

    // r' inside the flat -A region, shrunk until A/r' avoids the spectrum
    Rational r_flat = m.profile.radii.size() > 1 ? m.profile.radii[1] : Rational(1);
    Rational r_prime = r_flat;
    while (m.domain.reeb.contains(A / r_prime)) r_prime /= 2;
    rep.r_prime = r_prime;

    // F = H_{0, A/r'}; its contraction by r' dominates h and has c(1) = A
    const RadialProfile F = make_H_zero_A(m.domain, A / r_prime);
    const RadialProfile F_r = contract(F, r_prime);
    if (!profile_leq(m.profile, F_r)) fail("contracted wedge fails to dominate h");

    const Rational cF = c_unit(make_model(m.domain, F)).value;
    if (cF != A / r_prime) fail("c(1, F) differs from A/r'");
    const Rational cFr = c_unit(make_model(m.domain, F_r)).value;
    if (cFr != r_prime * cF) fail("contraction scaling fails on the wedge");
    if (cFr != A) fail("contracted wedge value differs from A");

    const Rational cH = c_unit(m).value;
    // monotonicity pins c(1,H) >= A; continuity against 0 pins c(1,H) <= A
    if (!(cH >= cFr)) fail("monotonicity fails against the dominating wedge");
    if (!(cH <= -m.profile.min_on_support())) fail("continuity upper bound fails");
    if (cH != A) fail("c(1,H) differs from A");
    rep.value = cH;
    return rep;
}

}  // namespace specnorm
