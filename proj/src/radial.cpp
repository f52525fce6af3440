#include "specnorm/radial.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace specnorm {

namespace {

Rational floor_div(const Rational& a, const Rational& b) {
    // floor(a/b) for b > 0, as a rational integer
    using boost::multiprecision::cpp_int;
    const Rational q = a / b;
    cpp_int fl = boost::multiprecision::numerator(q) /
                 boost::multiprecision::denominator(q);
    if (q < 0 && fl * boost::multiprecision::denominator(q) !=
                     boost::multiprecision::numerator(q))
        --fl;
    return Rational(fl);
}

}  // namespace

Rational ReebSpectrumModel::min_period() const {
    if (kind == Kind::Arithmetic) return t0;
    if (explicit_periods.empty())
        throw std::invalid_argument("explicit spectrum model has no periods");
    return explicit_periods.front().period;
}

bool ReebSpectrumModel::contains(const Rational& p) const {
    if (p <= 0 || p > cutoff) return false;
    if (kind == Kind::Arithmetic) {
        const Rational q = p / t0;
        return boost::multiprecision::denominator(q) == 1;
    }
    return std::any_of(explicit_periods.begin(), explicit_periods.end(),
                       [&](const ExplicitPeriod& e) { return e.period == p; });
}

std::vector<ReebSpectrumModel::ExplicitPeriod> ReebSpectrumModel::periods_in(
    const Rational& lo, const Rational& hi) const {
    std::vector<ExplicitPeriod> out;
    const Rational top = std::min(hi, Rational(cutoff + 1));  // cutoff bound applied below
    if (kind == Kind::Arithmetic) {
        Rational k = floor_div(lo, t0) + 1;
        if (k < 1) k = 1;
        for (Rational p = k * t0; p < hi && p <= cutoff; p += t0)
            out.push_back(ExplicitPeriod{p, 1, std::nullopt});
    } else {
        for (const auto& e : explicit_periods)
            if (e.period > lo && e.period < top && e.period <= cutoff && e.period > 0)
                out.push_back(e);
    }
    return out;
}

Rational eta(const ReebSpectrumModel& reeb, const Rational& A) {
    if (A <= 0) throw std::invalid_argument("eta requires A > 0");
    if (reeb.kind == ReebSpectrumModel::Kind::Arithmetic) {
        // distance to the period set {k t0 : k >= 1}
        const Rational k = floor_div(A, reeb.t0);
        if (k < 1) return reeb.t0 - A;
        const Rational below = A - k * reeb.t0;
        const Rational above = (k + 1) * reeb.t0 - A;
        return below < above ? below : above;
    }
    Rational best(-1);
    for (const auto& e : reeb.explicit_periods) {
        Rational d = A - e.period;
        if (d < 0) d = -d;
        if (best < 0 || d < best) best = d;
    }
    if (best < 0) throw std::invalid_argument("explicit spectrum model has no periods");
    return best;
}

int DomainModel::family_degree(const Rational& period,
                               const std::optional<std::pair<int, int>>& pinned) const {
    if (pinned) {
        if (pinned->second != pinned->first + 1)
            throw std::invalid_argument("pinned family degrees must be consecutive");
        return pinned->first;
    }
    if (degree_rule == FamilyDegreeRule::Uniform) return degree_rule_base;
    const Rational k = period / reeb.t0;
    if (boost::multiprecision::denominator(k) != 1)
        throw std::invalid_argument("period is not a multiple of the basic period");
    return degree_rule_offset -
           degree_rule_step * static_cast<int>(boost::multiprecision::numerator(k));
}

DomainModel annulus_domain() {
    DomainModel d;
    d.name = "annulus";
    d.reeb.kind = ReebSpectrumModel::Kind::Arithmetic;
    d.reeb.t0 = 1;
    d.reeb.cutoff = 1000;
    d.filling_cohomology = {{0, 1}, {1, 1}};
    d.annular_constant_degrees = {0, 1};
    d.degree_rule = DomainModel::FamilyDegreeRule::Uniform;
    d.degree_rule_base = 0;
    d.unit_rule = DomainModel::UnitRule::MinRegion;
    return d;
}

DomainModel ball_domain() {
    DomainModel d;
    d.name = "ball";
    d.reeb.kind = ReebSpectrumModel::Kind::Arithmetic;
    d.reeb.t0 = 1;
    d.reeb.cutoff = 1000;
    d.filling_cohomology = {{0, 1}};
    d.annular_constant_degrees = {0, 1};
    d.degree_rule = DomainModel::FamilyDegreeRule::BallLinear;
    d.degree_rule_offset = 1;  // period k*t0 -> degrees (-2k+1, -2k+2)
    d.degree_rule_step = 2;
    d.unit_rule = DomainModel::UnitRule::Saturating;
    return d;
}

RadialProfile RadialProfile::zero() {
    return from_breakpoints({Rational(0)}, {Rational(0)}, Rational(0));
}

RadialProfile RadialProfile::from_breakpoints(std::vector<Rational> radii,
                                              std::vector<Rational> values,
                                              Rational final_slope) {
    if (radii.empty() || radii.size() != values.size())
        throw std::invalid_argument("profile needs matching nonempty radii and values");
    if (radii.front() != 0)
        throw std::invalid_argument("profile breakpoints must start at radius 0");
    for (std::size_t i = 0; i + 1 < radii.size(); ++i)
        if (!(radii[i] < radii[i + 1]))
            throw std::invalid_argument("profile radii must be strictly increasing");
    RadialProfile h;
    h.radii = std::move(radii);
    h.values = std::move(values);
    h.final_slope = std::move(final_slope);
    return h;
}

Rational RadialProfile::segment_slope(int i) const {
    const int n = static_cast<int>(radii.size());
    if (i < 0 || i >= n) throw std::out_of_range("segment index");
    if (i == n - 1) return final_slope;
    return (values[i + 1] - values[i]) / (radii[i + 1] - radii[i]);
}

Rational RadialProfile::value_at(const Rational& r) const {
    if (r < 0) throw std::invalid_argument("radius must be nonnegative");
    const int n = static_cast<int>(radii.size());
    int i = 0;
    while (i + 1 < n && radii[i + 1] <= r) ++i;
    return values[i] + segment_slope(i) * (r - radii[i]);
}

bool RadialProfile::is_compactly_supported() const {
    if (final_slope != 0) return false;
    const int n = static_cast<int>(radii.size());
    // the profile must be identically zero from radius 1 outward
    for (int i = 0; i < n; ++i)
        if (radii[i] >= 1 && values[i] != 0) return false;
    if (values.back() != 0) return false;
    return value_at(Rational(1)) == 0;
}

Rational RadialProfile::min_on_support() const {
    if (!is_compactly_supported())
        throw std::invalid_argument("profile is not compactly supported");
    Rational m = 0;
    for (const auto& v : values)
        if (v < m) m = v;
    return m;
}

Rational RadialProfile::max_on_support() const {
    if (!is_compactly_supported())
        throw std::invalid_argument("profile is not compactly supported");
    Rational m = 0;
    for (const auto& v : values)
        if (v > m) m = v;
    return m;
}

RadialProfile scale_profile(const RadialProfile& h, const Rational& s) {
    RadialProfile out = h;
    for (auto& v : out.values) v *= s;
    out.final_slope *= s;
    return out;
}

RadialProfile contract(const RadialProfile& h, const Rational& r) {
    if (!(r > 0 && r <= 1))
        throw std::invalid_argument("contraction factor must lie in (0, 1]");
    if (!h.is_compactly_supported())
        throw std::invalid_argument("contract requires a compactly supported profile");
    RadialProfile out;
    out.radii.reserve(h.radii.size());
    out.values.reserve(h.values.size());
    for (const auto& rho : h.radii) out.radii.push_back(r * rho);
    for (const auto& v : h.values) out.values.push_back(r * v);
    out.final_slope = 0;
    return out;
}

RadialProfile tau_extension(const RadialProfile& h_compact, const ReebSpectrumModel& reeb,
                            const Rational& tau, const Rational& eps) {
    if (!h_compact.is_compactly_supported())
        throw std::invalid_argument("tau_extension requires a compactly supported profile");
    if (!(tau > 0 && tau < reeb.min_period()))
        throw std::invalid_argument("extension slope must lie in (0, T0)");
    if (!(eps > 0)) throw std::invalid_argument("extension offset must be positive");
    RadialProfile out;
    for (std::size_t i = 0; i < h_compact.radii.size(); ++i) {
        if (h_compact.radii[i] > 1) break;
        out.radii.push_back(h_compact.radii[i]);
        out.values.push_back(h_compact.values[i]);
    }
    if (out.radii.back() < 1) {
        out.radii.push_back(Rational(1));
        out.values.push_back(Rational(0));
    }
    const Rational corner = 1 + eps / 2;
    out.radii.push_back(corner);
    out.values.push_back(Rational(0));
    out.final_slope = tau;
    return RadialProfile::from_breakpoints(out.radii, out.values, out.final_slope);
}

std::pair<Bound, Bound> profile_difference_extrema(const RadialProfile& h,
                                                   const RadialProfile& k) {
    std::set<Rational> points(h.radii.begin(), h.radii.end());
    points.insert(k.radii.begin(), k.radii.end());
    Rational lo = k.value_at(0) - h.value_at(0);
    Rational hi = lo;
    for (const auto& r : points) {
        const Rational v = k.value_at(r) - h.value_at(r);
        if (v < lo) lo = v;
        if (v > hi) hi = v;
    }
    const Rational tail = k.final_slope - h.final_slope;
    Bound blo = Bound::finite(lo), bhi = Bound::finite(hi);
    if (tail > 0) bhi = Bound::pos_inf();
    if (tail < 0) blo = Bound::neg_inf();
    return {blo, bhi};
}

bool profile_leq(const RadialProfile& h, const RadialProfile& k) {
    const auto [lo, hi] = profile_difference_extrema(h, k);
    return !(lo < Bound::finite(Rational(0)));
}

std::string orbit_type_name(OrbitType t) {
    switch (t) {
        case OrbitType::I: return "I";
        case OrbitType::II: return "II";
        case OrbitType::III: return "III";
        case OrbitType::IV: return "IV";
        default: return "other";
    }
}

int OrbitInventory::generator_count() const {
    int n = 0;
    for (const auto& g : constants) n += static_cast<int>(g.degrees.size());
    for (const auto& f : families) n += 2 * f.multiplicity;
    return n;
}

void validate_profile(const ReebSpectrumModel& reeb, const RadialProfile& h) {
    for (int i = 0; i < h.segment_count(); ++i)
        if (reeb.contains(h.segment_slope(i)))
            throw std::invalid_argument(
                "degenerate profile: slope " + format_rational(h.segment_slope(i)) +
                " lies on a Reeb period");
}

OrbitInventory enumerate_orbits(const DomainModel& d, const RadialProfile& h) {
    validate_profile(d.reeb, h);
    OrbitInventory inv;
    const int n = h.segment_count();

    // innermost constants: the region around the skeleton, always present
    {
        ConstantGroup g;
        g.innermost = true;
        g.radius_lo = 0;
        g.radius_hi = 0;
        int i = 0;
        while (i < n - 1 && h.segment_slope(i) == 0) {
            g.radius_hi = h.radii[i + 1];
            ++i;
        }
        if (i == n - 1 && h.final_slope == 0) g.radius_hi = Rational(-1);  // unbounded
        g.value = h.values[0];
        g.action = -g.value;
        for (const auto& [deg, dim] : d.filling_cohomology)
            for (int m = 0; m < dim; ++m) g.degrees.push_back(deg);
        inv.constants.push_back(std::move(g));
    }

    // annular flat runs away from the skeleton
    int i = 0;
    while (i < n && h.segment_slope(i) == 0) ++i;  // skip the innermost run
    while (i < n) {
        if (h.segment_slope(i) == 0) {
            ConstantGroup g;
            g.radius_lo = h.radii[i];
            g.radius_hi = i + 1 < n ? h.radii[i + 1] : Rational(-1);
            int j = i;
            while (j + 1 < n && h.segment_slope(j + 1) == 0) {
                ++j;
                g.radius_hi = j + 1 < n ? h.radii[j + 1] : Rational(-1);
            }
            if (j == n - 1) g.radius_hi = Rational(-1);  // flat to infinity
            g.value = h.values[i];
            g.action = -g.value;
            g.degrees = d.annular_constant_degrees;
            inv.constants.push_back(std::move(g));
            i = j + 1;
        } else {
            ++i;
        }
    }

    // corners: families for straddled periods, constants at sign changes
    for (int c = 1; c < n; ++c) {
        const Rational sl = h.segment_slope(c - 1);
        const Rational sr = h.segment_slope(c);
        if (sl == sr) continue;
        const Rational lo = std::min(sl, sr);
        const Rational hi = std::max(sl, sr);
        const Rational r = h.radii[c];
        const Rational hr = h.values[c];

        if (lo < 0 && 0 < hi) {
            ConstantGroup g;
            g.radius_lo = r;
            g.radius_hi = r;
            g.value = hr;
            g.action = -hr;
            g.degrees = d.annular_constant_degrees;
            inv.constants.push_back(std::move(g));
        }

        for (const auto& p : d.reeb.periods_in(lo, hi)) {
            FamilyGroup f;
            f.radius = r;
            f.period = p.period;
            f.multiplicity = p.multiplicity;
            f.action = r * p.period - hr;
            f.degree0 = d.family_degree(p.period, p.degrees);
            inv.families.push_back(std::move(f));
        }
    }

    return inv;
}

HDeltaA make_H_delta_A(const DomainModel& d, const Rational& delta, const Rational& A,
                       const Rational& r0, const Rational& sigma) {
    if (!(delta > 0 && delta < 1))
        throw std::invalid_argument("delta must lie in (0, 1)");
    if (!(A > 0)) throw std::invalid_argument("A must be positive");
    if (d.reeb.contains(A))
        throw std::invalid_argument("A must avoid the Reeb spectrum");
    if (!(r0 > 1)) throw std::invalid_argument("r0 must exceed 1");
    const Rational t0 = d.reeb.min_period();
    if (!(sigma > 0 && sigma < t0))
        throw std::invalid_argument("sigma must lie in (0, T0)");

    HDeltaA out;
    out.profile = RadialProfile::from_breakpoints(
        {Rational(0), delta, Rational(1), r0},
        {A * (delta - 1), A * (delta - 1), Rational(0), Rational(0)}, sigma);
    validate_profile(d.reeb, out.profile);

    auto& cls = out.classification;
    cls.delta = delta;
    cls.A = A;
    cls.r0 = r0;
    cls.sigma = sigma;
    cls.eta_A = eta(d.reeb, A);
    cls.r_I = (1 - delta) * A;
    cls.r_IV = 0;
    cls.II_lo = delta * t0 + (1 - delta) * A;
    cls.II_hi = A - delta * cls.eta_A;
    cls.III_lo = t0;
    cls.III_hi = A - cls.eta_A;
    return out;
}

RadialProfile make_H_zero_A(const DomainModel& d, const Rational& A) {
    if (!(A > 0)) throw std::invalid_argument("A must be positive");
    if (d.reeb.contains(A))
        throw std::invalid_argument("A must avoid the Reeb spectrum");
    return RadialProfile::from_breakpoints({Rational(0), Rational(1)}, {-A, Rational(0)},
                                           Rational(0));
}

void classify_H_delta_A_orbits(OrbitInventory& inv, const HDeltaAClassification& cls) {
    for (auto& g : inv.constants) {
        if (g.innermost)
            g.type = OrbitType::I;
        else if (g.action == 0)
            g.type = OrbitType::IV;
    }
    for (auto& f : inv.families) {
        if (f.radius == cls.delta)
            f.type = OrbitType::II;
        else if (f.radius == 1)
            f.type = OrbitType::III;
    }
}

SeparationReport separation_check(const HDeltaAClassification& cls, const Rational& eps) {
    SeparationReport rep;
    auto fail = [&](const std::string& what) {
        rep.ok = false;
        if (rep.failing_inequality.empty()) rep.failing_inequality = what;
    };
    if (!(cls.r_IV < cls.III_lo)) fail("r_IV < III requires 0 < T0");
    if (!(cls.III_hi < cls.A - eps)) fail("III < A - eps requires eps < eta_A");
    if (!(cls.A - eps < cls.r_I)) fail("A - eps < r_I requires delta*A < eps");
    if (!(cls.r_I < cls.II_lo)) fail("r_I < II requires 0 < delta*T0");
    return rep;
}

KProfile make_K(const DomainModel& d, const Rational& r1, const Rational& tau) {
    if (!(r1 > 0)) throw std::invalid_argument("r1 must be positive");
    if (!(tau > 0)) throw std::invalid_argument("tau must be positive");
    if (d.reeb.contains(tau))
        throw std::invalid_argument("tau must avoid the Reeb spectrum");
    KProfile out;
    out.profile = RadialProfile::from_breakpoints({Rational(0), r1},
                                                  {Rational(0), Rational(0)}, tau);
    auto& cls = out.classification;
    cls.r1 = r1;
    cls.tau = tau;
    cls.I_action = 0;
    cls.II_lo = r1 * d.reeb.min_period();
    cls.II_hi = r1 * tau - r1 * eta(d.reeb, tau);
    return out;
}

FilteredComplex build_complex(const DomainModel& d, const RadialProfile& h,
                              const DifferentialSpec& diff) {
    return build_complex(d, enumerate_orbits(d, h), diff);
}

FilteredComplex build_complex(const DomainModel& d, const OrbitInventory& inventory,
                              const DifferentialSpec& diff) {
    (void)d;
    FilteredComplex c;
    int group = 0;
    for (const auto& g : inventory.constants) {
        int m = 0;
        for (int deg : g.degrees) {
            OrbitGenerator gen;
            gen.id = "c" + std::to_string(group) + "." + std::to_string(m);
            gen.degree = deg;
            gen.action = g.action;
            gen.kind = OrbitGenerator::Kind::ConstantOrbit;
            gen.group = group;
            gen.member_index = m;
            gen.label = (g.innermost ? std::string("inner constant") :
                                       std::string("annular constant")) +
                        " (" + orbit_type_name(g.type) + ")";
            c.generators.push_back(std::move(gen));
            ++m;
        }
        ++group;
    }
    for (const auto& f : inventory.families) {
        for (int copy = 0; copy < f.multiplicity; ++copy) {
            for (int m = 0; m < 2; ++m) {
                OrbitGenerator gen;
                gen.id = "f" + std::to_string(group) + "." + std::to_string(m);
                gen.degree = f.degree0 + m;
                gen.action = f.action;
                gen.kind = OrbitGenerator::Kind::FamilyMember;
                gen.group = group;
                gen.member_index = m;
                gen.label = "family, period " + format_rational(f.period) + " (" +
                            orbit_type_name(f.type) + ")";
                c.generators.push_back(std::move(gen));
            }
            ++group;
        }
    }

    // stable sort keeps the (group, member) order within equal actions
    std::stable_sort(c.generators.begin(), c.generators.end(),
                     [](const OrbitGenerator& x, const OrbitGenerator& y) {
                         if (x.action != y.action) return x.action < y.action;
                         if (x.group != y.group) return x.group < y.group;
                         return x.member_index < y.member_index;
                     });

    const int n = c.size();
    if (diff.kind == DifferentialSpec::Kind::Zero) {
        c.differential = gf2::Matrix::zero(n, n);
    } else {
        c.differential = diff.matrix;
    }
    const auto report = validate(c);
    if (!report.ok)
        throw std::invalid_argument("build_complex: " + report.violations.front());
    return c;
}

}  // namespace specnorm
