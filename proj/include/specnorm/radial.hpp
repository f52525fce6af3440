#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "specnorm/complex.hpp"
#include "specnorm/rational.hpp"

namespace specnorm {

// The boundary Reeb dynamics, reduced to its period spectrum.
struct ReebSpectrumModel {
    enum class Kind { Arithmetic, Explicit };

    struct ExplicitPeriod {
        Rational period;
        int multiplicity = 1;
        std::optional<std::pair<int, int>> degrees;  // member degrees, if pinned
    };

    Kind kind = Kind::Arithmetic;
    Rational t0 = Rational(1);          // arithmetic: periods are k*t0, k >= 1
    Rational cutoff = Rational(1000);   // periods above the cutoff are ignored
    std::vector<ExplicitPeriod> explicit_periods;  // sorted, positive

    Rational min_period() const;
    bool contains(const Rational& p) const;
    // periods strictly inside (lo, hi), positive, below the cutoff
    std::vector<ExplicitPeriod> periods_in(const Rational& lo, const Rational& hi) const;
};

// Distance from A to the modeled spectrum.
Rational eta(const ReebSpectrumModel& reeb, const Rational& A);

// A Liouville domain, modeled by its Reeb spectrum and filling cohomology.
struct DomainModel {
    enum class FamilyDegreeRule {
        Uniform,    // every family has member degrees (base, base+1)
        BallLinear  // period k*t0 -> (offset - step*k, offset - step*k + 1)
    };
    // Which cohomology class continues the filling unit at the chain level;
    // see spectral.hpp.
    enum class UnitRule { MinRegion, Saturating };

    std::string name;
    ReebSpectrumModel reeb;
    std::vector<std::pair<int, int>> filling_cohomology;  // (degree, dimension)
    std::vector<int> annular_constant_degrees;            // constants away from the skeleton
    FamilyDegreeRule degree_rule = FamilyDegreeRule::Uniform;
    int degree_rule_base = 0;
    int degree_rule_offset = 1;
    int degree_rule_step = 2;
    UnitRule unit_rule = UnitRule::MinRegion;

    // degree of the Morse-index-0 member of a family of the given period
    int family_degree(const Rational& period,
                      const std::optional<std::pair<int, int>>& pinned) const;
};

// Presets. The annulus (cotangent disk bundle of the circle) contains a
// closed exact Lagrangian and has nonvanishing symplectic cohomology; the
// ball does not.
DomainModel annulus_domain();
DomainModel ball_domain();

// Piecewise-linear radial Hamiltonian h(r), continuous, with a final slope
// beyond the last breakpoint. Orbits live at corners where the slope
// interval straddles a Reeb period.
struct RadialProfile {
    std::vector<Rational> radii;   // radii[0] == 0, strictly increasing
    std::vector<Rational> values;  // h at the breakpoints
    Rational final_slope = Rational(0);

    static RadialProfile zero();
    static RadialProfile from_breakpoints(std::vector<Rational> radii,
                                          std::vector<Rational> values,
                                          Rational final_slope);

    int segment_count() const { return static_cast<int>(radii.size()); }
    // slope of segment i: between radii[i] and radii[i+1], or the final
    // slope for the last index
    Rational segment_slope(int i) const;
    Rational value_at(const Rational& r) const;
    // h vanishes for r >= 1
    bool is_compactly_supported() const;
    Rational min_on_support() const;
    Rational max_on_support() const;
};

RadialProfile scale_profile(const RadialProfile& h, const Rational& s);

// Pullback under the Liouville-flow rescaling: radii and values both scale
// by r, so every orbit action scales by exactly r.
RadialProfile contract(const RadialProfile& h, const Rational& r);

// Affine extension of slope tau < T0 beyond the support; adds no orbit
// families.
RadialProfile tau_extension(const RadialProfile& h_compact, const ReebSpectrumModel& reeb,
                            const Rational& tau, const Rational& eps);

// min and max of (k - h) over [0, infinity); infinite when the final
// slopes differ.
std::pair<Bound, Bound> profile_difference_extrema(const RadialProfile& h,
                                                   const RadialProfile& k);
// h <= k pointwise on [0, infinity)
bool profile_leq(const RadialProfile& h, const RadialProfile& k);

enum class OrbitType { I, II, III, IV, Other };
std::string orbit_type_name(OrbitType t);

struct ConstantGroup {
    Rational radius_lo, radius_hi;  // extent of the region (equal at a corner)
    bool innermost = false;
    Rational value;   // h on the region
    Rational action;  // = -value
    std::vector<int> degrees;
    OrbitType type = OrbitType::Other;
};

struct FamilyGroup {
    Rational radius;
    Rational period;
    int multiplicity = 1;
    Rational action;  // = radius*period - h(radius)
    int degree0;      // Morse-index-0 member; partner has degree0 + 1
    OrbitType type = OrbitType::Other;
};

struct OrbitInventory {
    std::vector<ConstantGroup> constants;
    std::vector<FamilyGroup> families;

    int generator_count() const;
};

// Rejects profiles with a slope sitting exactly on a modeled period
// (degenerate: a whole annulus of orbits).
void validate_profile(const ReebSpectrumModel& reeb, const RadialProfile& h);

OrbitInventory enumerate_orbits(const DomainModel& d, const RadialProfile& h);

// The action windows of the four orbit types of H_{delta,A}.
struct HDeltaAClassification {
    Rational delta, A, r0, sigma;
    Rational eta_A;
    Rational r_I;             // action of the type-I constants, (1-delta)*A
    Rational r_IV;            // action of the type-IV constants, 0
    Rational II_lo, II_hi;    // [delta*T0 + (1-delta)*A, A - delta*eta_A]
    Rational III_lo, III_hi;  // [T0, A - eta_A]
};

struct HDeltaA {
    RadialProfile profile;
    HDeltaAClassification classification;
};

HDeltaA make_H_delta_A(const DomainModel& d, const Rational& delta, const Rational& A,
                       const Rational& r0, const Rational& sigma);

// The delta -> 0 limit profile: A(r-1) on (0,1], zero beyond.
RadialProfile make_H_zero_A(const DomainModel& d, const Rational& A);

// Tags the inventory of an H_{delta,A} profile with its four orbit types:
// I = inner constants, II = families at the inner corner, III = families at
// the support boundary, IV = outer constants.
void classify_H_delta_A_orbits(OrbitInventory& inv, const HDeltaAClassification& cls);

struct SeparationReport {
    bool ok = true;
    std::string failing_inequality;
};

// The strict chain r_IV < III < A-eps < r_I < II.
SeparationReport separation_check(const HDeltaAClassification& cls, const Rational& eps);

struct KClassification {
    Rational r1, tau;
    Rational I_action;        // 0
    Rational II_lo, II_hi;    // [r1*T0, r1*tau - r1*eta_tau]
};

struct KProfile {
    RadialProfile profile;
    KClassification classification;
};

KProfile make_K(const DomainModel& d, const Rational& r1, const Rational& tau);

// Differential presets for build_complex.
struct DifferentialSpec {
    enum class Kind { Zero, Explicit } kind = Kind::Zero;
    gf2::Matrix matrix;  // used when explicit

    static DifferentialSpec zero() { return DifferentialSpec{}; }
    static DifferentialSpec explicit_matrix(gf2::Matrix m) {
        return DifferentialSpec{Kind::Explicit, std::move(m)};
    }
};

// Assembles the filtered cochain complex: constants plus split family
// members, sorted by (action, group, member). The preset-zero differential
// is valid because the GF(2) Morse differential of each circle family
// vanishes.
FilteredComplex build_complex(const DomainModel& d, const RadialProfile& h,
                              const DifferentialSpec& diff = DifferentialSpec::zero());
FilteredComplex build_complex(const DomainModel& d, const OrbitInventory& inventory,
                              const DifferentialSpec& diff = DifferentialSpec::zero());

}  // namespace specnorm
