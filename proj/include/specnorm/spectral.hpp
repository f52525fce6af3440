#pragma once

#include <string>
#include <vector>

#include "specnorm/radial.hpp"

namespace specnorm {

// The spectral invariant c(beta, H): the minimal action level at which the
// class beta appears, i.e. the min over cocycle representatives of the max
// generator action.
struct SpectralResult {
    std::string class_label;
    bool zero_class = false;  // c(0) is a sentinel, never a number
    Rational value;
    gf2::Vector witness;  // an optimal representative
    std::string method;   // "reduction" or "brute-force"
};

// beta is given by any cocycle representative.
SpectralResult spectral_invariant(const FilteredComplex& c, const gf2::Vector& cocycle,
                                  const std::string& label = "");
// Exhaustive min-max over the whole coset; oracle for <= 20 generators.
SpectralResult spectral_invariant_brute(const FilteredComplex& c, const gf2::Vector& cocycle,
                                        const std::string& label = "");

// A radial Hamiltonian with its built complex and the designated chain-level
// continuation of the filling's cohomology: `filling_block` spans the image
// of the filling classes, `unit_index` is the generator continuing the unit.
struct ModelHamiltonian {
    std::string name;
    DomainModel domain;
    RadialProfile profile;
    FilteredComplex complex;
    int unit_index = -1;
    std::vector<int> filling_block;
};

// Designation rules: MinRegion picks the maximal-action degree-0 constant
// and its whole region as the filling block (valid when the closed orbits
// near the skeleton carry the filling cohomology through every slope);
// Saturating additionally lets a degree-0 family member of smaller action
// take over as unit, modeling the degree-shift saturation of fillings with
// vanishing symplectic cohomology.
ModelHamiltonian make_model(const DomainModel& d, const RadialProfile& h,
                            const DifferentialSpec& diff = DifferentialSpec::zero(),
                            const std::string& name = "");

// c(1, H), plus an exact check of the implicit formula
// c(1,H) = max over nonzero combinations beta of the filling block of c(beta,H).
SpectralResult c_unit(const ModelHamiltonian& m);

// gamma(H) = c(1,H) + c(1,Hbar), with Hbar modeled by the negated profile.
Rational gamma(const ModelHamiltonian& m);

// max h - min h over the support; requires compact support.
Rational hofer_norm(const ModelHamiltonian& m);

// gamma((s - s') H) for a profile with h == -1 near the skeleton and
// -1 <= h <= 0; equals |s - s'| exactly on domains with nonvanishing
// symplectic cohomology. Falls back to a canonical sandwich profile when
// the scaled profile has a degenerate slope.
Rational embedding_distance(const ModelHamiltonian& m, const Rational& s,
                            const Rational& s_prime);

struct AxiomCheck {
    std::string name;
    bool ok = true;
    std::string detail;
};

struct AxiomReport {
    bool ok = true;
    std::vector<AxiomCheck> checks;

    void add(AxiomCheck c);
};

// Continuity sandwich, monotonicity, and spectrality for each pair.
AxiomReport axiom_suite(const std::vector<std::pair<ModelHamiltonian, ModelHamiltonian>>& pairs);

// Triangle inequality on the composable subfamily of rescalings:
// c(1,(s+s')H) <= c(1,sH) + c(1,s'H).
AxiomCheck triangle_check(const DomainModel& d, const RadialProfile& base, const Rational& s,
                          const Rational& s_prime);

struct SkeletonLemmaReport {
    bool ok = true;
    std::string counterexample;
    Rational r_prime;  // contraction radius used by the replayed proof
    Rational value;    // the common value c(1, H) = A
};

// Replays the sandwich proof of c(1,H) = A for h == -A on the skeleton
// region with -A <= h <= 0: contracts the reference wedge profile into the
// flat region and pins the value by monotonicity, contraction scaling, and
// continuity.
SkeletonLemmaReport skeleton_lemma_check(const ModelHamiltonian& m, const Rational& A);

}  // namespace specnorm
