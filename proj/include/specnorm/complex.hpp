#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "specnorm/gf2.hpp"
#include "specnorm/rational.hpp"

namespace specnorm {

// A cochain generator: a 1-periodic orbit with exact action and provenance.
// Transversally non-degenerate S^1-families split into exactly two
// generators, distinguished by their Morse index on the circle.
struct OrbitGenerator {
    enum class Kind { ConstantOrbit, FamilyMember };

    std::string id;
    int degree = 0;
    Rational action;
    Kind kind = Kind::ConstantOrbit;
    int group = 0;         // region id for constants, family id for family members
    int member_index = 0;  // Morse index in {0,1} for family members
    std::string label;
};

// Graded, action-filtered cochain complex over GF(2). The differential
// raises degree by one and never raises action, so every action sublevel
// set is a subcomplex.
struct FilteredComplex {
    std::vector<OrbitGenerator> generators;
    gf2::Matrix differential;  // column j = boundary of generator j

    int size() const { return static_cast<int>(generators.size()); }
    // Sorted distinct generator actions.
    std::vector<Rational> spectrum() const;
    bool action_in_spectrum(const Rational& v) const;
};

// An action window (a, b) whose endpoints avoid the spectrum.
struct Window {
    Bound a = Bound::neg_inf();
    Bound b = Bound::pos_inf();

    static Window full() { return Window{}; }
    static Window below(Rational b) { return Window{Bound::neg_inf(), Bound::finite(std::move(b))}; }
    static Window above(Rational a) { return Window{Bound::finite(std::move(a)), Bound::pos_inf()}; }

    bool contains(const Rational& action) const;
    bool operator==(const Window& other) const { return a == other.a && b == other.b; }
};

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> violations;
};

struct CohomologyBasis {
    Window window;
    // Cocycle representatives in the window subquotient's generator indexing,
    // linearly independent modulo coboundaries.
    std::vector<gf2::Vector> classes;
    std::vector<int> degrees;

    int dimension() const { return static_cast<int>(classes.size()); }
    std::map<int, int> dimension_by_degree() const;
};

struct Bar {
    Rational birth;
    std::optional<Rational> death;  // absent = infinite bar
    int degree = 0;
};

// Checks the four complex invariants: squared differential, +1 grading,
// action monotonicity of the differential, and generator sort order.
ValidationReport validate(const FilteredComplex& c);

// Throws std::invalid_argument if a finite endpoint collides with the
// spectrum; collisions are hard errors, never nudged.
void require_valid_window(const FilteredComplex& c, const Window& w);

// Indices of the generators with action strictly inside the window.
std::vector<int> window_indices(const FilteredComplex& c, const Window& w);

// CF_(a,b) = CF_{<b} / CF_{<a}: generators inside the window, differential
// compressed by dropping entries below the window.
FilteredComplex window_subquotient(const FilteredComplex& c, const Window& w);

CohomologyBasis cohomology(const FilteredComplex& c, const Window& w);
CohomologyBasis cohomology(const FilteredComplex& c);

// Expresses a cocycle of the window subquotient in a cohomology basis;
// nullopt if it is not a cocycle. The zero class is the empty vector.
std::optional<gf2::Vector> class_coordinates(const FilteredComplex& window_complex,
                                             const CohomologyBasis& basis,
                                             const gf2::Vector& cocycle);

// Interval decomposition of c -> H(CF_{<t}) under inclusions, by pivot
// pairing on the action-sorted reduction.
std::vector<Bar> barcode(const FilteredComplex& c);

std::string barcode_csv(const std::vector<Bar>& bars);

}  // namespace specnorm
