#pragma once

#include <string>
#include <vector>

#include "specnorm/complex.hpp"

namespace specnorm {

// A degree-0 chain map between filtered complexes whose entries may raise
// action by at most `shift`. Continuation maps of monotone homotopies are
// the shift <= 0 case.
struct FilteredChainMap {
    FilteredComplex source;
    FilteredComplex target;
    gf2::Matrix matrix;  // column j = image of source generator j
    Rational shift;      // maximum allowed action increase

    static FilteredChainMap identity(const FilteredComplex& c);
    static FilteredChainMap zero(const FilteredComplex& source, const FilteredComplex& target);
};

// Per-generator membership in the inner block D_b or its complement D_c.
struct BlockPartition {
    std::vector<bool> in_b;  // one flag per generator

    int size() const { return static_cast<int>(in_b.size()); }
    static BlockPartition all_b(int n) { return BlockPartition{std::vector<bool>(n, true)}; }
    static BlockPartition all_c(int n) { return BlockPartition{std::vector<bool>(n, false)}; }
};

// Data of a chain homotopy between two endomorphisms f and g of one complex:
// f + g = d Psi + Psi d over GF(2).
struct ChainHomotopy {
    FilteredChainMap f;
    FilteredChainMap g;
    gf2::Matrix psi;  // degree -1
};

struct MapValidationReport {
    bool ok = true;
    std::vector<std::string> violations;
};

struct BarricadeReport {
    bool ok = true;
    // (source index, target index) entries crossing from D_b into D_c
    std::vector<std::pair<int, int>> crossings;
};

struct HomotopyReport {
    bool ok = true;
    gf2::Matrix defect;  // f + g + d Psi + Psi d, zero iff ok
};

// Checks the chain map identity, the +0 grading, and the action shift bound.
MapValidationReport validate_chain_map(const FilteredChainMap& f);

FilteredChainMap compose(const FilteredChainMap& g, const FilteredChainMap& f);

// Barricade convention: columns with a b-tagged source may only hit
// b-tagged targets, so the b-block spans a subcomplex and maps descend to
// the quotient by it. (The paper states the rule for the homological
// orientation; this is its cohomological transcription.)
BarricadeReport barricade_check(const gf2::Matrix& m, const BlockPartition& source_tags,
                                const BlockPartition& target_tags);
BarricadeReport barricade_check(const FilteredChainMap& f, const BlockPartition& source_tags,
                                const BlockPartition& target_tags);
BarricadeReport barricade_check(const FilteredComplex& c, const BlockPartition& tags);

// The restriction of a complex to its b-block and the quotient by it.
FilteredComplex restrict_to_block(const FilteredComplex& c, const BlockPartition& tags);
FilteredComplex quotient_by_block(const FilteredComplex& c, const BlockPartition& tags);

// Lemma-style factorization: f restricted to the b-subcomplexes and the
// unique induced map on the quotients. Requires barricade_check to pass
// for f and both differentials.
std::pair<FilteredChainMap, FilteredChainMap> restrict_and_project(
    const FilteredChainMap& f, const BlockPartition& source_tags,
    const BlockPartition& target_tags);

HomotopyReport verify_homotopy(const ChainHomotopy& h);

// Projects a homotopy to the quotient complexes; the result verifies
// against the projected endpoint maps.
ChainHomotopy project_homotopy(const ChainHomotopy& h, const BlockPartition& tags);

// The matrix of [f] between window cohomology bases. Requires the window
// pair to be compatible with the action shift.
struct InducedMap {
    CohomologyBasis source_basis;
    CohomologyBasis target_basis;
    gf2::Matrix matrix;  // column j = coordinates of [f(source class j)]

    bool is_zero() const { return matrix.is_zero(); }
    bool is_isomorphism() const;
};

InducedMap induced_on_cohomology(const FilteredChainMap& f, const Window& w_source,
                                 const Window& w_target);

// Generator-wise window maps of a single complex.
FilteredChainMap inclusion_map(const FilteredComplex& c, const Window& w_small,
                               const Window& w_big);
FilteredChainMap projection_map(const FilteredComplex& c, const Window& w_big,
                                const Window& w_quot);

struct LesReport {
    bool ok = true;
    // first failing (degree, position) with position in
    // {"at H(a,c)", "at H(b,c)", "at H(a,b)"}
    std::string failure;
};

// Exactness of the cohomology triangle of CF_(a,b) -> CF_(a,c) -> CF_(b,c),
// with the connecting map computed by the standard zig-zag.
LesReport les_exactness_check(const FilteredComplex& c, const Bound& a, const Bound& b,
                              const Bound& cc);

}  // namespace specnorm
