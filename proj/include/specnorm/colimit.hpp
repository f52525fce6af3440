#pragma once

#include <map>
#include <string>
#include <vector>

#include "specnorm/chain_maps.hpp"
#include "specnorm/spectral.hpp"

namespace specnorm {

// A finite increasing family of Hamiltonian complexes with continuation
// maps, declared stabilized once every period crossing below the final
// slope has occurred. Direct limits are computed only for declared-stable
// diagrams: the last stage already carries the limit.
struct DiagramStage {
    FilteredComplex complex;
    Rational slope;
};

struct CofinalDiagram {
    std::string name;
    DomainModel domain;
    std::vector<DiagramStage> stages;
    std::vector<FilteredChainMap> maps;  // stage i -> stage i+1
    bool stabilized = false;
    gf2::Vector unit;  // designated unit cocycle in stage 0, degree 0
};

ValidationReport validate_diagram(const CofinalDiagram& d);

struct ColimitSpace {
    Window window;
    CohomologyBasis basis;  // the last stage's window cohomology
    std::map<int, int> dimension_by_degree;
    gf2::Vector unit_image;  // coordinates in basis; empty = zero
    int stage_of_stabilization = 0;
};

ColimitSpace colimit(const CofinalDiagram& d, const Window& w);

// Unital ring: nonzero iff the unit image in the full window survives.
bool sh_nonzero(const CofinalDiagram& d);

// The least window height at which the low-action class dies:
// inf{ c > 0 : H(-inf, eps) -> H(-inf, c) vanishes }, +inf if never.
// Scanned over the diagram's spectrum values and their midpoints.
Bound c_sh(const CofinalDiagram& d);

struct ThmBRow {
    std::string name;
    Rational c1;
    Rational gamma_value;
    bool ok = true;
};

struct ThmBReport {
    bool ok = true;
    Bound c_sh_value;
    std::vector<ThmBRow> rows;
    std::string failure;
};

// For a vanishing-SH diagram: c(1,H) <= c_sh and gamma(H) <= 2 c_sh for
// every supplied Hamiltonian. Failures are findings, not errors.
ThmBReport thmB_bound_check(const CofinalDiagram& d, const std::vector<ModelHamiltonian>& hams);

struct FactorizationReport {
    bool ok = true;
    std::string failure;
    Rational lower_bound;  // A - eps
    Rational c_value;      // c(1, H_{delta,A})
};

// The projection triangle: the unit of the step complex survives projection
// to the window (A - eps, +inf), hence c(1, H_{delta,A}) >= A - eps.
FactorizationReport factorization_check(const CofinalDiagram& d, const ModelHamiltonian& m,
                                        const HDeltaAClassification& cls, const Rational& eps);

// Preset diagrams over slopes 1/2, 3/2, 5/2 with inclusion maps.
CofinalDiagram annulus_diagram();
CofinalDiagram ball_diagram();

// Appends a copy of the last stage with an identity map: continuation
// between equal-slope Hamiltonians is an isomorphism, so dimensions and the
// unit image must not move.
void append_same_slope_stage(CofinalDiagram& d, const Rational& new_slope);

}  // namespace specnorm
