#pragma once

#include <random>
#include <string>
#include <vector>

#include "specnorm/colimit.hpp"
#include "specnorm/io.hpp"

namespace specnorm {

struct CheckResult {
    std::string name;
    bool pass = true;
    std::string detail;
};

// The twelve verification checks, in order. Deterministic: all randomness
// is seeded internally.
std::vector<CheckResult> run_verification();

// Test-support generators, deterministic under the caller's engine.

// A validated filtered complex: a random disjoint pairing differential
// conjugated by a random filtered degree-0 basis change.
FilteredComplex random_complex(std::mt19937_64& rng, int n, int max_degree = 3);

// As above, but the differential never touches the index block `block`
// (no entries in those rows or columns), so the block carries honest
// cohomology classes.
FilteredComplex random_complex_avoiding(std::mt19937_64& rng, int n, int max_degree,
                                        const std::vector<int>& block);

// A compactly supported profile with admissible slopes over the domain.
RadialProfile random_compact_profile(std::mt19937_64& rng, const DomainModel& d);

// A positive non-spectrum rational.
Rational random_nonspectrum(std::mt19937_64& rng, const ReebSpectrumModel& reeb,
                            int max_integer_part = 8);

}  // namespace specnorm
