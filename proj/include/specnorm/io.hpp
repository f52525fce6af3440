#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "specnorm/colimit.hpp"

namespace specnorm {

// Insertion-ordered JSON keeps the normal form byte-stable.
using Json = nlohmann::ordered_json;

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A parsed configuration: one domain, named Hamiltonians (direct segment
// lists or constructor calls), named diagrams, and a job list.
struct ConfigDocument {
    DomainModel domain;
    std::vector<std::pair<std::string, RadialProfile>> hamiltonians;
    std::vector<std::pair<std::string, HDeltaAClassification>> classifications;
    std::vector<std::pair<std::string, CofinalDiagram>> diagrams;
    Json jobs = Json::array();
    Json normal_form;

    const RadialProfile* find_hamiltonian(const std::string& name) const;
    const CofinalDiagram* find_diagram(const std::string& name) const;
    const HDeltaAClassification* find_classification(const std::string& name) const;
};

ConfigDocument parse_config(const std::string& text);

// serialize(parse(text)): the canonical normal form; idempotent.
std::string normalize_config(const std::string& text);

// Embedded preset bundles.
std::string preset_config_text(const std::string& name);

Json domain_json(const DomainModel& d);
Json profile_json(const RadialProfile& h);

std::string orbits_csv(const OrbitInventory& inv);
Json orbits_json(const OrbitInventory& inv);

// One horizontal segment per bar, action on the x-axis; infinite bars run
// to the right edge.
std::string barcode_svg(const std::vector<Bar>& bars);
Json barcode_json(const std::vector<Bar>& bars);

Json spectral_json(const SpectralResult& r, const FilteredComplex& c);
Json colimit_json(const ColimitSpace& s);

}  // namespace specnorm
