#include "specnorm/io.hpp"

#include <algorithm>
#include <sstream>

namespace specnorm {

namespace {

Rational rational_field(const Json& j, const std::string& key) {
    if (!j.contains(key)) throw ConfigError("missing field: " + key);
    const Json& v = j.at(key);
    try {
        if (v.is_string()) return parse_rational(v.get<std::string>());
        if (v.is_number_integer()) return Rational(v.get<long long>());
    } catch (const std::exception& e) {
        throw ConfigError("field " + key + ": " + e.what());
    }
    throw ConfigError("field " + key + " must be an exact rational string or integer");
}

std::string rat(const Rational& v) { return format_rational(v); }

ReebSpectrumModel parse_reeb(const Json& j) {
    ReebSpectrumModel r;
    const std::string kind = j.value("kind", std::string("arithmetic"));
    if (kind == "arithmetic") {
        r.kind = ReebSpectrumModel::Kind::Arithmetic;
        r.t0 = rational_field(j, "t0");
        if (j.contains("cutoff")) r.cutoff = rational_field(j, "cutoff");
        if (!(r.t0 > 0)) throw ConfigError("t0 must be positive");
    } else if (kind == "explicit") {
        r.kind = ReebSpectrumModel::Kind::Explicit;
        if (j.contains("cutoff")) r.cutoff = rational_field(j, "cutoff");
        if (!j.contains("periods") || !j.at("periods").is_array())
            throw ConfigError("explicit spectrum needs a periods array");
        for (const Json& p : j.at("periods")) {
            ReebSpectrumModel::ExplicitPeriod e;
            e.period = rational_field(p, "period");
            if (!(e.period > 0)) throw ConfigError("periods must be positive");
            e.multiplicity = p.value("multiplicity", 1);
            if (p.contains("degrees")) {
                const Json& d = p.at("degrees");
                if (!d.is_array() || d.size() != 2)
                    throw ConfigError("period degrees must be a pair");
                e.degrees = std::make_pair(d[0].get<int>(), d[1].get<int>());
            }
            r.explicit_periods.push_back(std::move(e));
        }
        std::sort(r.explicit_periods.begin(), r.explicit_periods.end(),
                  [](const auto& a, const auto& b) { return a.period < b.period; });
    } else {
        throw ConfigError("unknown spectrum kind: " + kind);
    }
    return r;
}

DomainModel parse_domain(const Json& j) {
    if (j.is_string()) {
        const std::string name = j.get<std::string>();
        if (name == "annulus") return annulus_domain();
        if (name == "ball") return ball_domain();
        throw ConfigError("unknown domain preset: " + name);
    }
    DomainModel d;
    d.name = j.value("name", std::string("custom"));
    if (!j.contains("reeb")) throw ConfigError("domain needs a reeb model");
    d.reeb = parse_reeb(j.at("reeb"));
    if (!j.contains("filling_cohomology"))
        throw ConfigError("domain needs filling_cohomology");
    for (const Json& p : j.at("filling_cohomology")) {
        if (!p.is_array() || p.size() != 2)
            throw ConfigError("filling_cohomology entries are (degree, dimension) pairs");
        d.filling_cohomology.emplace_back(p[0].get<int>(), p[1].get<int>());
        if (d.filling_cohomology.back().second < 0)
            throw ConfigError("filling dimensions must be nonnegative");
    }
    const bool unit_ok = std::any_of(
        d.filling_cohomology.begin(), d.filling_cohomology.end(),
        [](const auto& p) { return p.first == 0 && p.second > 0; });
    if (!unit_ok) throw ConfigError("the filling unit class must live in degree 0");
    if (j.contains("annular_constant_degrees"))
        for (const Json& v : j.at("annular_constant_degrees"))
            d.annular_constant_degrees.push_back(v.get<int>());
    else
        d.annular_constant_degrees = {0, 1};
    if (j.contains("degree_rule")) {
        const Json& r = j.at("degree_rule");
        const std::string kind = r.value("kind", std::string("uniform"));
        if (kind == "uniform") {
            d.degree_rule = DomainModel::FamilyDegreeRule::Uniform;
            d.degree_rule_base = r.value("base", 0);
        } else if (kind == "ball_linear") {
            d.degree_rule = DomainModel::FamilyDegreeRule::BallLinear;
            d.degree_rule_offset = r.value("offset", 1);
            d.degree_rule_step = r.value("step", 2);
        } else {
            throw ConfigError("unknown degree rule: " + kind);
        }
    }
    const std::string unit_rule = j.value("unit_rule", std::string("min_region"));
    if (unit_rule == "min_region")
        d.unit_rule = DomainModel::UnitRule::MinRegion;
    else if (unit_rule == "saturating")
        d.unit_rule = DomainModel::UnitRule::Saturating;
    else
        throw ConfigError("unknown unit rule: " + unit_rule);
    return d;
}

RadialProfile parse_segments(const Json& j) {
    if (!j.contains("radii") || !j.contains("values"))
        throw ConfigError("segment profiles need radii and values");
    std::vector<Rational> radii, values;
    for (const Json& v : j.at("radii"))
        radii.push_back(v.is_string() ? parse_rational(v.get<std::string>())
                                      : Rational(v.get<long long>()));
    for (const Json& v : j.at("values"))
        values.push_back(v.is_string() ? parse_rational(v.get<std::string>())
                                       : Rational(v.get<long long>()));
    Rational final_slope = 0;
    if (j.contains("final_slope")) final_slope = rational_field(j, "final_slope");
    try {
        return RadialProfile::from_breakpoints(std::move(radii), std::move(values),
                                               std::move(final_slope));
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
}

}  // namespace

const RadialProfile* ConfigDocument::find_hamiltonian(const std::string& name) const {
    for (const auto& [n, h] : hamiltonians)
        if (n == name) return &h;
    return nullptr;
}

const CofinalDiagram* ConfigDocument::find_diagram(const std::string& name) const {
    for (const auto& [n, d] : diagrams)
        if (n == name) return &d;
    return nullptr;
}

const HDeltaAClassification* ConfigDocument::find_classification(
    const std::string& name) const {
    for (const auto& [n, c] : classifications)
        if (n == name) return &c;
    return nullptr;
}

ConfigDocument parse_config(const std::string& text) {
    Json root;
    try {
        root = Json::parse(text);
    } catch (const std::exception& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!root.is_object()) throw ConfigError("config root must be an object");

    ConfigDocument doc;
    if (!root.contains("domain")) throw ConfigError("config needs a domain");
    doc.domain = parse_domain(root.at("domain"));

    if (root.contains("hamiltonians")) {
        if (!root.at("hamiltonians").is_object())
            throw ConfigError("hamiltonians must be a name -> construction map");
        for (const auto& [name, spec] : root.at("hamiltonians").items()) {
            if (doc.find_hamiltonian(name))
                throw ConfigError("duplicate hamiltonian name: " + name);
            try {
                if (spec.contains("segments")) {
                    doc.hamiltonians.emplace_back(name, parse_segments(spec.at("segments")));
                    continue;
                }
                const std::string ctor = spec.value("constructor", std::string());
                if (ctor == "H_delta_A") {
                    auto built = make_H_delta_A(doc.domain, rational_field(spec, "delta"),
                                                rational_field(spec, "A"),
                                                rational_field(spec, "r0"),
                                                rational_field(spec, "sigma"));
                    doc.hamiltonians.emplace_back(name, built.profile);
                    doc.classifications.emplace_back(name, built.classification);
                } else if (ctor == "H_zero_A") {
                    doc.hamiltonians.emplace_back(
                        name, make_H_zero_A(doc.domain, rational_field(spec, "A")));
                } else if (ctor == "K") {
                    doc.hamiltonians.emplace_back(
                        name, make_K(doc.domain, rational_field(spec, "r1"),
                                     rational_field(spec, "tau"))
                                  .profile);
                } else if (ctor == "contract" || ctor == "scale" ||
                           ctor == "tau_extension") {
                    const std::string of = spec.value("of", std::string());
                    const RadialProfile* base = doc.find_hamiltonian(of);
                    if (!base)
                        throw ConfigError("hamiltonian " + name +
                                          " references unknown profile: " + of);
                    if (ctor == "contract")
                        doc.hamiltonians.emplace_back(
                            name, contract(*base, rational_field(spec, "r")));
                    else if (ctor == "scale")
                        doc.hamiltonians.emplace_back(
                            name, scale_profile(*base, rational_field(spec, "s")));
                    else
                        doc.hamiltonians.emplace_back(
                            name, tau_extension(*base, doc.domain.reeb,
                                                rational_field(spec, "tau"),
                                                rational_field(spec, "eps")));
                } else {
                    throw ConfigError("hamiltonian " + name +
                                      ": unknown construction '" + ctor + "'");
                }
            } catch (const ConfigError&) {
                throw;
            } catch (const std::invalid_argument& e) {
                throw ConfigError("hamiltonian " + name + ": " + e.what());
            }
        }
    }

    if (root.contains("diagrams")) {
        for (const auto& [name, spec] : root.at("diagrams").items()) {
            if (doc.find_diagram(name)) throw ConfigError("duplicate diagram name: " + name);
            const std::string preset = spec.value("preset", std::string());
            CofinalDiagram d;
            if (preset == "annulus")
                d = annulus_diagram();
            else if (preset == "ball")
                d = ball_diagram();
            else
                throw ConfigError("diagram " + name + ": unknown preset '" + preset + "'");
            if (spec.contains("append_same_slope"))
                append_same_slope_stage(d, rational_field(spec, "append_same_slope"));
            doc.diagrams.emplace_back(name, std::move(d));
        }
    }

    if (root.contains("jobs")) {
        if (!root.at("jobs").is_array()) throw ConfigError("jobs must be a list");
        doc.jobs = root.at("jobs");
        for (const Json& job : doc.jobs)
            if (!job.is_object() || !job.contains("command"))
                throw ConfigError("every job needs a command");
    }

    // normal form: constructions re-serialized with canonical rationals
    Json nf;
    nf["domain"] = domain_json(doc.domain);
    Json hams = Json::object();
    for (const auto& [name, h] : doc.hamiltonians) {
        Json e;
        e["segments"] = profile_json(h);
        hams[name] = std::move(e);
    }
    nf["hamiltonians"] = std::move(hams);
    Json diags = Json::object();
    if (root.contains("diagrams"))
        for (const auto& [name, spec] : root.at("diagrams").items()) {
            Json e;
            e["preset"] = spec.value("preset", std::string());
            if (spec.contains("append_same_slope"))
                e["append_same_slope"] = rat(rational_field(spec, "append_same_slope"));
            diags[name] = std::move(e);
        }
    nf["diagrams"] = std::move(diags);
    nf["jobs"] = doc.jobs;
    doc.normal_form = std::move(nf);
    return doc;
}

std::string normalize_config(const std::string& text) {
    return parse_config(text).normal_form.dump(2) + "\n";
}

std::string preset_config_text(const std::string& name) {
    if (name == "annulus") {
        return R"({
  "domain": "annulus",
  "hamiltonians": {
    "step": {"constructor": "H_delta_A", "delta": "1/10", "A": "5/2", "r0": "2", "sigma": "1/2"},
    "wedge": {"constructor": "H_zero_A", "A": "5/2"},
    "sandwich": {"segments": {"radii": ["0", "1/3", "1"], "values": ["-1", "-1", "0"], "final_slope": "0"}}
  },
  "diagrams": {"main": {"preset": "annulus"}},
  "jobs": [
    {"command": "spectral", "hamiltonian": "step"},
    {"command": "gamma", "hamiltonian": "wedge"},
    {"command": "sh", "diagram": "main"}
  ]
})";
    }
    if (name == "ball") {
        return R"({
  "domain": "ball",
  "hamiltonians": {
    "wedge": {"constructor": "H_zero_A", "A": "5/2"},
    "shallow": {"constructor": "H_zero_A", "A": "1/2"}
  },
  "diagrams": {"main": {"preset": "ball"}},
  "jobs": [
    {"command": "csh", "diagram": "main"},
    {"command": "spectral", "hamiltonian": "wedge"}
  ]
})";
    }
    throw ConfigError("unknown preset bundle: " + name);
}

Json domain_json(const DomainModel& d) {
    Json j;
    j["name"] = d.name;
    Json reeb;
    if (d.reeb.kind == ReebSpectrumModel::Kind::Arithmetic) {
        reeb["kind"] = "arithmetic";
        reeb["t0"] = rat(d.reeb.t0);
    } else {
        reeb["kind"] = "explicit";
        Json periods = Json::array();
        for (const auto& e : d.reeb.explicit_periods) {
            Json p;
            p["period"] = rat(e.period);
            p["multiplicity"] = e.multiplicity;
            if (e.degrees) p["degrees"] = Json::array({e.degrees->first, e.degrees->second});
            periods.push_back(std::move(p));
        }
        reeb["periods"] = std::move(periods);
    }
    reeb["cutoff"] = rat(d.reeb.cutoff);
    j["reeb"] = std::move(reeb);
    Json fc = Json::array();
    for (const auto& [deg, dim] : d.filling_cohomology)
        fc.push_back(Json::array({deg, dim}));
    j["filling_cohomology"] = std::move(fc);
    j["annular_constant_degrees"] = d.annular_constant_degrees;
    Json rule;
    if (d.degree_rule == DomainModel::FamilyDegreeRule::Uniform) {
        rule["kind"] = "uniform";
        rule["base"] = d.degree_rule_base;
    } else {
        rule["kind"] = "ball_linear";
        rule["offset"] = d.degree_rule_offset;
        rule["step"] = d.degree_rule_step;
    }
    j["degree_rule"] = std::move(rule);
    j["unit_rule"] =
        d.unit_rule == DomainModel::UnitRule::MinRegion ? "min_region" : "saturating";
    return j;
}

Json profile_json(const RadialProfile& h) {
    Json j;
    Json radii = Json::array(), values = Json::array();
    for (const auto& r : h.radii) radii.push_back(rat(r));
    for (const auto& v : h.values) values.push_back(rat(v));
    j["radii"] = std::move(radii);
    j["values"] = std::move(values);
    j["final_slope"] = rat(h.final_slope);
    return j;
}

std::string orbits_csv(const OrbitInventory& inv) {
    std::ostringstream os;
    os << "kind,type,radius,period,action,degrees\n";
    for (const auto& g : inv.constants) {
        os << "constant," << orbit_type_name(g.type) << ',' << rat(g.radius_lo) << ",,"
           << rat(g.action) << ',';
        for (std::size_t i = 0; i < g.degrees.size(); ++i)
            os << (i ? " " : "") << g.degrees[i];
        os << '\n';
    }
    for (const auto& f : inv.families) {
        os << "family," << orbit_type_name(f.type) << ',' << rat(f.radius) << ','
           << rat(f.period) << ',' << rat(f.action) << ',' << f.degree0 << ' '
           << (f.degree0 + 1) << '\n';
    }
    return os.str();
}

Json orbits_json(const OrbitInventory& inv) {
    Json rows = Json::array();
    for (const auto& g : inv.constants) {
        Json row;
        row["kind"] = "constant";
        row["type"] = orbit_type_name(g.type);
        row["radius"] = rat(g.radius_lo);
        row["action"] = rat(g.action);
        row["degrees"] = g.degrees;
        rows.push_back(std::move(row));
    }
    for (const auto& f : inv.families) {
        Json row;
        row["kind"] = "family";
        row["type"] = orbit_type_name(f.type);
        row["radius"] = rat(f.radius);
        row["period"] = rat(f.period);
        row["action"] = rat(f.action);
        row["degrees"] = Json::array({f.degree0, f.degree0 + 1});
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string barcode_svg(const std::vector<Bar>& bars) {
    double lo = 0, hi = 1;
    bool first = true;
    for (const auto& b : bars) {
        const double birth = b.birth.convert_to<double>();
        const double death = b.death ? b.death->convert_to<double>() : birth;
        if (first || birth < lo) lo = birth;
        if (first || death > hi) hi = death;
        first = false;
    }
    if (hi <= lo) hi = lo + 1;
    const double margin = (hi - lo) / 10;
    lo -= margin;
    hi += margin;
    const int width = 640;
    const int row = 18;
    const int height = row * (static_cast<int>(bars.size()) + 2);
    auto x_of = [&](double v) { return (v - lo) / (hi - lo) * (width - 40) + 20; };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
       << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    os << "  <line x1=\"20\" y1=\"" << height - row << "\" x2=\"" << width - 20
       << "\" y2=\"" << height - row << "\" stroke=\"black\"/>\n";
    int i = 0;
    for (const auto& b : bars) {
        const double y = row * (i + 1);
        const double x1 = x_of(b.birth.convert_to<double>());
        const double x2 = b.death ? x_of(b.death->convert_to<double>()) : width - 20;
        os << "  <line x1=\"" << x1 << "\" y1=\"" << y << "\" x2=\"" << x2 << "\" y2=\""
           << y << "\" stroke=\"" << (b.death ? "steelblue" : "firebrick")
           << "\" stroke-width=\"4\"/>\n";
        os << "  <text x=\"4\" y=\"" << y + 4 << "\" font-size=\"10\">" << b.degree
           << "</text>\n";
        ++i;
    }
    os << "</svg>\n";
    return os.str();
}

Json barcode_json(const std::vector<Bar>& bars) {
    Json rows = Json::array();
    for (const auto& b : bars) {
        Json row;
        row["birth"] = rat(b.birth);
        row["death"] = b.death ? Json(rat(*b.death)) : Json("inf");
        row["degree"] = b.degree;
        rows.push_back(std::move(row));
    }
    return rows;
}

Json spectral_json(const SpectralResult& r, const FilteredComplex& c) {
    Json j;
    j["class"] = r.class_label;
    j["method"] = r.method;
    if (r.zero_class) {
        j["value"] = "zero-class";
        return j;
    }
    j["value"] = rat(r.value);
    Json witness = Json::array();
    for (int i : r.witness.support()) witness.push_back(c.generators[i].id);
    j["witness"] = std::move(witness);
    return j;
}

Json colimit_json(const ColimitSpace& s) {
    Json j;
    Json w;
    w["a"] = s.window.a.str();
    w["b"] = s.window.b.str();
    j["window"] = std::move(w);
    Json dims = Json::object();
    for (const auto& [deg, dim] : s.dimension_by_degree)
        dims[std::to_string(deg)] = dim;
    j["dimension_by_degree"] = std::move(dims);
    j["unit_image"] = s.unit_image.is_zero() ? "zero" : "nonzero";
    j["stage_of_stabilization"] = s.stage_of_stabilization;
    return j;
}

}  // namespace specnorm
