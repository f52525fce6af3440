#include "specnorm/colimit.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace specnorm {

namespace {

int index_of_id(const FilteredComplex& c, const std::string& id) {
    for (int i = 0; i < c.size(); ++i)
        if (c.generators[i].id == id) return i;
    return -1;
}

}  // namespace

ValidationReport validate_diagram(const CofinalDiagram& d) {
    ValidationReport report;
    auto fail = [&](std::string msg) {
        report.ok = false;
        report.violations.push_back(std::move(msg));
    };

    if (d.stages.empty()) {
        fail("diagram has no stages");
        return report;
    }
    if (!(d.stages.front().slope < d.domain.reeb.min_period()))
        fail("stage 0 slope must lie below the basic Reeb period");
    for (std::size_t i = 0; i + 1 < d.stages.size(); ++i)
        if (!(d.stages[i].slope < d.stages[i + 1].slope))
            fail("slopes must be strictly increasing at stage " + std::to_string(i));
    if (d.maps.size() + 1 != d.stages.size())
        fail("diagram needs exactly one map per consecutive stage pair");

    for (std::size_t i = 0; i < d.maps.size() && i + 1 < d.stages.size(); ++i) {
        const auto& f = d.maps[i];
        if (f.source.size() != d.stages[i].complex.size() ||
            f.target.size() != d.stages[i + 1].complex.size()) {
            fail("map " + std::to_string(i) + " does not match its stages");
            continue;
        }
        if (f.shift > 0) fail("continuation map " + std::to_string(i) + " has positive shift");
        const auto mv = validate_chain_map(f);
        if (!mv.ok)
            fail("map " + std::to_string(i) + ": " + mv.violations.front());
    }

    const auto& c0 = d.stages.front().complex;
    if (d.unit.is_zero()) fail("diagram has no designated unit");
    for (int i : d.unit.support()) {
        if (i < 0 || i >= c0.size()) {
            fail("unit support outside stage 0");
            return report;
        }
        if (c0.generators[i].degree != 0) fail("unit is not homogeneous of degree 0");
    }
    if (!c0.differential.apply(d.unit).is_zero()) fail("unit is not a cocycle");
    return report;
}

namespace {

void require_stable(const CofinalDiagram& d) {
    if (!d.stabilized)
        throw std::invalid_argument("colimit of an unstabilized diagram is undefined");
    const auto report = validate_diagram(d);
    if (!report.ok)
        throw std::invalid_argument("invalid diagram: " + report.violations.front());
}

// The stage-0 unit pushed through all continuation maps.
gf2::Vector pushed_unit(const CofinalDiagram& d) {
    gf2::Vector v = d.unit;
    for (const auto& f : d.maps) v = f.matrix.apply(v);
    return v;
}

}  // namespace

ColimitSpace colimit(const CofinalDiagram& d, const Window& w) {
    require_stable(d);
    const FilteredComplex& last = d.stages.back().complex;

    ColimitSpace out;
    out.window = w;
    out.basis = cohomology(last, w);
    out.dimension_by_degree = out.basis.dimension_by_degree();
    out.stage_of_stabilization = static_cast<int>(d.stages.size()) - 1;

    const gf2::Vector chain = pushed_unit(d);
    for (int i : chain.support())
        if (!(Bound::finite(last.generators[i].action) < w.b))
            throw std::invalid_argument(
                "unit representative escapes the window upper bound");
    // the quotient by the sub-window part is a chain map, so the projected
    // chain is still a cocycle
    const std::vector<int> keep = window_indices(last, w);
    std::vector<int> local;
    for (std::size_t l = 0; l < keep.size(); ++l)
        if (chain.contains(keep[l])) local.push_back(static_cast<int>(l));
    const FilteredComplex sub = window_subquotient(last, w);
    const auto coords = class_coordinates(sub, out.basis, gf2::Vector(std::move(local)));
    if (!coords)
        throw std::logic_error("projected unit is not a cocycle in the window");
    out.unit_image = *coords;
    return out;
}

bool sh_nonzero(const CofinalDiagram& d) {
    return !colimit(d, Window::full()).unit_image.is_zero();
}

Bound c_sh(const CofinalDiagram& d) {
    require_stable(d);
    const FilteredComplex& last = d.stages.back().complex;

    std::set<Rational> positive;
    for (const auto& stage : d.stages)
        for (const auto& v : stage.complex.spectrum())
            if (v > 0) positive.insert(v);
    if (positive.empty()) return Bound::pos_inf();

    const std::vector<Rational> s(positive.begin(), positive.end());
    const Rational eps = s.front() / 2;
    const Window w_eps = Window::below(eps);
    const FilteredChainMap id = FilteredChainMap::identity(last);

    // the map is constant between spectrum values, so scanning midpoints
    // (plus one value beyond the top) finds the exact vanishing threshold
    std::vector<std::pair<Rational, Rational>> grid;  // (candidate c, value if it vanishes)
    grid.emplace_back((eps + s.front()) / 2, Rational(0));
    for (std::size_t i = 0; i + 1 < s.size(); ++i)
        grid.emplace_back((s[i] + s[i + 1]) / 2, s[i]);
    grid.emplace_back(s.back() + 1, s.back());

    for (const auto& [c, value] : grid) {
        const InducedMap im = induced_on_cohomology(id, w_eps, Window::below(c));
        if (im.matrix.n_cols() == 0 || im.is_zero()) return Bound::finite(value);
    }
    return Bound::pos_inf();
}

ThmBReport thmB_bound_check(const CofinalDiagram& d, const std::vector<ModelHamiltonian>& hams) {
    if (sh_nonzero(d))
        throw std::invalid_argument(
            "the capacity bound applies to vanishing symplectic cohomology");
    ThmBReport report;
    report.c_sh_value = c_sh(d);
    if (!report.c_sh_value.is_finite()) {
        report.ok = false;
        report.failure = "c_sh is infinite although the unit dies";
        return report;
    }
    const Rational cap = report.c_sh_value.value();
    for (const auto& m : hams) {
        ThmBRow row;
        row.name = m.name;
        row.c1 = c_unit(m).value;
        row.gamma_value = gamma(m);
        row.ok = row.c1 <= cap && row.gamma_value <= 2 * cap;
        if (!row.ok) {
            report.ok = false;
            if (report.failure.empty())
                report.failure = "bound violated for " + m.name;
        }
        report.rows.push_back(std::move(row));
    }
    return report;
}

FactorizationReport factorization_check(const CofinalDiagram& d, const ModelHamiltonian& m,
                                        const HDeltaAClassification& cls, const Rational& eps) {
    FactorizationReport rep;
    const auto sep = separation_check(cls, eps);
    if (!sep.ok)
        throw std::invalid_argument("window separation fails: " + sep.failing_inequality);
    if (!sh_nonzero(d))
        throw std::invalid_argument(
            "the projection triangle needs nonvanishing symplectic cohomology");

    rep.lower_bound = cls.A - eps;
    const Window w = Window::above(rep.lower_bound);
    const CohomologyBasis basis = cohomology(m.complex, w);

    // project the unit chain to the window and read off its class
    const std::vector<int> keep = window_indices(m.complex, w);
    std::vector<int> local;
    for (std::size_t l = 0; l < keep.size(); ++l)
        if (keep[l] == m.unit_index) local.push_back(static_cast<int>(l));
    const FilteredComplex sub = window_subquotient(m.complex, w);
    const auto coords = class_coordinates(sub, basis, gf2::Vector(std::move(local)));
    if (!coords || coords->is_zero()) {
        rep.ok = false;
        rep.failure = "unit dies under projection to the window above A - eps";
        return rep;
    }

    rep.c_value = c_unit(m).value;
    if (!(rep.c_value >= rep.lower_bound)) {
        rep.ok = false;
        rep.failure = "c(1) fails the projection lower bound";
    }
    return rep;
}

namespace {

CofinalDiagram preset_diagram(const DomainModel& domain, bool kill_unit) {
    CofinalDiagram d;
    d.name = domain.name;
    d.domain = domain;
    d.stabilized = true;

    const std::vector<Rational> slopes = {Rational(1, 2), Rational(3, 2), Rational(5, 2)};
    for (const auto& tau : slopes) {
        DiagramStage stage;
        stage.slope = tau;
        const RadialProfile profile = make_K(domain, Rational(1), tau).profile;
        FilteredComplex c = build_complex(domain, profile);
        if (kill_unit) {
            const int u = index_of_id(c, "c0.0");
            const int f = index_of_id(c, "f1.0");
            if (f >= 0) {
                c.differential.set_column(f, gf2::Vector::unit(u));
                const auto report = validate(c);
                if (!report.ok)
                    throw std::logic_error("preset differential invalid: " +
                                           report.violations.front());
            }
        }
        stage.complex = std::move(c);
        d.stages.push_back(std::move(stage));
    }

    for (std::size_t i = 0; i + 1 < d.stages.size(); ++i) {
        const auto& src = d.stages[i].complex;
        const auto& tgt = d.stages[i + 1].complex;
        FilteredChainMap f;
        f.source = src;
        f.target = tgt;
        f.shift = 0;
        f.matrix = gf2::Matrix::zero(tgt.size(), src.size());
        for (int j = 0; j < src.size(); ++j) {
            const int t = index_of_id(tgt, src.generators[j].id);
            if (t < 0) throw std::logic_error("preset stages do not nest");
            f.matrix.set_column(j, gf2::Vector::unit(t));
        }
        const auto mv = validate_chain_map(f);
        if (!mv.ok) throw std::logic_error("preset map invalid: " + mv.violations.front());
        d.maps.push_back(std::move(f));
    }

    const int u0 = index_of_id(d.stages.front().complex, "c0.0");
    if (u0 < 0) throw std::logic_error("preset stage 0 has no unit constant");
    d.unit = gf2::Vector::unit(u0);
    return d;
}

}  // namespace

CofinalDiagram annulus_diagram() { return preset_diagram(annulus_domain(), false); }

CofinalDiagram ball_diagram() { return preset_diagram(ball_domain(), true); }

void append_same_slope_stage(CofinalDiagram& d, const Rational& new_slope) {
    if (d.stages.empty()) throw std::invalid_argument("diagram has no stages");
    if (!(new_slope > d.stages.back().slope))
        throw std::invalid_argument("appended slope must increase");
    DiagramStage stage;
    stage.complex = d.stages.back().complex;
    stage.slope = new_slope;
    d.maps.push_back(FilteredChainMap::identity(d.stages.back().complex));
    d.stages.push_back(std::move(stage));
}

}  // namespace specnorm
