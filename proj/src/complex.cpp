#include "specnorm/complex.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace specnorm {

std::vector<Rational> FilteredComplex::spectrum() const {
    std::vector<Rational> out;
    out.reserve(generators.size());
    for (const auto& g : generators) out.push_back(g.action);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool FilteredComplex::action_in_spectrum(const Rational& v) const {
    return std::any_of(generators.begin(), generators.end(),
                       [&](const OrbitGenerator& g) { return g.action == v; });
}

bool Window::contains(const Rational& action) const {
    const Bound v = Bound::finite(action);
    return a < v && v < b;
}

std::map<int, int> CohomologyBasis::dimension_by_degree() const {
    std::map<int, int> out;
    for (int d : degrees) ++out[d];
    return out;
}

namespace {

bool sort_key_less(const OrbitGenerator& x, const OrbitGenerator& y) {
    if (x.action != y.action) return x.action < y.action;
    if (x.group != y.group) return x.group < y.group;
    return x.member_index < y.member_index;
}

}  // namespace

ValidationReport validate(const FilteredComplex& c) {
    ValidationReport report;
    auto fail = [&](std::string msg) {
        report.ok = false;
        report.violations.push_back(std::move(msg));
    };

    const int n = c.size();
    if (c.differential.n_rows() != n || c.differential.n_cols() != n) {
        fail("differential shape does not match generator count");
        return report;
    }

    for (int j = 0; j < n; ++j) {
        for (int i : c.differential.column(j).support()) {
            const auto& src = c.generators[j];
            const auto& tgt = c.generators[i];
            if (tgt.degree != src.degree + 1)
                fail("degree violation: d(" + src.id + ") hits " + tgt.id);
            if (tgt.action > src.action)
                fail("action violation: d(" + src.id + ") raises action at " + tgt.id);
        }
    }

    const gf2::Matrix square = c.differential * c.differential;
    if (!square.is_zero()) fail("differential does not square to zero");

    for (int j = 0; j + 1 < n; ++j)
        if (sort_key_less(c.generators[j + 1], c.generators[j]))
            fail("generators not sorted by (action, group, member) at index " +
                 std::to_string(j));

    for (const auto& g : c.generators)
        if (g.kind == OrbitGenerator::Kind::FamilyMember &&
            g.member_index != 0 && g.member_index != 1)
            fail("family member " + g.id + " has Morse index outside {0,1}");

    return report;
}

void require_valid_window(const FilteredComplex& c, const Window& w) {
    if (!(w.a < w.b)) throw std::invalid_argument("window endpoints must satisfy a < b");
    for (const Bound* e : {&w.a, &w.b})
        if (e->is_finite() && c.action_in_spectrum(e->value()))
            throw std::invalid_argument("window endpoint " + format_rational(e->value()) +
                                        " collides with the action spectrum");
}

std::vector<int> window_indices(const FilteredComplex& c, const Window& w) {
    require_valid_window(c, w);
    std::vector<int> out;
    for (int i = 0; i < c.size(); ++i)
        if (w.contains(c.generators[i].action)) out.push_back(i);
    return out;
}

FilteredComplex window_subquotient(const FilteredComplex& c, const Window& w) {
    const std::vector<int> keep = window_indices(c, w);
    std::unordered_map<int, int> local;
    for (std::size_t l = 0; l < keep.size(); ++l) local.emplace(keep[l], static_cast<int>(l));

    FilteredComplex out;
    out.generators.reserve(keep.size());
    for (int i : keep) out.generators.push_back(c.generators[i]);

    gf2::Matrix diff = gf2::Matrix::zero(static_cast<int>(keep.size()),
                                         static_cast<int>(keep.size()));
    for (std::size_t l = 0; l < keep.size(); ++l) {
        std::vector<int> support;
        for (int i : c.differential.column(keep[l]).support()) {
            auto it = local.find(i);
            // entries below the window are dropped: CF_{<a} is a subcomplex
            if (it != local.end()) support.push_back(it->second);
        }
        std::sort(support.begin(), support.end());
        diff.set_column(static_cast<int>(l), gf2::Vector(std::move(support)));
    }
    out.differential = std::move(diff);
    return out;
}

namespace {

// Per-degree generator indices of a complex.
std::map<int, std::vector<int>> degree_strata(const FilteredComplex& c) {
    std::map<int, std::vector<int>> out;
    for (int i = 0; i < c.size(); ++i) out[c.generators[i].degree].push_back(i);
    return out;
}

gf2::Vector relabel(const gf2::Vector& v, const std::vector<int>& to_global) {
    std::vector<int> support;
    support.reserve(v.support().size());
    for (int l : v.support()) support.push_back(to_global[l]);
    std::sort(support.begin(), support.end());
    return gf2::Vector(std::move(support));
}

}  // namespace

CohomologyBasis cohomology(const FilteredComplex& c, const Window& w) {
    const FilteredComplex sub = window_subquotient(c, w);
    CohomologyBasis out;
    out.window = w;

    const auto strata = degree_strata(sub);
    std::unordered_map<int, int> local_of;  // window index -> position within its stratum
    for (const auto& [d, idx] : strata)
        for (std::size_t l = 0; l < idx.size(); ++l) local_of[idx[l]] = static_cast<int>(l);

    for (const auto& [d, idx] : strata) {
        const auto up = strata.find(d + 1);
        const int rows_up = up == strata.end() ? 0 : static_cast<int>(up->second.size());

        // d-th differential in stratum-local coordinates
        gf2::Matrix d_here = gf2::Matrix::zero(rows_up, static_cast<int>(idx.size()));
        for (std::size_t l = 0; l < idx.size(); ++l) {
            std::vector<int> support;
            for (int i : sub.differential.column(idx[l]).support())
                support.push_back(local_of[i]);
            std::sort(support.begin(), support.end());
            d_here.set_column(static_cast<int>(l), gf2::Vector(std::move(support)));
        }

        // image of the (d-1)-th differential, landing in this stratum
        const auto down = strata.find(d - 1);
        std::vector<gf2::Vector> boundaries;
        if (down != strata.end()) {
            gf2::Matrix d_below = gf2::Matrix::zero(static_cast<int>(idx.size()),
                                                    static_cast<int>(down->second.size()));
            for (std::size_t l = 0; l < down->second.size(); ++l) {
                std::vector<int> support;
                for (int i : sub.differential.column(down->second[l]).support())
                    support.push_back(local_of[i]);
                std::sort(support.begin(), support.end());
                d_below.set_column(static_cast<int>(l), gf2::Vector(std::move(support)));
            }
            boundaries = gf2::image_basis(d_below);
        }

        std::vector<gf2::Vector> pivots = boundaries;  // distinct pivots throughout
        for (const gf2::Vector& z : gf2::kernel_basis(d_here)) {
            const gf2::Vector r = gf2::reduce_against(z, pivots);
            if (r.is_zero()) continue;
            pivots.push_back(r);
            out.classes.push_back(relabel(r, idx));
            out.degrees.push_back(d);
        }
    }
    return out;
}

CohomologyBasis cohomology(const FilteredComplex& c) {
    return cohomology(c, Window::full());
}

std::optional<gf2::Vector> class_coordinates(const FilteredComplex& window_complex,
                                             const CohomologyBasis& basis,
                                             const gf2::Vector& cocycle) {
    if (!window_complex.differential.apply(cocycle).is_zero()) return std::nullopt;
    // Solve [classes | boundaries] x = cocycle and keep the class block.
    gf2::Matrix system = gf2::Matrix::zero(window_complex.size(), 0);
    for (const auto& cl : basis.classes) system.append_column(cl);
    const int n_classes = system.n_cols();
    for (int j = 0; j < window_complex.size(); ++j)
        system.append_column(window_complex.differential.column(j));
    const auto x = gf2::solve(system, cocycle);
    if (!x) throw std::logic_error("cocycle not expressible in basis + coboundaries");
    std::vector<int> coords;
    for (int j : x->support())
        if (j < n_classes) coords.push_back(j);
    return gf2::Vector(std::move(coords));
}

std::vector<Bar> barcode(const FilteredComplex& c) {
    const auto report = validate(c);
    if (!report.ok) throw std::invalid_argument("barcode requires a validated complex");
    for (int j = 0; j < c.size(); ++j)
        for (int i : c.differential.column(j).support())
            if (i >= j)
                throw std::invalid_argument(
                    "barcode requires the differential to strictly decrease the "
                    "generator order");

    const gf2::Reduction r = gf2::reduce(c.differential);
    std::vector<std::optional<int>> killed_by(c.size());
    std::vector<bool> is_pivot_row(c.size(), false);
    for (int j = 0; j < c.size(); ++j) {
        if (r.reduced.column(j).is_zero()) continue;
        const int i = r.reduced.column(j).pivot();
        killed_by[i] = j;
        is_pivot_row[i] = true;
    }

    std::vector<Bar> bars;
    for (int i = 0; i < c.size(); ++i) {
        if (!r.reduced.column(i).is_zero()) continue;  // i is not a birth
        Bar bar;
        bar.birth = c.generators[i].action;
        bar.degree = c.generators[i].degree;
        if (killed_by[i]) bar.death = c.generators[*killed_by[i]].action;
        bars.push_back(std::move(bar));
    }
    return bars;
}

std::string barcode_csv(const std::vector<Bar>& bars) {
    std::ostringstream os;
    os << "birth,death,degree\n";
    for (const auto& bar : bars) {
        os << format_rational(bar.birth) << ','
           << (bar.death ? format_rational(*bar.death) : std::string("inf")) << ','
           << bar.degree << '\n';
    }
    return os.str();
}

}  // namespace specnorm
