#include "specnorm/chain_maps.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace specnorm {

FilteredChainMap FilteredChainMap::identity(const FilteredComplex& c) {
    return FilteredChainMap{c, c, gf2::Matrix::identity(c.size()), Rational(0)};
}

FilteredChainMap FilteredChainMap::zero(const FilteredComplex& source,
                                        const FilteredComplex& target) {
    return FilteredChainMap{source, target,
                            gf2::Matrix::zero(target.size(), source.size()), Rational(0)};
}

MapValidationReport validate_chain_map(const FilteredChainMap& f) {
    MapValidationReport report;
    auto fail = [&](std::string msg) {
        report.ok = false;
        report.violations.push_back(std::move(msg));
    };

    if (f.matrix.n_rows() != f.target.size() || f.matrix.n_cols() != f.source.size()) {
        fail("matrix shape does not match source/target sizes");
        return report;
    }

    for (int j = 0; j < f.matrix.n_cols(); ++j) {
        const auto& src = f.source.generators[j];
        for (int i : f.matrix.column(j).support()) {
            const auto& tgt = f.target.generators[i];
            if (tgt.degree != src.degree)
                fail("grading violation: " + src.id + " -> " + tgt.id);
            if (tgt.action > src.action + f.shift)
                fail("action shift violation: " + src.id + " -> " + tgt.id);
        }
    }

    const gf2::Matrix lhs = f.matrix * f.source.differential;
    const gf2::Matrix rhs = f.target.differential * f.matrix;
    if (lhs != rhs) fail("map does not commute with the differentials");
    return report;
}

FilteredChainMap compose(const FilteredChainMap& g, const FilteredChainMap& f) {
    if (g.source.size() != f.target.size())
        throw std::invalid_argument("compose: inner complexes do not match");
    return FilteredChainMap{f.source, g.target, g.matrix * f.matrix, f.shift + g.shift};
}

BarricadeReport barricade_check(const gf2::Matrix& m, const BlockPartition& source_tags,
                                const BlockPartition& target_tags) {
    if (m.n_cols() != source_tags.size() || m.n_rows() != target_tags.size())
        throw std::invalid_argument("barricade partition does not cover the generators");
    BarricadeReport report;
    for (int j = 0; j < m.n_cols(); ++j) {
        if (!source_tags.in_b[j]) continue;
        for (int i : m.column(j).support())
            if (!target_tags.in_b[i]) {
                report.ok = false;
                report.crossings.emplace_back(j, i);
            }
    }
    return report;
}

BarricadeReport barricade_check(const FilteredChainMap& f, const BlockPartition& source_tags,
                                const BlockPartition& target_tags) {
    return barricade_check(f.matrix, source_tags, target_tags);
}

BarricadeReport barricade_check(const FilteredComplex& c, const BlockPartition& tags) {
    return barricade_check(c.differential, tags, tags);
}

namespace {

std::vector<int> tagged_indices(const BlockPartition& tags, bool want_b) {
    std::vector<int> out;
    for (int i = 0; i < tags.size(); ++i)
        if (tags.in_b[i] == want_b) out.push_back(i);
    return out;
}

// Compress a matrix to the given row/column subsets; entries outside the
// row subset must either be droppable (drop=true) or absent.
gf2::Matrix compress(const gf2::Matrix& m, const std::vector<int>& rows,
                     const std::vector<int>& cols, bool drop_outside_rows) {
    std::unordered_map<int, int> row_of;
    for (std::size_t l = 0; l < rows.size(); ++l) row_of.emplace(rows[l], static_cast<int>(l));
    gf2::Matrix out = gf2::Matrix::zero(static_cast<int>(rows.size()),
                                        static_cast<int>(cols.size()));
    for (std::size_t l = 0; l < cols.size(); ++l) {
        std::vector<int> support;
        for (int i : m.column(cols[l]).support()) {
            auto it = row_of.find(i);
            if (it != row_of.end()) {
                support.push_back(it->second);
            } else if (!drop_outside_rows) {
                throw std::logic_error("entry outside the retained block");
            }
        }
        std::sort(support.begin(), support.end());
        out.set_column(static_cast<int>(l), gf2::Vector(std::move(support)));
    }
    return out;
}

FilteredComplex subcomplex_on(const FilteredComplex& c, const std::vector<int>& keep,
                              bool drop_outside) {
    FilteredComplex out;
    for (int i : keep) out.generators.push_back(c.generators[i]);
    out.differential = compress(c.differential, keep, keep, drop_outside);
    return out;
}

}  // namespace

FilteredComplex restrict_to_block(const FilteredComplex& c, const BlockPartition& tags) {
    const auto check = barricade_check(c, tags);
    if (!check.ok)
        throw std::invalid_argument("differential violates the barricade; no subcomplex");
    return subcomplex_on(c, tagged_indices(tags, true), false);
}

FilteredComplex quotient_by_block(const FilteredComplex& c, const BlockPartition& tags) {
    const auto check = barricade_check(c, tags);
    if (!check.ok)
        throw std::invalid_argument("differential violates the barricade; no quotient");
    return subcomplex_on(c, tagged_indices(tags, false), true);
}

std::pair<FilteredChainMap, FilteredChainMap> restrict_and_project(
    const FilteredChainMap& f, const BlockPartition& source_tags,
    const BlockPartition& target_tags) {
    const auto fc = barricade_check(f, source_tags, target_tags);
    if (!fc.ok) throw std::invalid_argument("map violates the barricade");

    const auto src_b = tagged_indices(source_tags, true);
    const auto src_c = tagged_indices(source_tags, false);
    const auto tgt_b = tagged_indices(target_tags, true);
    const auto tgt_c = tagged_indices(target_tags, false);

    FilteredChainMap f_b{restrict_to_block(f.source, source_tags),
                         restrict_to_block(f.target, target_tags),
                         compress(f.matrix, tgt_b, src_b, false), f.shift};
    FilteredChainMap f_c{quotient_by_block(f.source, source_tags),
                         quotient_by_block(f.target, target_tags),
                         compress(f.matrix, tgt_c, src_c, true), f.shift};

    // the square f_c . pi = pi . f must commute bit-exactly
    const gf2::Matrix pi_src = compress(gf2::Matrix::identity(f.source.size()), src_c,
                                        [&] {
                                            std::vector<int> all(f.source.size());
                                            for (int i = 0; i < f.source.size(); ++i) all[i] = i;
                                            return all;
                                        }(),
                                        true);
    const gf2::Matrix pi_tgt = compress(gf2::Matrix::identity(f.target.size()), tgt_c,
                                        [&] {
                                            std::vector<int> all(f.target.size());
                                            for (int i = 0; i < f.target.size(); ++i) all[i] = i;
                                            return all;
                                        }(),
                                        true);
    if (f_c.matrix * pi_src != pi_tgt * f.matrix)
        throw std::logic_error("projected map fails to commute with the projections");

    return {std::move(f_b), std::move(f_c)};
}

HomotopyReport verify_homotopy(const ChainHomotopy& h) {
    const FilteredComplex& src = h.f.source;
    const FilteredComplex& tgt = h.f.target;
    if (h.psi.n_cols() != src.size() || h.psi.n_rows() != tgt.size())
        throw std::invalid_argument("homotopy shape mismatch");
    for (int j = 0; j < h.psi.n_cols(); ++j)
        for (int i : h.psi.column(j).support())
            if (tgt.generators[i].degree != src.generators[j].degree - 1)
                throw std::invalid_argument("homotopy is not of degree -1");

    HomotopyReport report;
    report.defect = h.f.matrix + h.g.matrix + tgt.differential * h.psi +
                    h.psi * src.differential;
    report.ok = report.defect.is_zero();
    return report;
}

ChainHomotopy project_homotopy(const ChainHomotopy& h, const BlockPartition& tags) {
    const auto psi_check = barricade_check(h.psi, tags, tags);
    if (!psi_check.ok)
        throw std::invalid_argument("homotopy violates the barricade");
    auto [f_b, f_c] = restrict_and_project(h.f, tags, tags);
    auto [g_b, g_c] = restrict_and_project(h.g, tags, tags);
    (void)f_b;
    (void)g_b;
    const auto idx_c = tagged_indices(tags, false);
    gf2::Matrix psi_c = compress(h.psi, idx_c, idx_c, true);
    return ChainHomotopy{std::move(f_c), std::move(g_c), std::move(psi_c)};
}

bool InducedMap::is_isomorphism() const {
    return source_basis.dimension() == target_basis.dimension() &&
           gf2::rank(matrix) == source_basis.dimension();
}

namespace {

void require_window_compatible(const FilteredChainMap& f, const Window& w_source,
                               const Window& w_target) {
    auto shifted_below = [&](const Bound& s, const Bound& t) {
        if (s.is_neg_inf()) return true;            // nothing below to move
        if (s.is_pos_inf()) return t.is_pos_inf();  // full upper range needs full target
        if (t.is_pos_inf()) return true;
        return s.value() + f.shift <= t.value();
    };
    if (!shifted_below(w_source.b, w_target.b) || !shifted_below(w_source.a, w_target.a))
        throw std::invalid_argument("windows incompatible with the action shift");
}

}  // namespace

InducedMap induced_on_cohomology(const FilteredChainMap& f, const Window& w_source,
                                 const Window& w_target) {
    require_window_compatible(f, w_source, w_target);

    const std::vector<int> src_idx = window_indices(f.source, w_source);
    const std::vector<int> tgt_idx = window_indices(f.target, w_target);
    std::unordered_map<int, int> tgt_local;
    for (std::size_t l = 0; l < tgt_idx.size(); ++l)
        tgt_local.emplace(tgt_idx[l], static_cast<int>(l));

    // compress f to the window subquotients; entries below the target window
    // are killed by the quotient
    gf2::Matrix window_matrix = gf2::Matrix::zero(static_cast<int>(tgt_idx.size()),
                                                  static_cast<int>(src_idx.size()));
    for (std::size_t l = 0; l < src_idx.size(); ++l) {
        std::vector<int> support;
        for (int i : f.matrix.column(src_idx[l]).support()) {
            auto it = tgt_local.find(i);
            if (it != tgt_local.end()) {
                support.push_back(it->second);
            } else if (!(Bound::finite(f.target.generators[i].action) < w_target.b)) {
                throw std::logic_error("window map escapes above the target window");
            }
        }
        std::sort(support.begin(), support.end());
        window_matrix.set_column(static_cast<int>(l), gf2::Vector(std::move(support)));
    }

    const FilteredComplex src_sub = window_subquotient(f.source, w_source);
    const FilteredComplex tgt_sub = window_subquotient(f.target, w_target);
    if (window_matrix * src_sub.differential != tgt_sub.differential * window_matrix)
        throw std::logic_error("compressed window map is not a chain map");

    InducedMap out;
    out.source_basis = cohomology(f.source, w_source);
    out.target_basis = cohomology(f.target, w_target);
    out.matrix = gf2::Matrix::zero(out.target_basis.dimension(), 0);
    for (const auto& cls : out.source_basis.classes) {
        const gf2::Vector image = window_matrix.apply(cls);
        const auto coords = class_coordinates(tgt_sub, out.target_basis, image);
        if (!coords) throw std::logic_error("image of a cocycle is not a cocycle");
        out.matrix.append_column(*coords);
    }
    return out;
}

FilteredChainMap inclusion_map(const FilteredComplex& c, const Window& w_small,
                               const Window& w_big) {
    if (w_small.a != w_big.a)
        throw std::invalid_argument("inclusion requires equal lower endpoints");
    if (!(w_small.b <= w_big.b))
        throw std::invalid_argument("inclusion requires w_small.b <= w_big.b");
    const auto small_idx = window_indices(c, w_small);
    const auto big_idx = window_indices(c, w_big);
    std::unordered_map<int, int> big_local;
    for (std::size_t l = 0; l < big_idx.size(); ++l)
        big_local.emplace(big_idx[l], static_cast<int>(l));

    FilteredChainMap out{window_subquotient(c, w_small), window_subquotient(c, w_big),
                         gf2::Matrix::zero(static_cast<int>(big_idx.size()),
                                           static_cast<int>(small_idx.size())),
                         Rational(0)};
    for (std::size_t l = 0; l < small_idx.size(); ++l)
        out.matrix.set_column(static_cast<int>(l),
                              gf2::Vector::unit(big_local.at(small_idx[l])));
    return out;
}

FilteredChainMap projection_map(const FilteredComplex& c, const Window& w_big,
                                const Window& w_quot) {
    if (w_big.b != w_quot.b)
        throw std::invalid_argument("projection requires equal upper endpoints");
    if (!(w_big.a <= w_quot.a))
        throw std::invalid_argument("projection requires w_big.a <= w_quot.a");
    const auto big_idx = window_indices(c, w_big);
    const auto quot_idx = window_indices(c, w_quot);
    std::unordered_map<int, int> quot_local;
    for (std::size_t l = 0; l < quot_idx.size(); ++l)
        quot_local.emplace(quot_idx[l], static_cast<int>(l));

    FilteredChainMap out{window_subquotient(c, w_big), window_subquotient(c, w_quot),
                         gf2::Matrix::zero(static_cast<int>(quot_idx.size()),
                                           static_cast<int>(big_idx.size())),
                         Rational(0)};
    for (std::size_t l = 0; l < big_idx.size(); ++l) {
        auto it = quot_local.find(big_idx[l]);
        if (it != quot_local.end())
            out.matrix.set_column(static_cast<int>(l), gf2::Vector::unit(it->second));
    }
    return out;
}

namespace {

int rank_in_degree(const gf2::Matrix& m, const CohomologyBasis& source_basis, int degree) {
    gf2::Matrix sub = gf2::Matrix::zero(m.n_rows(), 0);
    for (int j = 0; j < m.n_cols(); ++j)
        if (source_basis.degrees[j] == degree) sub.append_column(m.column(j));
    return gf2::rank(sub);
}

int dim_in_degree(const CohomologyBasis& basis, int degree) {
    int count = 0;
    for (int d : basis.degrees)
        if (d == degree) ++count;
    return count;
}

}  // namespace

LesReport les_exactness_check(const FilteredComplex& c, const Bound& a, const Bound& b,
                              const Bound& cc) {
    if (!(a < b && b < cc))
        throw std::invalid_argument("les endpoints must satisfy a < b < c");
    const Window wab{a, b}, wac{a, cc}, wbc{b, cc};
    require_valid_window(c, wab);
    require_valid_window(c, wac);
    require_valid_window(c, wbc);

    const FilteredChainMap incl = inclusion_map(c, wab, wac);
    const FilteredChainMap proj = projection_map(c, wac, wbc);
    const InducedMap I = induced_on_cohomology(incl, wab, wac);
    const InducedMap P = induced_on_cohomology(proj, wac, wbc);

    // connecting map by the zig-zag: lift, apply the big differential, land
    // in the sub-window
    const auto ab_idx = window_indices(c, wab);
    const auto ac_idx = window_indices(c, wac);
    const auto bc_idx = window_indices(c, wbc);
    std::unordered_map<int, int> ab_local, ac_local;
    for (std::size_t l = 0; l < ab_idx.size(); ++l) ab_local.emplace(ab_idx[l], (int)l);
    for (std::size_t l = 0; l < ac_idx.size(); ++l) ac_local.emplace(ac_idx[l], (int)l);
    const FilteredComplex sub_ac = window_subquotient(c, wac);
    const FilteredComplex sub_ab = window_subquotient(c, wab);

    gf2::Matrix delta = gf2::Matrix::zero(I.source_basis.dimension(), 0);
    for (const auto& cls : P.target_basis.classes) {
        std::vector<int> lifted;
        for (int l : cls.support()) lifted.push_back(ac_local.at(bc_idx[l]));
        std::sort(lifted.begin(), lifted.end());
        const gf2::Vector boundary = sub_ac.differential.apply(gf2::Vector(std::move(lifted)));
        std::vector<int> in_ab;
        for (int l : boundary.support()) {
            auto it = ab_local.find(ac_idx[l]);
            if (it == ab_local.end())
                throw std::logic_error("zig-zag boundary escapes the sub-window");
            in_ab.push_back(it->second);
        }
        std::sort(in_ab.begin(), in_ab.end());
        const auto coords = class_coordinates(sub_ab, I.source_basis, gf2::Vector(std::move(in_ab)));
        if (!coords) throw std::logic_error("connecting image is not a cocycle");
        delta.append_column(*coords);
    }

    LesReport report;
    auto fail = [&](int degree, const std::string& where) {
        if (!report.ok) return;
        report.ok = false;
        report.failure = "degree " + std::to_string(degree) + " " + where;
    };

    if (!(P.matrix * I.matrix).is_zero()) fail(0, "composite pi*iota nonzero");
    if (!(delta * P.matrix).is_zero()) fail(0, "composite delta*pi nonzero");
    if (!(I.matrix * delta).is_zero()) fail(0, "composite iota*delta nonzero");

    std::vector<int> degrees;
    for (const auto& basis : {I.source_basis, I.target_basis, P.target_basis})
        degrees.insert(degrees.end(), basis.degrees.begin(), basis.degrees.end());
    std::sort(degrees.begin(), degrees.end());
    degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());

    for (int d : degrees) {
        if (rank_in_degree(I.matrix, I.source_basis, d) +
                rank_in_degree(P.matrix, P.source_basis, d) !=
            dim_in_degree(I.target_basis, d))
            fail(d, "at H(a,c)");
        if (rank_in_degree(P.matrix, P.source_basis, d) +
                rank_in_degree(delta, P.target_basis, d) !=
            dim_in_degree(P.target_basis, d))
            fail(d, "at H(b,c)");
        if (rank_in_degree(delta, P.target_basis, d) +
                rank_in_degree(I.matrix, I.source_basis, d + 1) !=
            dim_in_degree(I.source_basis, d + 1))
            fail(d, "at H(a,b)");
    }
    return report;
}

}  // namespace specnorm
