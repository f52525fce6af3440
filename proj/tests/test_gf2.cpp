#include <doctest.h>

#include <random>

#include "specnorm/gf2.hpp"

using namespace specnorm::gf2;

namespace {

Matrix random_matrix(std::mt19937_64& rng, int rows, int cols) {
    Matrix m = Matrix::zero(rows, cols);
    std::bernoulli_distribution coin(0.4);
    for (int j = 0; j < cols; ++j) {
        std::vector<int> support;
        for (int i = 0; i < rows; ++i)
            if (coin(rng)) support.push_back(i);
        m.set_column(j, Vector(std::move(support)));
    }
    return m;
}

}  // namespace

TEST_CASE("vector addition is symmetric difference") {
    const Vector a({0, 2, 5});
    const Vector b({2, 3, 5});
    CHECK((a + b) == Vector({0, 3}));
    CHECK((a + a).is_zero());
    CHECK(a.pivot() == 5);
    CHECK(Vector::unit(4).pivot() == 4);
}

TEST_CASE("reduction produces distinct pivots and a valid transform") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 40; ++t) {
        const Matrix m = random_matrix(rng, 8, 8);
        const Reduction r = reduce(m);
        CHECK(m * r.transform == r.reduced);
        std::vector<bool> seen(8, false);
        for (int j = 0; j < 8; ++j) {
            if (r.reduced.column(j).is_zero()) continue;
            const int p = r.reduced.column(j).pivot();
            CHECK_FALSE(seen[p]);
            seen[p] = true;
        }
        // transform is invertible upper-triangular with unit diagonal
        for (int j = 0; j < 8; ++j) {
            CHECK(r.transform.entry(j, j));
            for (int i : r.transform.column(j).support()) CHECK(i <= j);
        }
    }
}

TEST_CASE("rank equals rank of the transpose") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 40; ++t) {
        const Matrix m = random_matrix(rng, 8, 8);
        CHECK(rank(m) == rank(m.transpose()));
    }
}

TEST_CASE("solve agrees with exhaustive search") {
    std::mt19937_64 rng(13);
    for (int t = 0; t < 30; ++t) {
        const Matrix m = random_matrix(rng, 6, 5);
        std::bernoulli_distribution coin(0.5);
        std::vector<int> support;
        for (int i = 0; i < 6; ++i)
            if (coin(rng)) support.push_back(i);
        const Vector b{std::vector<int>(support)};

        bool solvable = false;
        for (int mask = 0; mask < (1 << 5) && !solvable; ++mask) {
            Vector acc;
            for (int j = 0; j < 5; ++j)
                if (mask & (1 << j)) acc += m.column(j);
            solvable = (acc == b);
        }
        const auto x = solve(m, b);
        CHECK(x.has_value() == solvable);
        if (x) CHECK(m.apply(*x) == b);
    }
}

TEST_CASE("quotient basis of the zero subspace is the unit vectors") {
    const auto q = quotient_basis(3, Matrix::zero(3, 0));
    REQUIRE(q.size() == 3);
    for (int i = 0; i < 3; ++i) CHECK(q[i] == Vector::unit(i));
}

TEST_CASE("kernel and image have complementary dimensions") {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 30; ++t) {
        const Matrix m = random_matrix(rng, 7, 9);
        const auto k = kernel_basis(m);
        const auto im = image_basis(m);
        CHECK(static_cast<int>(k.size() + im.size()) == 9);
        for (const auto& v : k) CHECK(m.apply(v).is_zero());
        // image basis is pivot-reduced
        std::vector<bool> seen(7, false);
        for (const auto& v : im) {
            CHECK_FALSE(v.is_zero());
            CHECK_FALSE(seen[v.pivot()]);
            seen[v.pivot()] = true;
        }
    }
}

TEST_CASE("reduce_against finds the minimal-pivot coset element") {
    std::mt19937_64 rng(19);
    for (int t = 0; t < 30; ++t) {
        const Matrix m = random_matrix(rng, 8, 4);
        const auto basis = image_basis(m);
        std::bernoulli_distribution coin(0.5);
        std::vector<int> support;
        for (int i = 0; i < 8; ++i)
            if (coin(rng)) support.push_back(i);
        const Vector v{std::vector<int>(support)};

        const Vector reduced = reduce_against(v, basis);
        // exhaustive: the best element of v + span(basis)
        Vector best = v;
        const int k = static_cast<int>(basis.size());
        for (int mask = 1; mask < (1 << k); ++mask) {
            Vector z = v;
            for (int i = 0; i < k; ++i)
                if (mask & (1 << i)) z += basis[i];
            const bool z_better = z.is_zero() ||
                                  (!best.is_zero() && !z.is_zero() && z.pivot() < best.pivot());
            if (best.is_zero()) continue;
            if (z_better) best = z;
        }
        CHECK(reduced.is_zero() == best.is_zero());
        if (!reduced.is_zero()) CHECK(reduced.pivot() == best.pivot());
    }
}

TEST_CASE("matrix algebra basics") {
    const Matrix id = Matrix::identity(4);
    std::mt19937_64 rng(23);
    const Matrix m = random_matrix(rng, 4, 4);
    CHECK(id * m == m);
    CHECK(m * id == m);
    CHECK((m + m).is_zero());
    CHECK(m.transpose().transpose() == m);
}
