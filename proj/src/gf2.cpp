#include "specnorm/gf2.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace specnorm::gf2 {

Vector::Vector(std::vector<int> support) : support_(std::move(support)) {
    for (std::size_t i = 1; i < support_.size(); ++i)
        if (support_[i - 1] >= support_[i])
            throw std::invalid_argument("Vector support must be strictly increasing");
}

bool Vector::contains(int index) const {
    return std::binary_search(support_.begin(), support_.end(), index);
}

int Vector::pivot() const {
    if (support_.empty()) throw std::logic_error("pivot of zero vector");
    return support_.back();
}

Vector Vector::operator+(const Vector& other) const {
    Vector out;
    out.support_.reserve(support_.size() + other.support_.size());
    std::set_symmetric_difference(support_.begin(), support_.end(),
                                  other.support_.begin(), other.support_.end(),
                                  std::back_inserter(out.support_));
    return out;
}

Vector& Vector::operator+=(const Vector& other) {
    *this = *this + other;
    return *this;
}

Matrix::Matrix(int n_rows, std::vector<Vector> columns)
    : n_rows_(n_rows), columns_(std::move(columns)) {
    for (const auto& col : columns_)
        if (!col.is_zero() && col.pivot() >= n_rows_)
            throw std::invalid_argument("column support exceeds row count");
}

Matrix Matrix::zero(int n_rows, int n_cols) {
    return Matrix(n_rows, std::vector<Vector>(n_cols));
}

Matrix Matrix::identity(int n) {
    std::vector<Vector> cols;
    cols.reserve(n);
    for (int i = 0; i < n; ++i) cols.push_back(Vector::unit(i));
    return Matrix(n, std::move(cols));
}

void Matrix::set_column(int j, Vector v) {
    if (!v.is_zero() && v.pivot() >= n_rows_)
        throw std::invalid_argument("column support exceeds row count");
    columns_[j] = std::move(v);
}

void Matrix::append_column(Vector v) {
    if (!v.is_zero() && v.pivot() >= n_rows_)
        throw std::invalid_argument("column support exceeds row count");
    columns_.push_back(std::move(v));
}

bool Matrix::is_zero() const {
    return std::all_of(columns_.begin(), columns_.end(),
                       [](const Vector& c) { return c.is_zero(); });
}

Vector Matrix::apply(const Vector& x) const {
    Vector out;
    for (int j : x.support()) {
        if (j >= n_cols()) throw std::invalid_argument("vector index exceeds column count");
        out += columns_[j];
    }
    return out;
}

Matrix Matrix::operator*(const Matrix& other) const {
    if (n_cols() != other.n_rows())
        throw std::invalid_argument("matrix product dimension mismatch");
    std::vector<Vector> cols;
    cols.reserve(other.n_cols());
    for (int j = 0; j < other.n_cols(); ++j) cols.push_back(apply(other.column(j)));
    return Matrix(n_rows_, std::move(cols));
}

Matrix Matrix::operator+(const Matrix& other) const {
    if (n_rows_ != other.n_rows_ || n_cols() != other.n_cols())
        throw std::invalid_argument("matrix sum dimension mismatch");
    std::vector<Vector> cols;
    cols.reserve(n_cols());
    for (int j = 0; j < n_cols(); ++j) cols.push_back(columns_[j] + other.columns_[j]);
    return Matrix(n_rows_, std::move(cols));
}

bool Matrix::operator==(const Matrix& other) const {
    return n_rows_ == other.n_rows_ && columns_ == other.columns_;
}

Matrix Matrix::transpose() const {
    std::vector<Vector> cols(n_rows_);
    std::vector<std::vector<int>> supports(n_rows_);
    for (int j = 0; j < n_cols(); ++j)
        for (int i : columns_[j].support()) supports[i].push_back(j);
    for (int i = 0; i < n_rows_; ++i) cols[i] = Vector(std::move(supports[i]));
    return Matrix(n_cols(), std::move(cols));
}

Reduction reduce(const Matrix& m) {
    Reduction out{m, Matrix::identity(m.n_cols())};
    std::unordered_map<int, int> pivot_owner;  // pivot row -> column index
    for (int j = 0; j < m.n_cols(); ++j) {
        Vector col = out.reduced.column(j);
        Vector comb = out.transform.column(j);
        while (!col.is_zero()) {
            auto it = pivot_owner.find(col.pivot());
            if (it == pivot_owner.end()) break;
            col += out.reduced.column(it->second);
            comb += out.transform.column(it->second);
        }
        if (!col.is_zero()) pivot_owner.emplace(col.pivot(), j);
        out.reduced.set_column(j, std::move(col));
        out.transform.set_column(j, std::move(comb));
    }
    return out;
}

int rank(const Matrix& m) {
    const Reduction r = reduce(m);
    int count = 0;
    for (int j = 0; j < r.reduced.n_cols(); ++j)
        if (!r.reduced.column(j).is_zero()) ++count;
    return count;
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
    if (!b.is_zero() && b.pivot() >= m.n_rows())
        throw std::invalid_argument("rhs support exceeds row count");
    const Reduction r = reduce(m);
    std::unordered_map<int, int> pivot_owner;
    for (int j = 0; j < r.reduced.n_cols(); ++j)
        if (!r.reduced.column(j).is_zero())
            pivot_owner.emplace(r.reduced.column(j).pivot(), j);
    Vector rem = b;
    Vector comb;
    while (!rem.is_zero()) {
        auto it = pivot_owner.find(rem.pivot());
        if (it == pivot_owner.end()) return std::nullopt;
        rem += r.reduced.column(it->second);
        comb += Vector::unit(it->second);
    }
    return r.transform.apply(comb);
}

std::vector<Vector> quotient_basis(int ambient_dim, const Matrix& subspace) {
    if (subspace.n_rows() != ambient_dim)
        throw std::invalid_argument("subspace row count must equal ambient dimension");
    const Reduction r = reduce(subspace);
    std::vector<bool> is_pivot(ambient_dim, false);
    for (int j = 0; j < r.reduced.n_cols(); ++j)
        if (!r.reduced.column(j).is_zero()) is_pivot[r.reduced.column(j).pivot()] = true;
    std::vector<Vector> out;
    for (int i = 0; i < ambient_dim; ++i)
        if (!is_pivot[i]) out.push_back(Vector::unit(i));
    return out;
}

std::vector<Vector> kernel_basis(const Matrix& m) {
    const Reduction r = reduce(m);
    std::vector<Vector> out;
    for (int j = 0; j < r.reduced.n_cols(); ++j)
        if (r.reduced.column(j).is_zero()) out.push_back(r.transform.column(j));
    return out;
}

std::vector<Vector> image_basis(const Matrix& m) {
    const Reduction r = reduce(m);
    std::vector<Vector> out;
    for (int j = 0; j < r.reduced.n_cols(); ++j)
        if (!r.reduced.column(j).is_zero()) out.push_back(r.reduced.column(j));
    return out;
}

Vector reduce_against(Vector v, const std::vector<Vector>& basis) {
    std::unordered_map<int, const Vector*> pivot_owner;
    for (const auto& b : basis)
        if (!b.is_zero()) pivot_owner.emplace(b.pivot(), &b);
    while (!v.is_zero()) {
        auto it = pivot_owner.find(v.pivot());
        if (it == pivot_owner.end()) break;
        v += *it->second;
    }
    return v;
}

}  // namespace specnorm::gf2
