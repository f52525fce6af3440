#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace specnorm::gf2 {

// A vector over the two-element field is its support set: a strictly
// increasing list of indices. Addition is symmetric difference.
class Vector {
public:
    Vector() = default;
    explicit Vector(std::vector<int> support);

    static Vector unit(int index) { return Vector(std::vector<int>{index}); }

    const std::vector<int>& support() const { return support_; }
    bool is_zero() const { return support_.empty(); }
    bool contains(int index) const;
    // Largest support index, the pivot under the global generator order.
    int pivot() const;

    Vector operator+(const Vector& other) const;
    Vector& operator+=(const Vector& other);
    bool operator==(const Vector& other) const { return support_ == other.support_; }
    bool operator!=(const Vector& other) const { return !(*this == other); }

private:
    std::vector<int> support_;
};

// Sparse column-major matrix over GF(2).
class Matrix {
public:
    Matrix() : n_rows_(0) {}
    Matrix(int n_rows, std::vector<Vector> columns);
    static Matrix zero(int n_rows, int n_cols);
    static Matrix identity(int n);

    int n_rows() const { return n_rows_; }
    int n_cols() const { return static_cast<int>(columns_.size()); }
    const Vector& column(int j) const { return columns_[j]; }
    const std::vector<Vector>& columns() const { return columns_; }
    void set_column(int j, Vector v);
    void append_column(Vector v);
    bool entry(int i, int j) const { return columns_[j].contains(i); }
    bool is_zero() const;

    Vector apply(const Vector& x) const;       // matrix * vector
    Matrix operator*(const Matrix& other) const;
    Matrix operator+(const Matrix& other) const;
    bool operator==(const Matrix& other) const;
    bool operator!=(const Matrix& other) const { return !(*this == other); }
    Matrix transpose() const;

private:
    int n_rows_;
    std::vector<Vector> columns_;
};

struct Reduction {
    Matrix reduced;    // = input * transform
    Matrix transform;  // invertible, upper-triangular with unit diagonal
};

// Persistence-style column reduction. The pivot of a column is its largest
// index; distinct nonzero columns of the result have distinct pivots.
Reduction reduce(const Matrix& m);

int rank(const Matrix& m);

// Solves m * x = b. Absence of a solution is a value, not an error.
std::optional<Vector> solve(const Matrix& m, const Vector& b);

// Coset representatives spanning ambient/colspan(subspace): the unit vectors
// at non-pivot indices.
std::vector<Vector> quotient_basis(int ambient_dim, const Matrix& subspace);

// Basis of the kernel of m, read off the transform columns under zero
// reduced columns.
std::vector<Vector> kernel_basis(const Matrix& m);

// Basis of the column span: the nonzero columns of the reduction.
std::vector<Vector> image_basis(const Matrix& m);

// Reduces v against a pivot-reduced basis (distinct pivots assumed). The
// result is the unique minimal-pivot element of v + span(basis).
Vector reduce_against(Vector v, const std::vector<Vector>& basis);

}  // namespace specnorm::gf2
