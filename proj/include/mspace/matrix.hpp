#pragma once

#include <initializer_list>
#include <optional>
#include <vector>

#include "mspace/field.hpp"

namespace mspace {

// Column vector in K^n, entries in canonical form.
using Vec = std::vector<Scalar>;

Vec zero_vec(FieldDesc field, int n);
Vec unit_vec(FieldDesc field, int n, int i);
Vec vec_from_ints(FieldDesc field, const std::vector<std::int64_t>& entries);
bool is_zero_vec(const Vec& v);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_scale(const Scalar& c, const Vec& v);
Scalar dot(const Vec& a, const Vec& b);

// Dense rows x cols matrix over one field, row-major.
class Matrix {
public:
    Matrix(FieldDesc field, int rows, int cols); // zero matrix

    static Matrix identity(FieldDesc field, int n);
    static Matrix from_ints(FieldDesc field, std::initializer_list<std::initializer_list<std::int64_t>> rows);
    static Matrix from_rows(FieldDesc field, const std::vector<Vec>& rows);
    static Matrix from_cols(FieldDesc field, const std::vector<Vec>& cols);
    // Inverse of row-major vectorization.
    static Matrix from_vec(FieldDesc field, int rows, int cols, const Vec& entries);

    const FieldDesc& field() const { return field_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    const Scalar& at(int i, int j) const { return entries_[static_cast<std::size_t>(i) * cols_ + j]; }
    Scalar& at(int i, int j) { return entries_[static_cast<std::size_t>(i) * cols_ + j]; }

    // Row-major vectorization.
    const Vec& entries() const { return entries_; }

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;
    Matrix operator-() const;
    Matrix scaled(const Scalar& c) const;
    Vec apply(const Vec& x) const; // matrix * column vector

    Matrix transpose() const;
    Scalar det() const;       // square only
    Matrix inverse() const;   // square only; SingularMatrix if not invertible
    bool is_invertible() const;
    int rank() const;
    bool is_zero() const;
    // Skew-symmetric with zero diagonal (the diagonal condition is
    // independent in characteristic 2).
    bool is_alternate() const;

    Vec row(int i) const;
    Vec col(int j) const;
    Matrix submatrix(int i0, int j0, int nrows, int ncols) const;

    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    std::string str() const;

private:
    void check_compatible(const Matrix& o) const;

    FieldDesc field_;
    int rows_, cols_;
    Vec entries_;
};

// In-place reduced row echelon form over the rows' common field. Zero rows
// are removed; returns the pivot column of each remaining row, strictly
// increasing. The result is the canonical basis of the row span.
std::vector<int> rref_in_place(std::vector<Vec>& rows);

// Canonical basis of {x : A x = 0}.
std::vector<Vec> nullspace(const Matrix& a);

// One solution of A x = b with all free variables set to zero (the first
// solution in pivot order), or nullopt if the system is inconsistent.
std::optional<Vec> solve(const Matrix& a, const Vec& b);

} // namespace mspace
