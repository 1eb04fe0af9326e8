#pragma once

#include "fpcore/scalar.hpp"

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <vector>

namespace fpcore {

using Vector = std::vector<Scalar>;

/// Dense row-major matrix over Q or Q(i). Every entry carries the matrix field.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, Field field = Field::Real);

    static Matrix identity(std::size_t n, Field field = Field::Real);
    static Matrix diagonal(const std::vector<Scalar>& diag, Field field);
    /// Integer literal rows, for fixtures and tests.
    static Matrix from_rows(std::initializer_list<std::initializer_list<long>> rows,
                            Field field = Field::Real);
    static Matrix from_columns(const std::vector<Vector>& columns, std::size_t rows, Field field);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Field field() const { return field_; }
    bool is_square() const { return rows_ == cols_; }
    bool is_zero() const;

    Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Vector column(std::size_t j) const;
    Vector row(std::size_t i) const;

    /// Submatrix starting at (r0, c0).
    Matrix block(std::size_t r0, std::size_t c0, std::size_t nrows, std::size_t ncols) const;
    Matrix hcat(const Matrix& right) const;
    Matrix vcat(const Matrix& below) const;

    Matrix conj_transpose() const;
    Matrix transpose() const;

    Matrix& operator+=(const Matrix& rhs);
    Matrix& operator-=(const Matrix& rhs);
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    Matrix operator-() const;
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Scalar& s, Matrix m);
    friend Vector operator*(const Matrix& a, const Vector& v);

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.field_ == b.field_ &&
               a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    Field field_ = Field::Real;
    std::vector<Scalar> data_;
};

std::ostream& operator<<(std::ostream& os, const Matrix& m);

struct RrefResult {
    Matrix reduced;
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;
};

/// Reduced row-echelon form. Pivot = first nonzero entry scanning rows top-down,
/// columns left to right.
RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Linearly independent vectors spanning a subspace of k^n, stored as the
/// columns of an n x dim matrix.
class SubspaceBasis {
public:
    SubspaceBasis() = default;
    /// Throws DependentBasis unless the columns are independent.
    explicit SubspaceBasis(Matrix columns);

    static SubspaceBasis empty(std::size_t ambient_dim, Field field);
    static SubspaceBasis full(std::size_t ambient_dim, Field field);
    /// Basis for the span of arbitrary (possibly dependent) columns.
    static SubspaceBasis span_of(const Matrix& columns);

    std::size_t ambient_dim() const { return columns_.rows(); }
    std::size_t dim() const { return columns_.cols(); }
    Field field() const { return columns_.field(); }
    const Matrix& matrix() const { return columns_; }
    Vector vector(std::size_t k) const { return columns_.column(k); }

    bool contains(const Vector& v) const;
    bool is_subspace_of(const SubspaceBasis& other) const;
    bool same_span(const SubspaceBasis& other) const;
    bool is_orthogonal_to(const SubspaceBasis& other) const;
    SubspaceBasis intersect(const SubspaceBasis& other) const;
    SubspaceBasis sum(const SubspaceBasis& other) const;

    /// Canonical basis of the span: rows of the RREF of the stacked vectors.
    SubspaceBasis canonical() const;

private:
    // Skips the independence check for columns that are independent by construction.
    static SubspaceBasis independent(Matrix columns);
    friend SubspaceBasis kernel_basis(const Matrix& m);
    friend SubspaceBasis image_basis(const Matrix& m);

    Matrix columns_;
};

SubspaceBasis kernel_basis(const Matrix& m);
/// Pivot columns of m.
SubspaceBasis image_basis(const Matrix& m);

/// One particular solution of m x = b (free variables zero), or nullopt.
std::optional<Vector> solve(const Matrix& m, const Vector& b);
/// Column-wise solve of m X = B; nullopt if any column is inconsistent.
std::optional<Matrix> solve(const Matrix& m, const Matrix& b);

Matrix inverse(const Matrix& m);
Matrix matrix_pow(const Matrix& m, std::size_t n);

/// Standard inner product g(u, v) = sum conj(u_i) v_i.
Scalar inner(const Vector& u, const Vector& v);

/// P = B (B* B)^{-1} B*, the orthogonal projector onto span(B).
Matrix orth_projector(const SubspaceBasis& basis);
SubspaceBasis orth_complement(const SubspaceBasis& basis);

/// The matrix sending domain.column(j) to images.column(j) for every j.
/// The domain columns must form a basis of the whole space.
Matrix from_action(const Matrix& domain, const Matrix& images);

}  // namespace fpcore
