#include "fpcore/matrix.hpp"

#include "fpcore/errors.hpp"

#include <ostream>
#include <utility>

namespace fpcore {

Matrix::Matrix(std::size_t rows, std::size_t cols, Field field)
    : rows_(rows), cols_(cols), field_(field), data_(rows * cols, Scalar::zero(field)) {}

Matrix Matrix::identity(std::size_t n, Field field) {
    Matrix m(n, n, field);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(field);
    return m;
}

Matrix Matrix::diagonal(const std::vector<Scalar>& diag, Field field) {
    Matrix m(diag.size(), diag.size(), field);
    for (std::size_t i = 0; i < diag.size(); ++i) {
        if (diag[i].field() != field) throw FieldMismatch();
        m(i, i) = diag[i];
    }
    return m;
}

Matrix Matrix::from_rows(std::initializer_list<std::initializer_list<long>> rows, Field field) {
    std::size_t nrows = rows.size();
    std::size_t ncols = nrows ? rows.begin()->size() : 0;
    Matrix m(nrows, ncols, field);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != ncols) throw DimensionMismatch("ragged matrix literal");
        std::size_t j = 0;
        for (long v : row) m(i, j++) = Scalar(v, field);
        ++i;
    }
    return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& columns, std::size_t rows, Field field) {
    Matrix m(rows, columns.size(), field);
    for (std::size_t j = 0; j < columns.size(); ++j) {
        if (columns[j].size() != rows) throw DimensionMismatch("column length mismatch");
        for (std::size_t i = 0; i < rows; ++i) {
            if (columns[j][i].field() != field) throw FieldMismatch();
            m(i, j) = columns[j][i];
        }
    }
    return m;
}

bool Matrix::is_zero() const {
    for (const auto& x : data_)
        if (!x.is_zero()) return false;
    return true;
}

Vector Matrix::column(std::size_t j) const {
    Vector v;
    v.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
    return v;
}

Vector Matrix::row(std::size_t i) const {
    return Vector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nrows, std::size_t ncols) const {
    if (r0 + nrows > rows_ || c0 + ncols > cols_) throw DimensionMismatch("block out of range");
    Matrix out(nrows, ncols, field_);
    for (std::size_t i = 0; i < nrows; ++i)
        for (std::size_t j = 0; j < ncols; ++j) out(i, j) = (*this)(r0 + i, c0 + j);
    return out;
}

Matrix Matrix::hcat(const Matrix& right) const {
    if (rows_ != right.rows_) throw DimensionMismatch("hcat: row counts differ");
    if (field_ != right.field_) throw FieldMismatch();
    Matrix out(rows_, cols_ + right.cols_, field_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j);
        for (std::size_t j = 0; j < right.cols_; ++j) out(i, cols_ + j) = right(i, j);
    }
    return out;
}

Matrix Matrix::vcat(const Matrix& below) const {
    if (cols_ != below.cols_) throw DimensionMismatch("vcat: column counts differ");
    if (field_ != below.field_) throw FieldMismatch();
    Matrix out(rows_ + below.rows_, cols_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j);
    for (std::size_t i = 0; i < below.rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out(rows_ + i, j) = below(i, j);
    return out;
}

Matrix Matrix::conj_transpose() const {
    Matrix out(cols_, rows_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j).conj();
    return out;
}

Matrix Matrix::transpose() const {
    Matrix out(cols_, rows_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
}

Matrix& Matrix::operator+=(const Matrix& rhs) {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DimensionMismatch("matrix sum shape");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += rhs.data_[k];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs) {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DimensionMismatch("matrix difference shape");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= rhs.data_[k];
    return *this;
}

Matrix Matrix::operator-() const {
    Matrix out = *this;
    for (auto& x : out.data_) x = -x;
    return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape");
    if (a.field_ != b.field_) throw FieldMismatch();
    Matrix out(a.rows_, b.cols_, a.field_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Scalar& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const Scalar& bkj = b(k, j);
                if (bkj.is_zero()) continue;
                out(i, j).add_product(aik, bkj);
            }
        }
    }
    return out;
}

Matrix operator*(const Scalar& s, Matrix m) {
    for (auto& x : m.data_) x = s * x;
    return m;
}

Vector operator*(const Matrix& a, const Vector& v) {
    if (a.cols_ != v.size()) throw DimensionMismatch("matrix-vector product shape");
    Vector out(a.rows_, Scalar::zero(a.field_));
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k)
            if (!a(i, k).is_zero() && !v[k].is_zero()) out[i].add_product(a(i, k), v[k]);
    return out;
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
    os << "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j);
        os << "]";
    }
    return os << "]";
}

RrefResult rref(const Matrix& m) {
    RrefResult out{m, 0, {}};
    Matrix& r = out.reduced;
    const std::size_t rows = r.rows();
    const std::size_t cols = r.cols();
    std::size_t pivot_row = 0;
    for (std::size_t c = 0; c < cols && pivot_row < rows; ++c) {
        std::size_t p = pivot_row;
        while (p < rows && r(p, c).is_zero()) ++p;
        if (p == rows) continue;
        if (p != pivot_row)
            for (std::size_t j = c; j < cols; ++j) std::swap(r(p, j), r(pivot_row, j));

        const Scalar lead = r(pivot_row, c);
        for (std::size_t j = c; j < cols; ++j)
            if (!r(pivot_row, j).is_zero()) r(pivot_row, j) /= lead;

        for (std::size_t i = 0; i < rows; ++i) {
            if (i == pivot_row || r(i, c).is_zero()) continue;
            const Scalar factor = r(i, c);
            for (std::size_t j = c; j < cols; ++j)
                if (!r(pivot_row, j).is_zero()) r(i, j).sub_product(factor, r(pivot_row, j));
        }
        out.pivots.push_back(c);
        ++pivot_row;
    }
    out.rank = out.pivots.size();
    return out;
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

// ---------------------------------------------------------------------------
// SubspaceBasis

SubspaceBasis::SubspaceBasis(Matrix columns) : columns_(std::move(columns)) {
    if (rank(columns_) != columns_.cols()) throw DependentBasis();
}

SubspaceBasis SubspaceBasis::independent(Matrix columns) {
    SubspaceBasis b;
    b.columns_ = std::move(columns);
    return b;
}

SubspaceBasis SubspaceBasis::empty(std::size_t ambient_dim, Field field) {
    SubspaceBasis b;
    b.columns_ = Matrix(ambient_dim, 0, field);
    return b;
}

SubspaceBasis SubspaceBasis::full(std::size_t ambient_dim, Field field) {
    SubspaceBasis b;
    b.columns_ = Matrix::identity(ambient_dim, field);
    return b;
}

SubspaceBasis SubspaceBasis::span_of(const Matrix& columns) { return image_basis(columns); }

bool SubspaceBasis::contains(const Vector& v) const {
    if (v.size() != ambient_dim()) throw DimensionMismatch("vector/subspace dimension mismatch");
    return solve(columns_, v).has_value();
}

bool SubspaceBasis::is_subspace_of(const SubspaceBasis& other) const {
    if (ambient_dim() != other.ambient_dim())
        throw DimensionMismatch("subspaces live in different ambient spaces");
    if (dim() == 0) return true;
    return rank(other.columns_.hcat(columns_)) == other.dim();
}

bool SubspaceBasis::same_span(const SubspaceBasis& other) const {
    return dim() == other.dim() && is_subspace_of(other);
}

bool SubspaceBasis::is_orthogonal_to(const SubspaceBasis& other) const {
    if (dim() == 0 || other.dim() == 0) return true;
    return (columns_.conj_transpose() * other.columns_).is_zero();
}

SubspaceBasis SubspaceBasis::intersect(const SubspaceBasis& other) const {
    if (ambient_dim() != other.ambient_dim())
        throw DimensionMismatch("subspaces live in different ambient spaces");
    // x in both iff x = B1 a = B2 b, i.e. [B1 | -B2] (a; b) = 0.
    Matrix stacked = columns_.hcat(-other.columns_);
    SubspaceBasis coeffs = kernel_basis(stacked);
    Matrix top = coeffs.matrix().block(0, 0, dim(), coeffs.dim());
    return span_of(columns_ * top);
}

SubspaceBasis SubspaceBasis::sum(const SubspaceBasis& other) const {
    return span_of(columns_.hcat(other.columns_));
}

SubspaceBasis SubspaceBasis::canonical() const {
    RrefResult r = rref(columns_.transpose());
    SubspaceBasis b;
    b.columns_ = r.reduced.block(0, 0, r.rank, ambient_dim()).transpose();
    return b;
}

SubspaceBasis kernel_basis(const Matrix& m) {
    RrefResult r = rref(m);
    const std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto p : r.pivots) is_pivot[p] = true;

    std::vector<Vector> vecs;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        Vector v(n, Scalar::zero(m.field()));
        v[f] = Scalar::one(m.field());
        for (std::size_t k = 0; k < r.pivots.size(); ++k) v[r.pivots[k]] = -r.reduced(k, f);
        vecs.push_back(std::move(v));
    }
    SubspaceBasis out = SubspaceBasis::empty(n, m.field());
    if (vecs.empty()) return out;
    return SubspaceBasis::independent(Matrix::from_columns(vecs, n, m.field()));
}

SubspaceBasis image_basis(const Matrix& m) {
    RrefResult r = rref(m);
    if (r.rank == 0) return SubspaceBasis::empty(m.rows(), m.field());
    std::vector<Vector> cols;
    cols.reserve(r.rank);
    for (auto p : r.pivots) cols.push_back(m.column(p));
    return SubspaceBasis::independent(Matrix::from_columns(cols, m.rows(), m.field()));
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
    if (b.size() != m.rows()) throw DimensionMismatch("solve: right-hand side length");
    Matrix aug(m.rows(), 1, m.field());
    for (std::size_t i = 0; i < b.size(); ++i) aug(i, 0) = b[i];
    auto x = solve(m, aug);
    if (!x) return std::nullopt;
    return x->column(0);
}

std::optional<Matrix> solve(const Matrix& m, const Matrix& b) {
    if (b.rows() != m.rows()) throw DimensionMismatch("solve: right-hand side rows");
    const std::size_t n = m.cols();
    RrefResult r = rref(m.hcat(b));
    // A pivot among the augmented columns means an inconsistent system.
    for (auto p : r.pivots)
        if (p >= n) return std::nullopt;
    Matrix x(n, b.cols(), m.field());
    for (std::size_t k = 0; k < r.pivots.size(); ++k)
        for (std::size_t j = 0; j < b.cols(); ++j) x(r.pivots[k], j) = r.reduced(k, n + j);
    return x;
}

Matrix inverse(const Matrix& m) {
    if (!m.is_square()) throw NotSquare();
    const std::size_t n = m.rows();
    if (n == 0) return m;
    RrefResult r = rref(m.hcat(Matrix::identity(n, m.field())));
    if (r.rank < n || r.pivots[n - 1] != n - 1) throw Singular();
    return r.reduced.block(0, n, n, n);
}

Matrix matrix_pow(const Matrix& m, std::size_t n) {
    if (!m.is_square()) throw NotSquare();
    if (n == 0) return Matrix::identity(m.rows(), m.field());
    Matrix out = m;
    for (std::size_t k = 1; k < n; ++k) out = m * out;
    return out;
}

Scalar inner(const Vector& u, const Vector& v) {
    if (u.size() != v.size()) throw DimensionMismatch("inner product length");
    if (u.empty()) return Scalar();
    Scalar acc = Scalar::zero(u[0].field());
    for (std::size_t i = 0; i < u.size(); ++i) acc.add_product(u[i].conj(), v[i]);
    return acc;
}

Matrix orth_projector(const SubspaceBasis& basis) {
    const std::size_t n = basis.ambient_dim();
    if (basis.dim() == 0) return Matrix(n, n, basis.field());
    const Matrix& b = basis.matrix();
    Matrix bstar = b.conj_transpose();
    Matrix gram = bstar * b;
    Matrix gram_inv;
    try {
        gram_inv = inverse(gram);
    } catch (const Singular&) {
        throw DependentBasis();
    }
    return b * gram_inv * bstar;
}

SubspaceBasis orth_complement(const SubspaceBasis& basis) {
    if (basis.dim() == 0) return SubspaceBasis::full(basis.ambient_dim(), basis.field());
    return kernel_basis(basis.matrix().conj_transpose());
}

Matrix from_action(const Matrix& domain, const Matrix& images) {
    if (!domain.is_square()) throw DimensionMismatch("from_action: domain must be a full basis");
    if (images.rows() != domain.rows() || images.cols() != domain.cols())
        throw DimensionMismatch("from_action: image shape");
    return images * inverse(domain);
}

}  // namespace fpcore
