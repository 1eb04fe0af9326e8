#include "fpcore/finite_potent.hpp"

#include "fpcore/errors.hpp"

#include <algorithm>
#include <utility>

namespace fpcore {

Operator::Operator(Matrix block, Ambient ambient) : block_(std::move(block)), ambient_(ambient) {
    if (!block_.is_square()) throw NotSquare();
    if (block_.rows() != ambient_.support)
        throw DimensionMismatch("operator block size does not match its ambient support");
}

Operator Operator::finite(Matrix block) {
    const std::size_t n = block.rows();
    return Operator(std::move(block), Ambient::finite(n));
}

Operator Operator::countable(Matrix block) {
    const std::size_t m = block.rows();
    return Operator(std::move(block), Ambient::countable(m));
}

Operator Operator::from_padded(const Matrix& padded, Ambient ambient) {
    if (padded.rows() != ambient.padded_dim() || padded.cols() != ambient.padded_dim())
        throw DimensionMismatch("padded matrix does not match ambient");
    if (!ambient.is_countable()) return Operator(padded, ambient);
    const std::size_t m = ambient.support;
    for (std::size_t k = 0; k <= m; ++k) {
        if (!padded(m, k).is_zero() || !padded(k, m).is_zero())
            throw Error("result is not finitely supported");
    }
    return Operator(padded.block(0, 0, m, m), ambient);
}

Operator Operator::zero(Ambient ambient, Field field) {
    return Operator(Matrix(ambient.support, ambient.support, field), ambient);
}

Operator Operator::identity_on_support(Ambient ambient, Field field) {
    return Operator(Matrix::identity(ambient.support, field), ambient);
}

Matrix Operator::padded() const {
    if (!ambient_.is_countable()) return block_;
    const std::size_t m = block_.rows();
    Matrix out(m + 1, m + 1, block_.field());
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) out(i, j) = block_(i, j);
    return out;
}

Operator Operator::adjoint() const { return Operator(block_.conj_transpose(), ambient_); }

Operator Operator::pow(std::size_t n) const {
    if (n == 0 && ambient_.is_countable())
        throw Error("the identity of a countable ambient is not finitely supported");
    return Operator(matrix_pow(block_, n), ambient_);
}

void require_same_ambient(const Operator& a, const Operator& b) {
    if (!(a.ambient() == b.ambient())) throw AmbientMismatch();
    if (a.field() != b.field()) throw FieldMismatch();
}

Operator operator+(const Operator& a, const Operator& b) {
    require_same_ambient(a, b);
    return Operator(a.block_ + b.block_, a.ambient_);
}

Operator operator-(const Operator& a, const Operator& b) {
    require_same_ambient(a, b);
    return Operator(a.block_ - b.block_, a.ambient_);
}

Operator operator*(const Operator& a, const Operator& b) {
    require_same_ambient(a, b);
    return Operator(a.block_ * b.block_, a.ambient_);
}

Matrix pad(const Operator& op) { return op.padded(); }

std::size_t matrix_index(const Matrix& m) {
    if (!m.is_square()) throw NotSquare();
    Matrix power = Matrix::identity(m.rows(), m.field());
    std::size_t prev = rank(power);
    for (std::size_t i = 0;; ++i) {
        power = m * power;
        std::size_t next = rank(power);
        if (next == prev) return i;
        prev = next;
    }
}

std::size_t index(const Operator& op) { return matrix_index(op.padded()); }

AstDecomposition ast_decomposition(const Operator& op) {
    AstDecomposition out;
    out.index = index(op);
    const std::size_t exponent = std::max<std::size_t>(out.index, 1);
    // The padded power is diag(block^i, 0), so the block carries W and the
    // finite part of U; the tail sits in U whenever the ambient is countable.
    Matrix power = matrix_pow(op.block(), exponent);
    out.W = image_basis(power);
    out.U_block = kernel_basis(power);
    out.tail_in_U = op.ambient().is_countable();
    return out;
}

Matrix ast_projector(const Matrix& padded) {
    const std::size_t n = padded.rows();
    const std::size_t exponent = std::max<std::size_t>(matrix_index(padded), 1);
    Matrix power = matrix_pow(padded, exponent);
    SubspaceBasis w = image_basis(power);
    SubspaceBasis u = kernel_basis(power);
    Matrix domain = w.matrix().hcat(u.matrix());
    Matrix images = w.matrix().hcat(Matrix(n, u.dim(), padded.field()));
    return from_action(domain, images);
}

CnDecomposition cn_decomposition(const Operator& op) {
    Matrix p = op.padded();
    Matrix core = p * ast_projector(p);
    Operator core_part = Operator::from_padded(core, op.ambient());
    return {core_part, op - core_part};
}

}  // namespace fpcore
