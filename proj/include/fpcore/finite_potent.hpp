#pragma once

#include "fpcore/matrix.hpp"

#include <cstddef>

namespace fpcore {

/// Where an operator lives: k^n, or a countably infinite-dimensional space
/// where only the first `support` basis vectors are moved.
struct Ambient {
    enum class Kind { Finite, Countable };

    Kind kind = Kind::Finite;
    std::size_t support = 0;

    static Ambient finite(std::size_t n) { return {Kind::Finite, n}; }
    static Ambient countable(std::size_t m) { return {Kind::Countable, m}; }

    bool is_countable() const { return kind == Kind::Countable; }
    /// Size of the matrix that faithfully represents the operator.
    std::size_t padded_dim() const { return is_countable() ? support + 1 : support; }

    friend bool operator==(const Ambient&, const Ambient&) = default;
};

/// Finite potent endomorphism with finite support.
///
/// For a countable ambient the operator sends e_j to sum_i block(i, j) e_i for
/// j <= m and kills every e_k with k > m. Such an operator has finite rank, so
/// it is finite potent, and the tail span(e_k : k > m) lies in its kernel.
class Operator {
public:
    Operator() = default;
    Operator(Matrix block, Ambient ambient);

    static Operator finite(Matrix block);
    static Operator countable(Matrix block);
    /// Rebuilds an operator from a padded matrix; the padding row and column
    /// must be zero.
    static Operator from_padded(const Matrix& padded, Ambient ambient);
    static Operator zero(Ambient ambient, Field field);
    static Operator identity_on_support(Ambient ambient, Field field);

    const Matrix& block() const { return block_; }
    const Ambient& ambient() const { return ambient_; }
    Field field() const { return block_.field(); }
    std::size_t support() const { return block_.rows(); }

    /// Matrix with one extra zero row and column for a countable ambient.
    Matrix padded() const;

    bool is_zero() const { return block_.is_zero(); }
    Operator adjoint() const;
    Operator pow(std::size_t n) const;

    friend Operator operator+(const Operator& a, const Operator& b);
    friend Operator operator-(const Operator& a, const Operator& b);
    /// Composition a ∘ b.
    friend Operator operator*(const Operator& a, const Operator& b);
    friend bool operator==(const Operator& a, const Operator& b) {
        return a.ambient_ == b.ambient_ && a.block_ == b.block_;
    }

private:
    Matrix block_;
    Ambient ambient_;
};

void require_same_ambient(const Operator& a, const Operator& b);

/// pad(op): the block itself for a finite ambient, otherwise the block bordered
/// by a zero row and column standing in for the whole tail.
Matrix pad(const Operator& op);

/// Smallest i >= 0 with rank(M^i) = rank(M^{i+1}).
std::size_t matrix_index(const Matrix& m);
std::size_t index(const Operator& op);

struct AstDecomposition {
    std::size_t index = 0;
    SubspaceBasis W;        ///< φ-invariant part where φ is invertible.
    SubspaceBasis U_block;  ///< nilpotent part inside span(e_1..e_m).
    bool tail_in_U = false;
};

AstDecomposition ast_decomposition(const Operator& op);

/// φ = core_part + nilpotent_part with the core part of index <= 1.
struct CnDecomposition {
    Operator core_part;
    Operator nilpotent_part;
};

CnDecomposition cn_decomposition(const Operator& op);

/// Projector onto W_φ along U_φ, in padded coordinates.
Matrix ast_projector(const Matrix& padded);

}  // namespace fpcore
