#pragma once

#include "fpcore/finite_potent.hpp"

#include <cstdint>
#include <random>

namespace fpcore {

/// Seeded source for every random construction; identical seeds give
/// identical operators on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform integer in [lo, hi].
    long uniform(long lo, long hi);
    bool coin() { return uniform(0, 1) == 1; }
    /// Random scalar whose integer components lie in [-bound, bound].
    Scalar scalar(Field field, long bound);
    /// Random nonzero scalar.
    Scalar nonzero_scalar(Field field, long bound);

private:
    std::mt19937_64 engine_;
};

Matrix random_matrix(std::size_t rows, std::size_t cols, Field field, Rng& rng, long bound = 3);
Matrix random_invertible(std::size_t n, Field field, Rng& rng);

/// Unitary (orthogonal over Q) matrix from the Cayley transform of a random
/// skew-Hermitian matrix.
Matrix random_unitary(std::size_t n, Field field, Rng& rng);

/// Index <= 1 operator S diag(R, 0) S^{-1} with R invertible of random rank.
Operator random_index_le1(std::size_t n, Field field, Rng& rng);
/// EP operator Y R Y* with Y of full column rank and R invertible.
Operator random_ep(std::size_t n, Field field, Rng& rng);
/// Idempotent S diag(I_r, 0) S^{-1}.
Operator random_idempotent(std::size_t n, Field field, Rng& rng);
/// EP operator with φ³ = φ: O diag(±1, 0) O* with O unitary.
Operator random_tripotent_ep(std::size_t n, Field field, Rng& rng);
/// EP partial isometry O diag(u, 0) O* with |u| = 1, so φ φ* φ = φ.
Operator random_partial_isometry_ep(std::size_t n, Field field, Rng& rng);
/// S diag(R, N) S^{-1} with N nilpotent and index >= 2.
Operator random_high_index(std::size_t n, Field field, Rng& rng);
/// Mixture of all of the index <= 1 families above.
Operator random_index_le1_mixed(std::size_t n, Field field, Rng& rng);
/// Mixture of index <= 1 and higher-index operators.
Operator random_any_index(std::size_t n, Field field, Rng& rng);

}  // namespace fpcore
