#pragma once

// Reference implementations used to cross-check the library.
//
// Deliberately shares no code with fpcore beyond reading matrix entries:
// plain nested vectors of Gaussian rationals, textbook Gauss-Jordan, and the
// closed-form expressions for the generalized inverses (full-rank factorization
// for Moore-Penrose, A^l (A^(2l+1))^† A^l for Drazin) instead of the subspace
// constructions the library uses.

#include "fpcore/matrix.hpp"

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace oracle {

struct Q {
    mpq_class re{0};
    mpq_class im{0};
};

using Mat = std::vector<std::vector<Q>>;

Mat zeros(std::size_t r, std::size_t c);
Mat identity(std::size_t n);
Mat from(const fpcore::Matrix& m);
Mat mul(const Mat& a, const Mat& b);
Mat sub(const Mat& a, const Mat& b);
Mat adjoint(const Mat& a);
Mat power(const Mat& a, std::size_t k);
bool is_zero(const Mat& a);
bool equal(const Mat& a, const Mat& b);
/// Entry-wise comparison against a library matrix (values only, any field tag).
bool equal(const Mat& a, const fpcore::Matrix& b);

std::size_t rank(const Mat& a);
/// Throws std::domain_error when singular.
Mat inverse(const Mat& a);

Mat moore_penrose(const Mat& a);
/// Smallest k with rank(A^k) = rank(A^(k+1)).
std::size_t index(const Mat& a);
Mat drazin(const Mat& a);
/// A^D A A^†; only meaningful when index(a) <= 1.
Mat core(const Mat& a);

/// Small deterministic generator for test inputs, independent of fpcore::Rng.
class Gen {
public:
    explicit Gen(std::uint64_t seed) : engine_(seed) {}
    long small(long bound);
    /// n x n integer matrix of rank at most r: an (n x r)(r x n) product.
    fpcore::Matrix low_rank(std::size_t n, std::size_t r, fpcore::Field field, long bound = 2);
    fpcore::Matrix dense(std::size_t rows, std::size_t cols, fpcore::Field field, long bound = 3);

private:
    std::mt19937_64 engine_;
};

}  // namespace oracle
