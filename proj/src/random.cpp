#include "fpcore/random.hpp"

#include "fpcore/errors.hpp"

namespace fpcore {

long Rng::uniform(long lo, long hi) {
    // Modulo reduction keeps the sequence identical across standard libraries.
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(engine_() % span);
}

Scalar Rng::scalar(Field field, long bound) {
    if (field == Field::Real) return Scalar(uniform(-bound, bound), Field::Real);
    long re = uniform(-bound, bound);
    long im = uniform(-bound, bound);
    return Scalar(mpq_class(re), mpq_class(im));
}

Scalar Rng::nonzero_scalar(Field field, long bound) {
    for (;;) {
        Scalar s = scalar(field, bound);
        if (!s.is_zero()) return s;
    }
}

Matrix random_matrix(std::size_t rows, std::size_t cols, Field field, Rng& rng, long bound) {
    Matrix m(rows, cols, field);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rng.scalar(field, bound);
    return m;
}

Matrix random_invertible(std::size_t n, Field field, Rng& rng) {
    for (;;) {
        Matrix m = random_matrix(n, n, field, rng, 2);
        if (rank(m) == n) return m;
    }
}

namespace {

Matrix random_full_column_rank(std::size_t n, std::size_t r, Field field, Rng& rng) {
    for (;;) {
        Matrix m = random_matrix(n, r, field, rng, 2);
        if (rank(m) == r) return m;
    }
}

Matrix embed(const Matrix& top_left, std::size_t n) {
    Matrix out(n, n, top_left.field());
    for (std::size_t i = 0; i < top_left.rows(); ++i)
        for (std::size_t j = 0; j < top_left.cols(); ++j) out(i, j) = top_left(i, j);
    return out;
}

Operator conjugate_by(const Matrix& s, const Matrix& d) {
    return Operator::finite(s * d * inverse(s));
}

Operator unitary_diagonal(std::size_t n, Field field, Rng& rng, bool unimodular_complex) {
    Matrix o = random_unitary(n, field, rng);
    std::vector<Scalar> diag;
    for (std::size_t i = 0; i < n; ++i) {
        long pick = rng.uniform(0, unimodular_complex && field == Field::Complex ? 5 : 2);
        switch (pick) {
            case 0: diag.push_back(Scalar::zero(field)); break;
            case 1: diag.push_back(Scalar::one(field)); break;
            case 2: diag.push_back(-Scalar::one(field)); break;
            case 3: diag.push_back(Scalar(mpq_class(0), mpq_class(1))); break;
            case 4: diag.push_back(Scalar(mpq_class(3, 5), mpq_class(4, 5))); break;
            default: diag.push_back(Scalar(mpq_class(-4, 5), mpq_class(3, 5))); break;
        }
    }
    return Operator::finite(o * Matrix::diagonal(diag, field) * o.conj_transpose());
}

}  // namespace

Matrix random_unitary(std::size_t n, Field field, Rng& rng) {
    // K skew-Hermitian has a purely imaginary spectrum, so I + K is invertible
    // and (I - K)(I + K)^{-1} is unitary.
    Matrix k(n, n, field);
    for (std::size_t i = 0; i < n; ++i) {
        if (field == Field::Complex) k(i, i) = Scalar(mpq_class(0), mpq_class(rng.uniform(-1, 1)));
        for (std::size_t j = i + 1; j < n; ++j) {
            Scalar s = rng.scalar(field, 1);
            k(i, j) = s;
            k(j, i) = -s.conj();
        }
    }
    Matrix id = Matrix::identity(n, field);
    return (id - k) * inverse(id + k);
}

Operator random_index_le1(std::size_t n, Field field, Rng& rng) {
    const auto r = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n)));
    Matrix s = random_invertible(n, field, rng);
    return conjugate_by(s, embed(random_invertible(r, field, rng), n));
}

Operator random_ep(std::size_t n, Field field, Rng& rng) {
    const auto r = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n)));
    if (r == 0) return Operator::finite(Matrix(n, n, field));
    Matrix y = random_full_column_rank(n, r, field, rng);
    return Operator::finite(y * random_invertible(r, field, rng) * y.conj_transpose());
}

Operator random_idempotent(std::size_t n, Field field, Rng& rng) {
    const auto r = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n)));
    Matrix s = random_invertible(n, field, rng);
    return conjugate_by(s, embed(Matrix::identity(r, field), n));
}

Operator random_tripotent_ep(std::size_t n, Field field, Rng& rng) {
    return unitary_diagonal(n, field, rng, false);
}

Operator random_partial_isometry_ep(std::size_t n, Field field, Rng& rng) {
    return unitary_diagonal(n, field, rng, true);
}

Operator random_high_index(std::size_t n, Field field, Rng& rng) {
    if (n < 2) throw GenerationFailed("index >= 2 needs dimension >= 2");
    for (;;) {
        const auto s = static_cast<std::size_t>(rng.uniform(2, static_cast<long>(n)));
        const std::size_t r = n - s;
        Matrix nil(s, s, field);
        for (std::size_t i = 1; i < s; ++i)
            for (std::size_t j = 0; j < i; ++j)
                if (rng.uniform(0, 2) != 0) nil(i, j) = rng.scalar(field, 2);
        if (nil.is_zero()) continue;
        Matrix d(n, n, field);
        Matrix core = random_invertible(r, field, rng);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j) d(i, j) = core(i, j);
        for (std::size_t i = 0; i < s; ++i)
            for (std::size_t j = 0; j < s; ++j) d(r + i, r + j) = nil(i, j);
        Operator op = conjugate_by(random_invertible(n, field, rng), d);
        if (index(op) >= 2) return op;
    }
}

Operator random_index_le1_mixed(std::size_t n, Field field, Rng& rng) {
    for (;;) {
        Operator op = [&] {
            switch (rng.uniform(0, 9)) {
                case 0:
                case 1:
                case 2:
                case 3: return random_index_le1(n, field, rng);
                case 4:
                case 5: return random_ep(n, field, rng);
                case 6: return random_idempotent(n, field, rng);
                case 7: return random_tripotent_ep(n, field, rng);
                default: return random_partial_isometry_ep(n, field, rng);
            }
        }();
        if (index(op) <= 1) return op;
    }
}

Operator random_any_index(std::size_t n, Field field, Rng& rng) {
    if (n >= 2 && rng.coin()) return random_high_index(n, field, rng);
    return random_index_le1_mixed(n, field, rng);
}

}  // namespace fpcore
