#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

namespace fpcore {

/// Ground field: the reals modelled by Q, or the complexes modelled by Q(i).
enum class Field { Real, Complex };

std::string_view to_string(Field field);

/// Exact element of Q or Q(i).
///
/// Both components are kept in canonical form by GMP (positive, coprime
/// denominators). A Real scalar always has a zero imaginary part. Mixing
/// fields in arithmetic throws FieldMismatch.
class Scalar {
public:
    Scalar() = default;
    Scalar(long value, Field field = Field::Real);  // NOLINT(google-explicit-constructor)
    Scalar(mpq_class re, Field field = Field::Real);  // NOLINT(google-explicit-constructor)
    Scalar(mpq_class re, mpq_class im);

    static Scalar zero(Field field) { return Scalar(0L, field); }
    static Scalar one(Field field) { return Scalar(1L, field); }

    /// Parses "p/q" or "n" into a rational.
    static mpq_class parse_rational(std::string_view text);

    Field field() const { return field_; }
    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }

    Scalar conj() const;
    /// |x|^2 = x * conj(x), always a nonnegative rational.
    mpq_class norm2() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& rhs);
    Scalar& operator-=(const Scalar& rhs);
    Scalar& operator*=(const Scalar& rhs);
    Scalar& operator/=(const Scalar& rhs);
    /// *this += a * b without building a temporary Scalar.
    void add_product(const Scalar& a, const Scalar& b);
    /// *this -= a * b without building a temporary Scalar.
    void sub_product(const Scalar& a, const Scalar& b);

    friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
    friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
    friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
    friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }

    /// Exact equality; the field tag must match as well as the value.
    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.field_ == b.field_ && a.re_ == b.re_ && a.im_ == b.im_;
    }

    /// "p/q", "n", or for complex values "a+bi" style text.
    std::string to_string() const;

    double real_approx() const { return re_.get_d(); }

private:
    void check_field(const Scalar& other) const;

    mpq_class re_{0};
    mpq_class im_{0};
    Field field_ = Field::Real;
};

std::string rational_to_string(const mpq_class& q);

std::ostream& operator<<(std::ostream& os, const Scalar& x);

}  // namespace fpcore
