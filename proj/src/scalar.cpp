#include "fpcore/scalar.hpp"

#include "fpcore/errors.hpp"

#include <ostream>
#include <utility>

namespace fpcore {

std::string_view to_string(Field field) {
    return field == Field::Real ? "rational" : "gaussian";
}

Scalar::Scalar(long value, Field field) : re_(value), field_(field) {}

Scalar::Scalar(mpq_class re, Field field) : re_(std::move(re)), field_(field) {
    re_.canonicalize();
}

Scalar::Scalar(mpq_class re, mpq_class im)
    : re_(std::move(re)), im_(std::move(im)), field_(Field::Complex) {
    re_.canonicalize();
    im_.canonicalize();
}

mpq_class Scalar::parse_rational(std::string_view text) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
        return s;
    };
    auto parse_int = [](std::string_view s) {
        std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (s.size() == start) throw ParseError("empty integer in rational literal");
        for (std::size_t k = start; k < s.size(); ++k) {
            if (s[k] < '0' || s[k] > '9') {
                throw ParseError("invalid character '" + std::string(1, s[k]) +
                                 "' in rational literal");
            }
        }
        if (s[0] == '+') s.remove_prefix(1);
        return mpz_class(std::string(s), 10);
    };

    text = trim(text);
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return mpq_class(parse_int(text));
    mpz_class num = parse_int(trim(text.substr(0, slash)));
    mpz_class den = parse_int(trim(text.substr(slash + 1)));
    if (den == 0) throw ParseError("zero denominator in rational literal");
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

void Scalar::check_field(const Scalar& other) const {
    if (field_ != other.field_) throw FieldMismatch();
}

Scalar Scalar::conj() const {
    Scalar out = *this;
    if (field_ == Field::Complex) out.im_ = -im_;
    return out;
}

mpq_class Scalar::norm2() const {
    if (field_ == Field::Real) return re_ * re_;
    return re_ * re_ + im_ * im_;
}

Scalar Scalar::operator-() const {
    Scalar out = *this;
    out.re_ = -re_;
    if (field_ == Field::Complex) out.im_ = -im_;
    return out;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
    check_field(rhs);
    re_ += rhs.re_;
    if (field_ == Field::Complex) im_ += rhs.im_;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
    check_field(rhs);
    re_ -= rhs.re_;
    if (field_ == Field::Complex) im_ -= rhs.im_;
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
    check_field(rhs);
    if (field_ == Field::Real) {
        re_ *= rhs.re_;
        return *this;
    }
    mpq_class re = re_ * rhs.re_ - im_ * rhs.im_;
    mpq_class im = re_ * rhs.im_ + im_ * rhs.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

void Scalar::add_product(const Scalar& a, const Scalar& b) {
    check_field(a);
    check_field(b);
    thread_local mpq_class t;
    mpq_mul(t.get_mpq_t(), a.re_.get_mpq_t(), b.re_.get_mpq_t());
    if (field_ == Field::Real) {
        re_ += t;
        return;
    }
    // Every product is formed before *this changes, so a or b may alias it.
    thread_local mpq_class u, v, w;
    mpq_mul(u.get_mpq_t(), a.im_.get_mpq_t(), b.im_.get_mpq_t());
    mpq_mul(v.get_mpq_t(), a.re_.get_mpq_t(), b.im_.get_mpq_t());
    mpq_mul(w.get_mpq_t(), a.im_.get_mpq_t(), b.re_.get_mpq_t());
    re_ += t;
    re_ -= u;
    im_ += v;
    im_ += w;
}

void Scalar::sub_product(const Scalar& a, const Scalar& b) {
    check_field(a);
    check_field(b);
    thread_local mpq_class t;
    mpq_mul(t.get_mpq_t(), a.re_.get_mpq_t(), b.re_.get_mpq_t());
    if (field_ == Field::Real) {
        re_ -= t;
        return;
    }
    thread_local mpq_class u, v, w;
    mpq_mul(u.get_mpq_t(), a.im_.get_mpq_t(), b.im_.get_mpq_t());
    mpq_mul(v.get_mpq_t(), a.re_.get_mpq_t(), b.im_.get_mpq_t());
    mpq_mul(w.get_mpq_t(), a.im_.get_mpq_t(), b.re_.get_mpq_t());
    re_ -= t;
    re_ += u;
    im_ -= v;
    im_ -= w;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
    check_field(rhs);
    if (rhs.is_zero()) throw DivisionByZero();
    if (field_ == Field::Real) {
        re_ /= rhs.re_;
        return *this;
    }
    // x / y = x * conj(y) / |y|^2
    mpq_class d = rhs.norm2();
    *this *= rhs.conj();
    re_ /= d;
    im_ /= d;
    return *this;
}

std::string rational_to_string(const mpq_class& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string Scalar::to_string() const {
    if (field_ == Field::Real || sgn(im_) == 0) return rational_to_string(re_);
    std::string im_text;
    mpq_class mag = abs(im_);
    if (mag != 1) im_text = rational_to_string(mag);
    if (sgn(re_) == 0) return (sgn(im_) < 0 ? "-" : "") + im_text + "i";
    return rational_to_string(re_) + (sgn(im_) < 0 ? "-" : "+") + im_text + "i";
}

std::ostream& operator<<(std::ostream& os, const Scalar& x) { return os << x.to_string(); }

}  // namespace fpcore
