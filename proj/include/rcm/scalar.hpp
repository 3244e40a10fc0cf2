#pragma once

#include <complex>
#include <string>
#include <variant>

#include <gmpxx.h>

#include "rcm/error.hpp"

namespace rcm {

// Complex number with exact rational real/imaginary parts (arbitrary-precision
// integers underneath). Arithmetic is loss-free; division requires a nonzero
// divisor.
struct ExactComplex {
    mpq_class re;
    mpq_class im;

    bool is_zero() const { return re == 0 && im == 0; }

    // |z|^2, exact; used for pivot selection.
    mpq_class norm() const { return re * re + im * im; }

    ExactComplex operator+(const ExactComplex& o) const { return {re + o.re, im + o.im}; }
    ExactComplex operator-(const ExactComplex& o) const { return {re - o.re, im - o.im}; }
    ExactComplex operator-() const { return {-re, -im}; }
    ExactComplex operator*(const ExactComplex& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    ExactComplex operator/(const ExactComplex& o) const {
        mpq_class n = o.norm();
        if (n == 0) throw Error(ErrorCode::zero_scalar, "exact division by zero");
        return {(re * o.re + im * o.im) / n, (im * o.re - re * o.im) / n};
    }
    bool operator==(const ExactComplex& o) const { return re == o.re && im == o.im; }
};

// Amplitude scalar: either an exact rational complex or a binary64 complex.
// A state is homogeneous in kind; arithmetic between kinds is rejected so
// precision loss can never happen silently.
class Scalar {
  public:
    enum class Kind { exact, numeric };

    Scalar() : value_(ExactComplex{0, 0}) {}

    static Scalar exact(mpq_class re, mpq_class im = 0) {
        Scalar s;
        s.value_ = ExactComplex{std::move(re), std::move(im)};
        return s;
    }
    static Scalar exact(ExactComplex v) {
        Scalar s;
        s.value_ = std::move(v);
        return s;
    }
    static Scalar numeric(std::complex<double> v) {
        Scalar s;
        s.value_ = v;
        return s;
    }
    static Scalar integer(long v) { return exact(mpq_class(v)); }

    // "p/q" with auto-canonicalization; q must be nonzero.
    static Scalar rational(long p, long q);

    Kind kind() const {
        return std::holds_alternative<ExactComplex>(value_) ? Kind::exact : Kind::numeric;
    }
    bool is_exact() const { return kind() == Kind::exact; }
    bool is_zero() const;

    const ExactComplex& exact_value() const;
    std::complex<double> to_complex() const;
    Scalar to_numeric() const { return numeric(to_complex()); }

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;

    // Exact kind compares exactly; numeric compares bit-for-bit.
    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    double abs() const { return std::abs(to_complex()); }

    std::string to_string() const;

  private:
    std::variant<ExactComplex, std::complex<double>> value_;
};

// Parses one amplitude token: integer, `p/q`, decimal, or `±a/sqrt(b)`.
// Integer and `p/q` yield exact scalars; decimals and sqrt forms numeric.
Scalar parse_real_token(const std::string& token);

// Renders the real part of an exact scalar as an integer or `p/q` token.
std::string exact_real_token(const mpq_class& v);

} // namespace rcm
