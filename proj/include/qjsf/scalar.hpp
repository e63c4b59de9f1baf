#pragma once

// Coefficient field shared by the whole library: exact rationals, exact
// Gaussian rationals a+bi, and MPFR-backed floats of explicit precision.

#include <gmpxx.h>

#include <boost/multiprecision/mpfr.hpp>

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qjsf/errors.hpp"

namespace qjsf {

using Rational = mpq_class;
using Float = boost::multiprecision::mpfr_float;

inline constexpr unsigned kDefaultPrecisionBits = 256;

struct Gaussian {
  Rational re;
  Rational im;
};

enum class Kind { rational, gaussian, bigfloat };

class Scalar {
 public:
  Scalar() : value_(Rational(0)) {}
  Scalar(long v) : value_(Rational(v)) {}  // NOLINT(google-explicit-constructor)
  Scalar(int v) : value_(Rational(v)) {}   // NOLINT(google-explicit-constructor)
  Scalar(Rational v);                      // NOLINT(google-explicit-constructor)
  Scalar(Gaussian v);                      // NOLINT(google-explicit-constructor)
  Scalar(long num, long den);

  static Scalar gaussian(Rational re, Rational im);
  /// Wraps an MPFR value; its precision travels with it.
  static Scalar big_float(Float v);
  static Scalar big_float(double v, unsigned bits);

  /// Accepts "p", "p/q", "a/b+c/di", "c/di" and, for floats, decimal literals
  /// when `float_bits` is nonzero.
  static Scalar parse(std::string_view text, unsigned float_bits = 0);

  Kind kind() const noexcept { return static_cast<Kind>(value_.index()); }
  bool is_exact() const noexcept { return kind() != Kind::bigfloat; }
  bool is_zero() const;
  bool is_real() const;

  const Rational& rational() const;  // throws IncompatibleKinds unless Rational
  Gaussian as_gaussian() const;      // Rational promotes
  const Float& big_float_value() const;
  unsigned precision_bits() const;   // 0 for exact kinds

  Rational re() const;  // exact kinds only
  Rational im() const;

  Scalar conj() const;
  Scalar abs() const;  // real kinds only
  int sign() const;    // real kinds only
  Scalar pow(long n) const;

  /// Explicit conversion to the float kind; Gaussians must have zero imaginary part.
  Scalar to_float(unsigned bits = kDefaultPrecisionBits) const;
  /// Gaussian with exactly zero imaginary part becomes Rational; other kinds unchanged.
  Scalar to_real() const;
  double to_double() const;
  std::string to_string() const;

  Scalar& operator+=(const Scalar& b);
  Scalar& operator-=(const Scalar& b);
  Scalar& operator*=(const Scalar& b);
  Scalar& operator/=(const Scalar& b);
  Scalar operator-() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b);
  /// Ordering is defined for real values of the same exactness only.
  friend std::partial_ordering operator<=>(const Scalar& a, const Scalar& b);

  /// 0 / 1 in the same field kind (and precision) as `like`.
  static Scalar zero_like(const Scalar& like);
  static Scalar one_like(const Scalar& like);

 private:
  using Value = std::variant<Rational, Gaussian, Float>;
  explicit Scalar(Value v) : value_(std::move(v)) {}
  Value value_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Converts an exact value to the float kind when `like` is a float; otherwise returns it unchanged.
Scalar coerce_like(const Scalar& value, const Scalar& like);

/// Dense square matrix of scalars, row-major.
class Matrix {
 public:
  explicit Matrix(std::size_t n) : n_(n), a_(n * n) {}
  Matrix(std::size_t n, const Scalar& fill) : n_(n), a_(n * n, fill) {}

  std::size_t size() const noexcept { return n_; }
  Scalar& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

 private:
  std::size_t n_;
  std::vector<Scalar> a_;
};

/// Exact field elimination for exact kinds, partial pivoting for floats.
/// The 0x0 determinant is 1.
Scalar det(Matrix m);

/// Vandermonde product prod_{i<j} (x_i - x_j); throws CoincidentPoints on repeats.
Scalar vandermonde(const std::vector<Scalar>& xs);

}  // namespace qjsf
