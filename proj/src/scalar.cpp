#include "qjsf/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <ostream>
#include <sstream>
#include <utility>

namespace qjsf {

namespace {

unsigned digits_for_bits(unsigned bits) {
  return static_cast<unsigned>(std::ceil(bits * 0.30102999566398120)) + 1;
}

Float make_float(long v, unsigned digits) { return Float(v, digits); }

Gaussian promote(const Rational& r) { return Gaussian{r, Rational(0)}; }

[[noreturn]] void mixed_float_error() {
  throw IncompatibleKinds("cannot mix exact and floating scalars without explicit conversion");
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Rational parse_rational(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw ParseError("empty rational literal");
  std::string s(text);
  if (s.front() == '+') s.erase(0, 1);
  const auto slash = s.find('/');
  auto valid_int = [](std::string_view t) {
    if (!t.empty() && t.front() == '-') t.remove_prefix(1);
    return !t.empty() && std::all_of(t.begin(), t.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
  };
  if (slash == std::string::npos) {
    if (!valid_int(s)) throw ParseError("malformed rational literal '" + std::string(text) + "'");
    return Rational(mpz_class(s));
  }
  std::string num = s.substr(0, slash);
  std::string den = s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den.front() == '-') {
    throw ParseError("malformed rational literal '" + std::string(text) + "'");
  }
  mpz_class d(den);
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  Rational r(mpz_class(num), d);
  r.canonicalize();
  return r;
}

std::string rational_str(const Rational& r) { return r.get_str(); }

}  // namespace

Scalar::Scalar(Rational v) : value_(std::move(v)) { std::get<Rational>(value_).canonicalize(); }

Scalar::Scalar(Gaussian v) : value_(std::move(v)) {
  auto& g = std::get<Gaussian>(value_);
  g.re.canonicalize();
  g.im.canonicalize();
}

Scalar::Scalar(long num, long den) {
  if (den == 0) throw DivisionByZero();
  Rational r(num, den);
  r.canonicalize();
  value_ = std::move(r);
}

Scalar Scalar::gaussian(Rational re, Rational im) { return Scalar(Gaussian{std::move(re), std::move(im)}); }

Scalar Scalar::big_float(Float v) { return Scalar(Value(std::move(v))); }

Scalar Scalar::big_float(double v, unsigned bits) { return Scalar(Value(Float(v, digits_for_bits(bits)))); }

Scalar Scalar::parse(std::string_view text, unsigned float_bits) {
  text = trim(text);
  if (text.empty()) throw ParseError("empty scalar literal");
  if (text.back() == 'i') {
    std::string_view body = text.substr(0, text.size() - 1);
    // split at the last sign that is not the leading one
    std::size_t split = std::string_view::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
      if (body[k] == '+' || body[k] == '-') {
        split = k;
        break;
      }
    }
    Rational re(0);
    std::string_view im_text = body;
    if (split != std::string_view::npos) {
      re = parse_rational(body.substr(0, split));
      im_text = body.substr(split);
    }
    Rational im;
    if (im_text.empty() || im_text == "+") {
      im = 1;
    } else if (im_text == "-") {
      im = -1;
    } else {
      im = parse_rational(im_text);
    }
    return gaussian(re, im);
  }
  const bool looks_float = text.find_first_of(".eE") != std::string_view::npos;
  if (looks_float) {
    if (float_bits == 0) throw ParseError("decimal literal '" + std::string(text) + "' requires float mode");
    try {
      return big_float(Float(std::string(text), digits_for_bits(float_bits)));
    } catch (const std::exception&) {
      throw ParseError("malformed float literal '" + std::string(text) + "'");
    }
  }
  return Scalar(parse_rational(text));
}

bool Scalar::is_zero() const {
  switch (kind()) {
    case Kind::rational: return sgn(std::get<Rational>(value_)) == 0;
    case Kind::gaussian: {
      const auto& g = std::get<Gaussian>(value_);
      return sgn(g.re) == 0 && sgn(g.im) == 0;
    }
    case Kind::bigfloat: return std::get<Float>(value_).is_zero();
  }
  return false;
}

bool Scalar::is_real() const {
  return kind() != Kind::gaussian || sgn(std::get<Gaussian>(value_).im) == 0;
}

const Rational& Scalar::rational() const {
  if (kind() != Kind::rational) throw IncompatibleKinds("expected a rational scalar, got " + to_string());
  return std::get<Rational>(value_);
}

Gaussian Scalar::as_gaussian() const {
  switch (kind()) {
    case Kind::rational: return promote(std::get<Rational>(value_));
    case Kind::gaussian: return std::get<Gaussian>(value_);
    case Kind::bigfloat: break;
  }
  throw IncompatibleKinds("float scalar has no exact Gaussian form");
}

const Float& Scalar::big_float_value() const {
  if (kind() != Kind::bigfloat) throw IncompatibleKinds("expected a float scalar");
  return std::get<Float>(value_);
}

unsigned Scalar::precision_bits() const {
  if (kind() != Kind::bigfloat) return 0;
  return static_cast<unsigned>(mpfr_get_prec(std::get<Float>(value_).backend().data()));
}

Rational Scalar::re() const { return as_gaussian().re; }
Rational Scalar::im() const { return as_gaussian().im; }

Scalar Scalar::conj() const {
  if (kind() != Kind::gaussian) return *this;
  const auto& g = std::get<Gaussian>(value_);
  return gaussian(g.re, -g.im);
}

Scalar Scalar::abs() const {
  switch (kind()) {
    case Kind::rational: return Scalar(Rational(::abs(std::get<Rational>(value_))));
    case Kind::bigfloat: return big_float(boost::multiprecision::abs(std::get<Float>(value_)));
    case Kind::gaussian: break;
  }
  if (is_real()) return Scalar(Rational(::abs(std::get<Gaussian>(value_).re)));
  throw IncompatibleKinds("abs() of a non-real Gaussian rational is not rational");
}

int Scalar::sign() const {
  switch (kind()) {
    case Kind::rational: return sgn(std::get<Rational>(value_));
    case Kind::bigfloat: return std::get<Float>(value_).sign();
    case Kind::gaussian: break;
  }
  if (is_real()) return sgn(std::get<Gaussian>(value_).re);
  throw IncompatibleKinds("sign() of a non-real Gaussian rational");
}

Scalar Scalar::pow(long n) const {
  if (n < 0) {
    if (is_zero()) throw DivisionByZero();
    return one_like(*this) / pow(-n);
  }
  if (kind() == Kind::rational) {
    const auto& r = std::get<Rational>(value_);
    Rational out;
    mpz_pow_ui(out.get_num_mpz_t(), r.get_num_mpz_t(), static_cast<unsigned long>(n));
    mpz_pow_ui(out.get_den_mpz_t(), r.get_den_mpz_t(), static_cast<unsigned long>(n));
    return Scalar(out);
  }
  Scalar result = one_like(*this);
  Scalar base = *this;
  while (n > 0) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n) base *= base;
  }
  return result;
}

Scalar Scalar::to_float(unsigned bits) const {
  const unsigned digits = digits_for_bits(bits);
  Float out(0, digits);
  switch (kind()) {
    case Kind::bigfloat: {
      out = std::get<Float>(value_);
      return big_float(Float(out, digits));
    }
    case Kind::gaussian:
      if (!is_real()) throw IncompatibleKinds("cannot convert non-real Gaussian rational to a real float");
      mpfr_set_q(out.backend().data(), std::get<Gaussian>(value_).re.get_mpq_t(), MPFR_RNDN);
      return big_float(std::move(out));
    case Kind::rational:
      mpfr_set_q(out.backend().data(), std::get<Rational>(value_).get_mpq_t(), MPFR_RNDN);
      return big_float(std::move(out));
  }
  return *this;
}

Scalar Scalar::to_real() const {
  if (kind() == Kind::gaussian && is_real()) return Scalar(std::get<Gaussian>(value_).re);
  return *this;
}

double Scalar::to_double() const {
  switch (kind()) {
    case Kind::rational: return std::get<Rational>(value_).get_d();
    case Kind::bigfloat: return std::get<Float>(value_).convert_to<double>();
    case Kind::gaussian: break;
  }
  if (!is_real()) throw IncompatibleKinds("to_double() of a non-real Gaussian rational");
  return std::get<Gaussian>(value_).re.get_d();
}

std::string Scalar::to_string() const {
  switch (kind()) {
    case Kind::rational: return rational_str(std::get<Rational>(value_));
    case Kind::gaussian: {
      const auto& g = std::get<Gaussian>(value_);
      std::string out = rational_str(g.re);
      out += sgn(g.im) < 0 ? "-" : "+";
      out += rational_str(Rational(::abs(g.im)));
      out += "i";
      return out;
    }
    case Kind::bigfloat: {
      const auto& f = std::get<Float>(value_);
      return f.str(static_cast<std::streamsize>(f.precision()), std::ios_base::scientific);
    }
  }
  return {};
}

Scalar& Scalar::operator+=(const Scalar& b) {
  if (kind() == Kind::rational && b.kind() == Kind::rational) {
    std::get<Rational>(value_) += std::get<Rational>(b.value_);
  } else if (kind() == Kind::bigfloat && b.kind() == Kind::bigfloat) {
    std::get<Float>(value_) += std::get<Float>(b.value_);
  } else if (kind() == Kind::bigfloat || b.kind() == Kind::bigfloat) {
    mixed_float_error();
  } else {
    Gaussian a = as_gaussian();
    Gaussian c = b.as_gaussian();
    a.re += c.re;
    a.im += c.im;
    value_ = std::move(a);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& b) { return *this += -b; }

Scalar& Scalar::operator*=(const Scalar& b) {
  if (kind() == Kind::rational && b.kind() == Kind::rational) {
    std::get<Rational>(value_) *= std::get<Rational>(b.value_);
  } else if (kind() == Kind::bigfloat && b.kind() == Kind::bigfloat) {
    std::get<Float>(value_) *= std::get<Float>(b.value_);
  } else if (kind() == Kind::bigfloat || b.kind() == Kind::bigfloat) {
    mixed_float_error();
  } else {
    const Gaussian a = as_gaussian();
    const Gaussian c = b.as_gaussian();
    value_ = Gaussian{Rational(a.re * c.re - a.im * c.im), Rational(a.re * c.im + a.im * c.re)};
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& b) {
  if (b.is_zero()) throw DivisionByZero();
  if (kind() == Kind::rational && b.kind() == Kind::rational) {
    std::get<Rational>(value_) /= std::get<Rational>(b.value_);
  } else if (kind() == Kind::bigfloat && b.kind() == Kind::bigfloat) {
    std::get<Float>(value_) /= std::get<Float>(b.value_);
  } else if (kind() == Kind::bigfloat || b.kind() == Kind::bigfloat) {
    mixed_float_error();
  } else {
    const Gaussian a = as_gaussian();
    const Gaussian c = b.as_gaussian();
    const Rational norm = c.re * c.re + c.im * c.im;
    value_ = Gaussian{Rational((a.re * c.re + a.im * c.im) / norm), Rational((a.im * c.re - a.re * c.im) / norm)};
  }
  return *this;
}

Scalar Scalar::operator-() const {
  switch (kind()) {
    case Kind::rational: return Scalar(Rational(-std::get<Rational>(value_)));
    case Kind::gaussian: {
      const auto& g = std::get<Gaussian>(value_);
      return gaussian(-g.re, -g.im);
    }
    case Kind::bigfloat: return big_float(Float(-std::get<Float>(value_)));
  }
  return *this;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.kind() == Kind::bigfloat && b.kind() == Kind::bigfloat) {
    return std::get<Float>(a.value_) == std::get<Float>(b.value_);
  }
  if (a.kind() == Kind::bigfloat || b.kind() == Kind::bigfloat) mixed_float_error();
  if (a.kind() == Kind::rational && b.kind() == Kind::rational) {
    return std::get<Rational>(a.value_) == std::get<Rational>(b.value_);
  }
  const Gaussian x = a.as_gaussian();
  const Gaussian y = b.as_gaussian();
  return x.re == y.re && x.im == y.im;
}

std::partial_ordering operator<=>(const Scalar& a, const Scalar& b) {
  if (a.kind() == Kind::bigfloat && b.kind() == Kind::bigfloat) {
    const auto& x = std::get<Float>(a.value_);
    const auto& y = std::get<Float>(b.value_);
    if (x < y) return std::partial_ordering::less;
    if (y < x) return std::partial_ordering::greater;
    return std::partial_ordering::equivalent;
  }
  if (a.kind() == Kind::bigfloat || b.kind() == Kind::bigfloat) mixed_float_error();
  if (!a.is_real() || !b.is_real()) return std::partial_ordering::unordered;
  const int c = cmp(a.re(), b.re());
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

Scalar Scalar::zero_like(const Scalar& like) {
  switch (like.kind()) {
    case Kind::rational: return Scalar(0);
    case Kind::gaussian: return gaussian(0, 0);
    case Kind::bigfloat: return big_float(make_float(0, std::get<Float>(like.value_).precision()));
  }
  return Scalar(0);
}

Scalar Scalar::one_like(const Scalar& like) {
  switch (like.kind()) {
    case Kind::rational: return Scalar(1);
    case Kind::gaussian: return gaussian(1, 0);
    case Kind::bigfloat: return big_float(make_float(1, std::get<Float>(like.value_).precision()));
  }
  return Scalar(1);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

Scalar coerce_like(const Scalar& value, const Scalar& like) {
  if (like.kind() == Kind::bigfloat && value.is_exact()) return value.to_float(like.precision_bits());
  return value;
}

Scalar det(Matrix m) {
  const std::size_t n = m.size();
  if (n == 0) return Scalar(1);
  bool floating = false;
  for (std::size_t i = 0; i < n && !floating; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (m(i, j).kind() == Kind::bigfloat) {
        floating = true;
        break;
      }
    }
  }
  Scalar result = Scalar::one_like(m(0, 0));
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = n;
    if (floating) {
      Scalar best;
      for (std::size_t r = col; r < n; ++r) {
        if (m(r, col).is_zero()) continue;
        Scalar mag = m(r, col).abs();
        if (pivot == n || mag > best) {
          pivot = r;
          best = std::move(mag);
        }
      }
    } else {
      for (std::size_t r = col; r < n; ++r) {
        if (!m(r, col).is_zero()) {
          pivot = r;
          break;
        }
      }
    }
    if (pivot == n) return Scalar::zero_like(m(0, 0));
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(pivot, j), m(col, j));
      result = -result;
    }
    const Scalar p = m(col, col);
    result *= p;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m(r, col).is_zero()) continue;
      const Scalar f = m(r, col) / p;
      for (std::size_t j = col + 1; j < n; ++j) m(r, j) -= f * m(col, j);
    }
  }
  return result;
}

Scalar vandermonde(const std::vector<Scalar>& xs) {
  if (xs.empty()) return Scalar(1);
  Scalar v = Scalar::one_like(xs.front());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = i + 1; j < xs.size(); ++j) {
      Scalar d = xs[i] - xs[j];
      if (d.is_zero()) throw CoincidentPoints();
      v *= d;
    }
  }
  return v;
}

}  // namespace qjsf
