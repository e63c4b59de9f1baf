#include <doctest.h>

#include <random>

#include "qjsf/scalar.hpp"

using namespace qjsf;

namespace {

// Laplace expansion along the first row
Scalar cofactor(const std::vector<std::vector<Scalar>>& a) {
  if (a.empty()) return Scalar(1);
  if (a.size() == 1) return a[0][0];
  Scalar out(0);
  for (std::size_t j = 0; j < a.size(); ++j) {
    std::vector<std::vector<Scalar>> m;
    for (std::size_t i = 1; i < a.size(); ++i) {
      std::vector<Scalar> row;
      for (std::size_t k = 0; k < a.size(); ++k) {
        if (k != j) row.push_back(a[i][k]);
      }
      m.push_back(row);
    }
    out += (j % 2 ? Scalar(-1) : Scalar(1)) * a[0][j] * cofactor(m);
  }
  return out;
}

Matrix from_rows(const std::vector<std::vector<Scalar>>& a) {
  Matrix m(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) m(i, j) = a[i][j];
  }
  return m;
}

}  // namespace

TEST_CASE("exact rational and Gaussian arithmetic") {
  CHECK(Scalar(1, 2) + Scalar(1, 3) == Scalar(5, 6));
  const Scalar z = Scalar::gaussian(1, 2);
  CHECK(z * z.conj() == Scalar(5));
  CHECK((z * z.conj()).to_real().kind() == Kind::rational);
  CHECK(Scalar::gaussian(Rational(3, 4), 0) == Scalar(3, 4));
  CHECK((Scalar(1, 2) + z).kind() == Kind::gaussian);
  CHECK(Scalar(6, -4) == Scalar(-3, 2));
  CHECK(Scalar(6, -4).rational().get_den() == 2);
}

TEST_CASE("kind mixing and division errors") {
  CHECK_THROWS_AS(Scalar(1) / Scalar(0), DivisionByZero);
  CHECK_THROWS_AS(Scalar(1) + Scalar::big_float(1.0, 128), IncompatibleKinds);
  CHECK((Scalar(1, 3).to_float(128) + Scalar::big_float(1.0, 128)).kind() == Kind::bigfloat);
  CHECK(Scalar(1, 3).to_float(200).precision_bits() >= 200);
}

TEST_CASE("literal parsing") {
  CHECK(Scalar::parse("3/6") == Scalar(1, 2));
  CHECK(Scalar::parse("-7") == Scalar(-7));
  CHECK(Scalar::parse("1/5+1/7i") == Scalar::gaussian(Rational(1, 5), Rational(1, 7)));
  CHECK(Scalar::parse("1/5-1/7i") == Scalar::gaussian(Rational(1, 5), Rational(-1, 7)));
  CHECK(Scalar::parse("-2/3i") == Scalar::gaussian(0, Rational(-2, 3)));
  CHECK(Scalar::parse(Scalar::gaussian(Rational(-1, 2), Rational(-3, 4)).to_string()) ==
        Scalar::gaussian(Rational(-1, 2), Rational(-3, 4)));
  CHECK_THROWS_AS(Scalar::parse("0.5"), ParseError);
  CHECK(Scalar::parse("0.5", 128).kind() == Kind::bigfloat);
  CHECK_THROWS_AS(Scalar::parse("1/0"), ParseError);
  CHECK_THROWS_AS(Scalar::parse("abc"), ParseError);
}

TEST_CASE("field axioms on random triples") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> num(-30, 30), den(1, 12);
  auto r = [&] { return Rational(num(rng), den(rng)); };
  for (int i = 0; i < 100; ++i) {
    const Scalar a = Scalar::gaussian(r(), r()), b(r()), c = Scalar::gaussian(r(), r());
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * Scalar(1) == a);
  }
}

TEST_CASE("determinants") {
  CHECK(det(Matrix(0)) == Scalar(1));
  CHECK(det(from_rows({{Scalar(1)}})) == Scalar(1));
  CHECK(det(from_rows({{Scalar(1, 2), Scalar(3)}, {Scalar(-1), Scalar(2, 3)}})) == Scalar(1, 3) + Scalar(3));

  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
  for (std::size_t n = 1; n <= 5; ++n) {
    for (int trial = 0; trial < 3; ++trial) {
      std::vector<std::vector<Scalar>> a(n, std::vector<Scalar>(n));
      for (auto& row : a) {
        for (auto& v : row) v = Scalar(Rational(num(rng), den(rng)));
      }
      const Scalar d = det(from_rows(a));
      CHECK(d == cofactor(a));
      if (n > 1) {
        std::swap(a[0], a[1]);
        CHECK(det(from_rows(a)) == -d);
      }
    }
  }

  // singular, and one needing a pivot swap
  CHECK(det(from_rows({{Scalar(1), Scalar(2)}, {Scalar(2), Scalar(4)}})).is_zero());
  CHECK(det(from_rows({{Scalar(0), Scalar(1)}, {Scalar(1), Scalar(0)}})) == Scalar(-1));

  // float path agrees with the exact one
  std::vector<std::vector<Scalar>> a{{Scalar(0), Scalar(2), Scalar(1)}, {Scalar(3), Scalar(1, 7), Scalar(5)},
                                     {Scalar(1, 3), Scalar(4), Scalar(-2)}};
  const double exact = det(from_rows(a)).to_double();
  for (auto& row : a) {
    for (auto& v : row) v = v.to_float(256);
  }
  CHECK(det(from_rows(a)).to_double() == doctest::Approx(exact).epsilon(1e-14));
}

TEST_CASE("vandermonde") {
  CHECK(vandermonde({Scalar(3), Scalar(1), Scalar(2)}) == Scalar((3 - 1) * (3 - 2) * (1 - 2)));
  CHECK_THROWS_AS(vandermonde({Scalar(1), Scalar(1, 2), Scalar(1)}), CoincidentPoints);
}
