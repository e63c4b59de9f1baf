#include <doctest.h>

#include "qjsf/bigq.hpp"

using namespace qjsf;

namespace {

QParams principal() {
  return classify(Rational(1, 2), Rational(1), Rational(-1), Scalar::gaussian(Rational(1, 5), Rational(1, 7)),
                  Scalar::gaussian(Rational(1, 5), Rational(-1, 7)));
}

QParams complementary() { return classify(Rational(1, 2), Rational(1), Rational(-1), Scalar(5, 2), Scalar(3)); }

}  // namespace

TEST_CASE("parameter classification") {
  CHECK(principal().series == Series::principal);
  CHECK(complementary().series == Series::complementary);
  CHECK(classify(Rational(1, 2), Rational(1), Rational(-3), Scalar(0), Scalar(0)).series == Series::exceptional);
  CHECK(to_string(Series::principal) == "principal");

  CHECK_THROWS_AS(classify(Rational(1, 2), Rational(-1), Rational(-1), Scalar(1), Scalar(1)), InadmissibleParameters);
  CHECK_THROWS_AS(classify(Rational(1, 2), Rational(1), Rational(1), Scalar(1), Scalar(1)), InadmissibleParameters);
  CHECK_THROWS_AS(classify(Rational(3, 2), Rational(1), Rational(-1), Scalar(0), Scalar(0)), InadmissibleParameters);
  // not conjugate
  CHECK_THROWS_AS(classify(Rational(1, 2), Rational(1), Rational(-1), Scalar::gaussian(1, 1), Scalar::gaussian(1, 1)),
                  InadmissibleParameters);
  // gap (2,4) and gap (4,8) differ
  CHECK_THROWS_AS(classify(Rational(1, 2), Rational(1), Rational(-1), Scalar(3), Scalar(5)), InadmissibleParameters);
  CHECK_THROWS_AS(classify(Rational(1, 2), Rational(1), Rational(-1), Scalar(-3), Scalar(3)), InadmissibleParameters);
  CHECK_THROWS_AS(classify(Rational(1, 2), Rational(1), Rational(-1), Scalar(0), Scalar(3)), InadmissibleParameters);
  try {
    classify(Rational(1, 2), Rational(1), Rational(1), Scalar(1), Scalar(1));
  } catch (const InadmissibleParameters& e) {
    CHECK(e.clause() == "beta must be negative");
  }
}

TEST_CASE("gap index") {
  const Rational q(1, 2), a(1), b(-1);
  CHECK(gap_index(Rational(1), q, a, b) == 0);
  CHECK(gap_index(Rational(5, 2), q, a, b) == 1);
  CHECK(gap_index(Rational(5), q, a, b) == 2);
  CHECK(gap_index(Rational(-1), q, a, b) == -1);
  CHECK(gap_index(Rational(-3), q, a, b) == -2);
  CHECK_THROWS_AS(gap_index(Rational(2), q, a, b), InadmissibleParameters);
  CHECK_THROWS_AS(gap_index(Rational(0), q, a, b), InadmissibleParameters);
}

TEST_CASE("lattice") {
  const auto pts = lattice(principal(), 2);
  CHECK(pts == std::vector<Scalar>{Scalar(-1, 2), Scalar(-1, 4), Scalar(1, 4), Scalar(1, 2)});
  const QParams p = classify(Rational(1, 3), Rational(2), Rational(-5), Scalar(0), Scalar(0));
  const auto pts3 = lattice(p, 3);
  REQUIRE(pts3.size() == 6);
  CHECK(pts3.front() == Scalar(-1, 15));
  CHECK(pts3.back() == Scalar(1, 6));
}

TEST_CASE("exact relative weights match float weights") {
  for (const QParams& p : {principal(), complementary()}) {
    const Scalar c = p.c_for(2), d = p.d_for(2);
    const auto pts = lattice(p, 6);
    const double base = weight(Scalar(Rational(1, 2)), p, c, d).to_double();
    const auto rel = relative_weights(pts, p, c, d);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      CHECK(rel[i].is_exact());
      CHECK(rel[i] == relative_weight(pts[i], p, c, d));
      CHECK(rel[i].to_double() == doctest::Approx(weight(pts[i], p, c, d).to_double() / base).epsilon(1e-13));
      CHECK(rel[i].to_double() > 0);
    }
  }
}

TEST_CASE("univariate polynomials are monic and orthogonal") {
  for (const QParams& p : {principal(), complementary()}) {
    const Scalar c = p.gamma, d = p.delta;
    for (int l = 0; l <= 4; ++l) {
      const UnivariatePoly f = phi_univariate(l, p, c, d);
      CHECK(f.degree() == l);
      CHECK(f.coeffs().back() == Scalar(1));
      for (const Scalar& v : f.coeffs()) CHECK(v.kind() == Kind::rational);
    }
    // independent monic orthogonalization on a long float lattice
    const auto pts = lattice(p, 70);
    std::vector<Scalar> fpts, ws;
    for (const Scalar& x : pts) {
      fpts.push_back(x.to_float(256));
      ws.push_back(weight(x, p, c, d));
    }
    const auto monic = gram_schmidt_monic(4, fpts, ws);
    for (int l = 0; l <= 4; ++l) {
      const auto exact = phi_univariate(l, p, c, d).coeffs();
      for (std::size_t k = 0; k < exact.size(); ++k) {
        CHECK(monic[static_cast<std::size_t>(l)].coeffs()[k].to_double() ==
              doctest::Approx(exact[k].to_double()).epsilon(1e-10));
      }
    }
  }
  const QParams ex = classify(Rational(1, 2), Rational(1), Rational(-3), Scalar(0), Scalar(0));
  CHECK_THROWS_AS(phi_univariate(1, ex, ex.gamma, ex.delta), ZeroCParameter);
}

TEST_CASE("multivariate determinant") {
  const QParams p = principal();
  // N = 1 reduces to the univariate polynomial with c = gamma
  const Scalar x(3, 7);
  CHECK(phi_multivariate_det(Partition{2}, {x}, p) == phi_univariate(2, p, p.gamma, p.delta)(x));
  CHECK(phi_multivariate_det(Partition{}, {}, p) == Scalar(1));
  CHECK_THROWS_AS(phi_multivariate_det(Partition{1, 1}, {x}, p), NTooSmall);
  // symmetric in its arguments
  const std::vector<Scalar> a{Scalar(1, 3), Scalar(-2), Scalar(5, 4)}, b{Scalar(5, 4), Scalar(1, 3), Scalar(-2)};
  CHECK(phi_multivariate_det(Partition{2, 1}, a, p) == phi_multivariate_det(Partition{2, 1}, b, p));
  CHECK(phi_multivariate_det(Partition{2, 1}, a, p).kind() == Kind::rational);
}

TEST_CASE("rho") {
  for (const QParams& p : {principal(), complementary()}) {
    const Scalar q = p.ctx.q_scalar(), g = p.gamma, d = p.delta, a(p.alpha), b(p.beta);
    const Scalar expected = (Scalar(1) - g * q / a) * (Scalar(1) - g * q / b) /
                            ((Scalar(1) - g * d * q * q / (a * b)) * (Scalar(1) - q) * g);
    CHECK(rho(Partition{1}, Partition{}, p) == expected);
    CHECK(rho(Partition{2, 1}, Partition{2, 1}, p) == g.pow(-3));
    CHECK(rho(Partition{1}, Partition{2}, p) == Scalar(0));
  }
}

TEST_CASE("norms") {
  const QParams p = complementary();
  CHECK(phi_limit_norm(Partition{}, p) == Scalar(1));
  CHECK(phi_finite_norm(Partition{}, 3, p) == Scalar(1));
  const Scalar h0 = h_univariate_norm(0, 1, p);
  CHECK(h0 == Scalar(1));
  CHECK(phi_finite_norm(Partition{2}, 1, p) == h_univariate_norm(2, 1, p));
  for (int l = 0; l <= 3; ++l) CHECK(h_univariate_norm(l, 2, p) > Scalar(0));
  // the finite expansion converges to the limit one
  const auto lim = phi_limit_expansion(Partition{1}, p).schur;
  const auto fin = phi_finite_expansion(Partition{1}, 40, p);
  for (const auto& [nu, c] : lim.coeffs()) {
    CHECK(fin.coeff(nu).to_double() == doctest::Approx(c.to_double()).epsilon(1e-9));
  }
}
