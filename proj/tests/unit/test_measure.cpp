#include <doctest.h>

#include <cstdlib>

#include "qjsf/measure.hpp"

using namespace qjsf;

namespace {

QParams principal() {
  return classify(Rational(1, 2), Rational(1), Rational(-1), Scalar::gaussian(Rational(1, 5), Rational(1, 7)),
                  Scalar::gaussian(Rational(1, 5), Rational(-1, 7)));
}

std::vector<Partition> up_to(int size, int n) {
  std::vector<Partition> out;
  for (const Partition& l : enumerate_partitions(size)) {
    if (static_cast<int>(l.length()) <= n) out.push_back(l);
  }
  return out;
}

}  // namespace

TEST_CASE("configuration enumeration") {
  std::vector<Configuration> seen;
  for_each_configuration(4, 2, [&](const Configuration& c) { seen.push_back(c); });
  CHECK(seen == std::vector<Configuration>{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  std::size_t count = 0;
  for_each_configuration(10, 4, [&](const Configuration&) { ++count; });
  CHECK(count == binomial(10, 4));
  CHECK(binomial(10, 4) == 210);
  CHECK(binomial(3, 5) == 0);
  for_each_configuration(3, 5, [&](const Configuration&) { FAIL("no subsets expected"); });

  setenv("QJSF_MAX_CONFIGS", "100", 1);
  CHECK_THROWS_AS(guard_enumeration(10, 4), EnumerationTooLarge);
  CHECK_NOTHROW(guard_enumeration(10, 2));
  unsetenv("QJSF_MAX_CONFIGS");
  CHECK(max_configurations() == 2000000);
}

TEST_CASE("truncation") {
  const QParams p = principal();
  const TruncatedLattice lat = truncate(p, 2, 5);
  CHECK(lat.cut == 5);
  CHECK(lat.points == lattice(p, 5));
  const int k = default_cut(p, 2);
  CHECK(truncate(p, 2).cut == k);
  CHECK(truncate(p, 2).single_tail < 1e-14);
  CHECK(truncate(p, 2, k - 1).single_tail >= 1e-14);
  CHECK(truncate(p, 2).tail_bound == doctest::Approx(truncate(p, 2).single_tail * double(binomial(2 * k, 2))));
}

TEST_CASE("measure normalization") {
  const QParams p = principal();
  const TruncatedLattice lat = truncate(p, 2, 4);
  const auto w = weight_table(lat, 2, Arithmetic::exact());
  Scalar total(0);
  for (std::size_t i = 0; i < lat.points.size(); ++i) {
    for (std::size_t j = i + 1; j < lat.points.size(); ++j) {
      const Scalar diff = lat.points[i] - lat.points[j];
      total += w[i] * w[j] * diff * diff;
      CHECK(config_weight({i, j}, lat, w, Arithmetic::exact()) == w[i] * w[j] * diff * diff);
    }
  }
  CHECK(normalize(lat, 2, Arithmetic::exact()) == total);
  CHECK(normalize(lat, 0, Arithmetic::exact()) == Scalar(1));
}

TEST_CASE("Gram matrices: brute force against moment determinants") {
  const QParams p = principal();
  for (int n = 1; n <= 3; ++n) {
    const TruncatedLattice lat = truncate(p, n, 5);
    const auto lambdas = up_to(2, n);
    const GramMatrix brute = gram_bruteforce(lambdas, n, lat, Arithmetic::exact());
    const GramMatrix fast = gram_andreief(lambdas, n, lat, Arithmetic::exact());
    REQUIRE(brute.index == fast.index);
    for (std::size_t a = 0; a < lambdas.size(); ++a) {
      for (std::size_t b = 0; b < lambdas.size(); ++b) {
        CHECK(brute.values(a, b) == fast.values(a, b));
        CHECK(brute.values(a, b) == brute.values(b, a));
      }
    }
    CHECK(brute.values(0, 0) == Scalar(1));
  }
}

TEST_CASE("Schur moments") {
  const QParams p = principal();
  const TruncatedLattice lat = truncate(p, 2, 4);
  CHECK(schur_moment(Partition{}, 2, lat, Arithmetic::exact()) == Scalar(1));
  CHECK(schur_moment(Partition{1, 1, 1}, 2, lat, Arithmetic::exact()) == Scalar(0));
  // <M_2, x1 + x2> directly
  const auto w = weight_table(lat, 2, Arithmetic::exact());
  Scalar num(0), den(0);
  for_each_configuration(lat.points.size(), 2, [&](const Configuration& c) {
    const Scalar m = config_weight(c, lat, w, Arithmetic::exact());
    num += m * (lat.points[c[0]] + lat.points[c[1]]);
    den += m;
  });
  CHECK(schur_moment(Partition{1}, 2, lat, Arithmetic::exact()) == num / den);
  CHECK(schur_moment(Partition{1}, 2, lat, Arithmetic::floating()).to_double() ==
        doctest::Approx((num / den).to_double()).epsilon(1e-14));
}

TEST_CASE("norm convergence study") {
  const auto rows = norm_convergence_study(Partition{1}, 3, 6, principal());
  REQUIRE(rows.size() == 4);
  CHECK_FALSE(rows[0].ratio.has_value());
  for (const auto& r : rows) CHECK(r.error == r.finite - r.limit);
  CHECK(rows[3].ratio.has_value());
}

TEST_CASE("concentration diagnostic") {
  const QParams ex = classify(Rational(1, 2), Rational(1), Rational(-3), Scalar(0), Scalar(0));
  const auto rows = concentration_diagnostic({2, 8}, ex, 4, Arithmetic::exact());
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].gap > rows[1].gap);
  CHECK(rows[1].gap == Scalar(0));
  CHECK(rows[1].argmax_probability == Scalar(1));
  CHECK_THROWS(concentration_diagnostic({2}, principal(), 4, Arithmetic::exact()));
}
