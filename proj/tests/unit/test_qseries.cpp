#include <doctest.h>

#include <random>

#include "qjsf/qseries.hpp"

using namespace qjsf;

TEST_CASE("q context") {
  CHECK_THROWS_AS(QContext(Rational(1)), InadmissibleParameters);
  CHECK_THROWS_AS(QContext(Rational(0)), InadmissibleParameters);
  CHECK_THROWS_AS(QContext(Rational(-1, 2)), InadmissibleParameters);
  const QContext ctx(Rational(2, 3));
  CHECK(ctx.qpow(-2) == Scalar(9, 4));
  CHECK(ctx.qpow(3) == Scalar(8, 27));
}

TEST_CASE("Pochhammer symbols") {
  const QContext ctx(Rational(1, 2));
  CHECK(poch(Scalar(7, 3), 0, ctx) == Scalar(1));
  CHECK(poch(Scalar(1, 2), 2, ctx) == Scalar(3, 8));
  // (z;q)_{-1} = 1/(1 - z/q)
  CHECK(poch(Scalar(1, 8), -1, ctx) == Scalar(4, 3));
  CHECK_THROWS_AS(poch(Scalar(1, 2), -1, ctx), PoleEncountered);
  CHECK(reciprocal_qfactorial(-1, ctx) == Scalar(0));
  CHECK(reciprocal_qfactorial(-3, ctx) == Scalar(0));
  CHECK(reciprocal_qfactorial(2, ctx) == Scalar(8, 3));

  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> num(-40, 40), den(1, 13), idx(-6, 6);
  int checked = 0;
  for (int i = 0; i < 200; ++i) {
    const Scalar z(Rational(num(rng), den(rng)));
    const long m = idx(rng), n = idx(rng);
    Scalar whole, split;
    try {
      whole = poch(z, m + n, ctx);
      split = poch(z, m, ctx) * poch(z * ctx.qpow(m), n, ctx);
    } catch (const PoleEncountered&) {
      continue;
    }
    CHECK(whole == split);
    ++checked;
  }
  CHECK(checked > 150);
}

TEST_CASE("diagram Pochhammer") {
  const QContext ctx(Rational(1, 2));
  CHECK(poch_diagram(Scalar(5), Partition{}, ctx) == Scalar(1));
  CHECK(poch_diagram(Scalar(2, 7), Partition{1}, ctx) == Scalar(5, 7));
  const Scalar z(1, 3);
  // boxes (1,1), (1,2), (2,1) carry q^0, q^1, q^-1
  const Scalar boxes = (Scalar(1) - z) * (Scalar(1) - z / Scalar(2)) * (Scalar(1) - z * Scalar(2));
  CHECK(poch_diagram(z, Partition{2, 1}, ctx) == boxes);
  CHECK(boxes == Scalar(5, 27));
  for (const Partition& l : enumerate_partitions(6)) {
    Scalar rows(1);
    for (std::size_t i = 1; i <= l.length(); ++i) rows *= poch(z * ctx.qpow(1 - static_cast<long>(i)), l[i], ctx);
    CHECK(rows == poch_diagram(z, l, ctx));
  }
}

TEST_CASE("terminating 3phi2") {
  const QContext ctx(Rational(1, 3));
  const Scalar q = ctx.q_scalar();
  const Scalar a(2, 5), b(-3, 4), c(7, 2), d(-5, 3);
  CHECK(phi32_terminating(0, a, b, c, d, ctx) == Scalar(1));
  const Scalar two_terms = Scalar(1) + (Scalar(1) - Scalar(1) / q) * (Scalar(1) - a) * (Scalar(1) - b) /
                                           ((Scalar(1) - c) * (Scalar(1) - d) * (Scalar(1) - q)) * q;
  CHECK(phi32_terminating(1, a, b, c, d, ctx) == two_terms);
  Scalar sum(0);
  for (long k = 0; k <= 5; ++k) {
    const Scalar t = poch(ctx.qpow(-3), k, ctx) * poch(a, k, ctx) * poch(b, k, ctx) /
                     (poch(c, k, ctx) * poch(d, k, ctx) * poch(q, k, ctx)) * ctx.qpow(k);
    if (k > 3) CHECK(t.is_zero());
    sum += t;
  }
  CHECK(phi32_terminating(3, a, b, c, d, ctx) == sum);
  CHECK_THROWS_AS(phi32_terminating(2, a, b, q.pow(-1), d, ctx), PoleEncountered);
}
