#include "qjsf/qseries.hpp"

#include <string>

namespace qjsf {

QContext::QContext(Rational q) : q_(std::move(q)) {
  q_.canonicalize();
  if (sgn(q_) <= 0 || q_ >= 1) throw InadmissibleParameters("q must satisfy 0 < q < 1, got " + q_.get_str());
}

QContext::QContext(const Scalar& q) : QContext(q.rational()) {}

Scalar QContext::qpow(long k) const { return Scalar(q_).pow(k); }

Scalar poch(const Scalar& z, long n, const QContext& ctx) {
  const Scalar one = Scalar::one_like(z);
  Scalar out = one;
  if (n >= 0) {
    for (long i = 1; i <= n; ++i) out *= one - z * ctx.qpow(i - 1);
    return out;
  }
  for (long i = 1; i <= -n; ++i) {
    Scalar f = one - z * ctx.qpow(n + i - 1);
    if (f.is_zero()) throw PoleEncountered("(z;q)_" + std::to_string(n) + " has a vanishing denominator factor");
    out *= f;
  }
  return one / out;
}

Scalar reciprocal_qfactorial(long r, const QContext& ctx) {
  if (r < 0) return Scalar(0);
  return Scalar(1) / poch(ctx.q_scalar(), r, ctx);
}

Scalar poch_diagram(const Scalar& z, const Partition& lambda, const QContext& ctx) {
  const Scalar one = Scalar::one_like(z);
  Scalar out = one;
  for (int i = 1; i <= static_cast<int>(lambda.length()); ++i) {
    for (int j = 1; j <= lambda[static_cast<std::size_t>(i)]; ++j) out *= one - z * ctx.qpow(j - i);
  }
  return out;
}

Scalar phi32_terminating(long l, const Scalar& top2, const Scalar& top3, const Scalar& bot1, const Scalar& bot2,
                         const QContext& ctx) {
  const Scalar top1 = ctx.qpow(-l);
  Scalar term = Scalar::one_like(top2 * top3 * bot1 * bot2);
  Scalar sum = term;
  for (long k = 1; k <= l; ++k) {
    // ratio of consecutive terms
    const Scalar qk = ctx.qpow(k - 1);
    Scalar num = (Scalar(1) - top1 * qk) * (Scalar(1) - top2 * qk) * (Scalar(1) - top3 * qk) * ctx.q_scalar();
    Scalar den = (Scalar(1) - bot1 * qk) * (Scalar(1) - bot2 * qk) * (Scalar(1) - ctx.qpow(k));
    if (den.is_zero()) throw PoleEncountered("3phi2 lower parameter produces a vanishing denominator");
    term *= num / den;
    sum += term;
  }
  return sum;
}

}  // namespace qjsf
