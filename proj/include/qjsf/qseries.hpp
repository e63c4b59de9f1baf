#pragma once

#include "qjsf/partition.hpp"
#include "qjsf/scalar.hpp"

namespace qjsf {

/// Holds the base q, validated to lie strictly inside (0, 1).
class QContext {
 public:
  explicit QContext(Rational q);
  explicit QContext(const Scalar& q);

  const Rational& q() const noexcept { return q_; }
  Scalar q_scalar() const { return Scalar(q_); }
  /// q^k for any integer k.
  Scalar qpow(long k) const;

 private:
  Rational q_;
};

/// (z;q)_n for any integer n. For n < 0 this is 1 / prod_{i=1}^{-n} (1 - z q^{n+i-1});
/// throws PoleEncountered when one of those factors vanishes.
Scalar poch(const Scalar& z, long n, const QContext& ctx);

/// 1/(q;q)_r, defined as exactly 0 for r < 0.
Scalar reciprocal_qfactorial(long r, const QContext& ctx);

/// (z;q)_lambda = prod over boxes (i,j) of (1 - z q^{j-i}).
Scalar poch_diagram(const Scalar& z, const Partition& lambda, const QContext& ctx);

/// Terminating 3phi2 with upper parameters q^{-l}, top2, top3, lower bot1, bot2 and argument q.
Scalar phi32_terminating(long l, const Scalar& top2, const Scalar& top3, const Scalar& bot1, const Scalar& bot2,
                         const QContext& ctx);

}  // namespace qjsf
