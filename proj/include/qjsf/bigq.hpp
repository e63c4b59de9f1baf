#pragma once

// Big q-Jacobi polynomials on the two-sided q-lattice, their N-variate
// versions, and the N -> infinity limits Phi_lambda.

#include <map>
#include <string>
#include <vector>

#include "qjsf/interp.hpp"
#include "qjsf/partition.hpp"
#include "qjsf/qseries.hpp"
#include "qjsf/scalar.hpp"

namespace qjsf {

enum class Series { principal, complementary, exceptional };

std::string to_string(Series s);

/// Classified parameter tuple (q, alpha, beta, gamma, delta). Construct through classify().
struct QParams {
  QContext ctx;
  Rational alpha;
  Rational beta;
  Scalar gamma;
  Scalar delta;
  Series series;

  /// s = gamma delta q / (alpha beta)
  Scalar s() const;
  /// (c, d) = (gamma q^{1-N}, delta q^{1-N}) used by the N-variate polynomials.
  Scalar c_for(int n_vars) const;
  Scalar d_for(int n_vars) const;
};

/// Validates alpha > 0, beta < 0 and the (gamma, delta) clause; throws
/// InadmissibleParameters naming the violated clause.
QParams classify(const Rational& q, const Rational& alpha, const Rational& beta, const Scalar& gamma,
                 const Scalar& delta);

/// Index of the open gap of ... < beta q^-2 < beta q^-1 < 0 < alpha q^-1 < alpha q^-2 < ...
/// containing x: k >= 0 on the positive side, -(k+1) on the negative side. Throws
/// InadmissibleParameters if x is zero or a sequence point.
long gap_index(const Rational& x, const Rational& q, const Rational& alpha, const Rational& beta);

/// Polynomial with coefficients in ascending degree.
class UnivariatePoly {
 public:
  UnivariatePoly() = default;
  explicit UnivariatePoly(std::vector<Scalar> coeffs);

  const std::vector<Scalar>& coeffs() const noexcept { return coeffs_; }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  Scalar operator()(const Scalar& x) const;

 private:
  std::vector<Scalar> coeffs_;
};

/// The 2K lattice points {beta^-1 q^k} U {alpha^-1 q^k}, k = 1..K, ascending.
std::vector<Scalar> lattice(const QParams& params, int cut);

/// Absolute weight W(x; q, alpha, beta, c, d) in float mode; the infinite
/// products are truncated once the remaining tail deviates from 1 by less than `tail_tol`.
Scalar weight(const Scalar& x, const QParams& params, const Scalar& c, const Scalar& d,
              unsigned bits = kDefaultPrecisionBits, double tail_tol = 1e-30);

/// Exact W(x)/W(alpha^-1 q). Within one half of the lattice the ratio is a finite
/// product; the constant linking the two halves is an infinite product, evaluated
/// with `weight` at `bits` precision and rationalized.
Scalar relative_weight(const Scalar& x, const QParams& params, const Scalar& c, const Scalar& d,
                       unsigned bits = 384);

/// relative_weight at every point, sharing one evaluation of the cross-half constant.
std::vector<Scalar> relative_weights(const std::vector<Scalar>& xs, const QParams& params, const Scalar& c,
                                     const Scalar& d, unsigned bits = 384);

/// phi_l(x; q, alpha, beta, c, d) from the terminating 3phi2. Throws ZeroCParameter for c = 0.
UnivariatePoly phi_univariate(int degree, const QParams& params, const Scalar& c, const Scalar& d);

/// Monic orthogonal polynomials of degree 0..max_degree for sum_x w(x) f(x) g(x).
std::vector<UnivariatePoly> gram_schmidt_monic(int max_degree, const std::vector<Scalar>& points,
                                               const std::vector<Scalar>& weights);

/// phi_{lambda|N}(X) with (c, d) = (gamma q^{1-N}, delta q^{1-N}), N = X.size().
Scalar phi_multivariate_det(const Partition& lambda, const std::vector<Scalar>& xs, const QParams& params);

/// rho(lambda, mu): coefficients of phi_{lambda|N} on I_{mu|N}(X gamma).
Scalar rho(const Partition& lambda, const Partition& mu, const QParams& params);

struct PhiExpansion {
  std::map<Partition, Scalar> interp;  // mu -> rho(lambda, mu), onto I_mu(X gamma)
  SchurExpansion schur;                // undilated Schur basis
};

/// Phi_lambda on the interpolation and Schur bases.
PhiExpansion phi_limit_expansion(const Partition& lambda, const QParams& params);

/// Schur expansion of phi_{lambda|N} (finite N, with the (q^N;q) prefactors).
SchurExpansion phi_finite_expansion(const Partition& lambda, int n_vars, const QParams& params);

/// ||Phi_lambda||^2 in closed form.
Scalar phi_limit_norm(const Partition& lambda, const QParams& params);

/// h_l(N) = ||phi_l(.; q, alpha, beta, gamma q^{1-N}, delta q^{1-N})||^2 under the normalized weight.
Scalar h_univariate_norm(int degree, int n_vars, const QParams& params);

/// ||phi_{lambda|N}||^2 = prod_i h_{lambda_i+N-i}(N) / h_{N-i}(N).
Scalar phi_finite_norm(const Partition& lambda, int n_vars, const QParams& params);

}  // namespace qjsf
