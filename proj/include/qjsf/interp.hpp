#pragma once

// Interpolation symmetric functions I_mu and their N-variable versions.

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "qjsf/partition.hpp"
#include "qjsf/qseries.hpp"
#include "qjsf/scalar.hpp"

namespace qjsf {

/// Element of Sym (or Sym(N)) written in the Schur basis. Zero coefficients
/// are never stored.
class SchurExpansion {
 public:
  SchurExpansion() = default;

  /// Adds `value` to the coefficient of S_nu.
  void add(const Partition& nu, const Scalar& value);
  Scalar coeff(const Partition& nu) const;
  const std::map<Partition, Scalar>& coeffs() const noexcept { return coeffs_; }
  bool empty() const noexcept { return coeffs_.empty(); }

  /// Maximal stored index in graded order (the top term).
  std::optional<Partition> top() const;
  int degree() const;

  /// Evaluates sum c_nu S_{nu|N}(X) with N = X.size().
  Scalar evaluate(const std::vector<Scalar>& xs) const;

 private:
  std::map<Partition, Scalar> coeffs_;
};

/// sigma(mu, nu; q): Schur coefficients of I_mu. Zero unless nu is contained in mu.
Scalar sigma(const Partition& mu, const Partition& nu, const QContext& ctx);

/// I_mu = sum_{nu in mu} sigma(mu,nu) S_nu.
SchurExpansion interp_expansion(const Partition& mu, const QContext& ctx);

/// H(mu;q) = I_mu(X(mu);q).
Scalar h_norm(const Partition& mu, const QContext& ctx);

/// I_{mu|N}(X) as a ratio of an N x N determinant and the Vandermonde.
Scalar interp_poly_det(const Partition& mu, const std::vector<Scalar>& xs, const QContext& ctx);

/// Schur expansion of I_{mu|N}; coefficients carry the (q^N;q)_mu/(q^N;q)_nu prefactor.
SchurExpansion interp_poly_expansion(const Partition& mu, int n_vars, const QContext& ctx);

/// Sum over reverse tableaux with entries <= N of prod (x_{T(i,j)} - q^{T(i,j)+i-j-1}).
Scalar interp_combinatorial(const Partition& mu, const std::vector<Scalar>& xs, const QContext& ctx);

/// Bialternant S_{nu|N}(X); 0 when l(nu) > N.
Scalar schur_eval(const Partition& nu, const std::vector<Scalar>& xs);

/// Jacobi-Trudi evaluation det[h_{nu_i - i + j}(X)]; needs no distinct coordinates.
Scalar schur_eval_jacobi_trudi(const Partition& nu, const std::vector<Scalar>& xs);

/// Checks I_{mu|N}(X, q^{N-1}) == I_{mu|N-1}(X) for X of length N-1.
bool projection_consistency_check(const Partition& mu, const std::vector<Scalar>& xs, const QContext& ctx);

/// Monomial coefficients (ascending) of (x - q^{N-1})(x - q^{N-2})...(x - q^{N-m}).
std::vector<Scalar> newton_expand(int n_vars, int m, const QContext& ctx);

struct TruncatedSeries {
  Scalar value;       // I_{mu|N}(X_N)
  double tail_bound;  // bound on |I_mu(X) - I_{mu|N}(X_N)|
};

/// Finite-N truncation of the infinite tableau series for I_mu(X) with the
/// majorant bound S_mu(X~) - S_{mu|N}(X~_N), x~_n = |x_n| + q^{n - mu_1}.
/// The infinite majorant is summed through `horizon` coordinates of X.
using CoordinateRule = std::function<Scalar(std::size_t)>;  // 1-based coordinates of X
TruncatedSeries interp_series_truncated(const Partition& mu, const CoordinateRule& xs, int n_vars, int horizon,
                                        const QContext& ctx);

}  // namespace qjsf
