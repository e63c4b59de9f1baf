#pragma once

// Finite-N measures on configurations of a truncated q-lattice, Gram
// matrices of the N-variate polynomials, and the N-dependence studies.

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "qjsf/bigq.hpp"
#include "qjsf/partition.hpp"
#include "qjsf/scalar.hpp"

namespace qjsf {

/// Exact (relative weights, rational sums) or MPFR float with the given precision.
struct Arithmetic {
  bool use_float = false;
  unsigned bits = kDefaultPrecisionBits;

  static Arithmetic exact() { return {}; }
  static Arithmetic floating(unsigned bits = kDefaultPrecisionBits) { return {true, bits}; }
};

struct TruncatedLattice {
  QParams params;
  int cut = 0;                  // K
  std::vector<Scalar> points;   // lattice(params, K), ascending
  double single_tail = 0.0;     // omitted single-point mass relative to the heaviest retained point
  double tail_bound = 0.0;      // single_tail * C(2K, N)
  int n_vars = 1;               // N the weights are built for
};

/// Smallest K whose single-point tail ratio is below `tol` for the N-variate weight.
int default_cut(const QParams& params, int n_vars, double tol = 1e-14);

/// Builds the truncated lattice; `cut` <= 0 selects default_cut(params, n_vars, tol).
TruncatedLattice truncate(const QParams& params, int n_vars, int cut = 0, double tol = 1e-14);

/// Univariate weights W(x; q, alpha, beta, gamma q^{1-N}, delta q^{1-N}) at lat.points:
/// exact relative weights, or absolute MPFR weights.
std::vector<Scalar> weight_table(const TruncatedLattice& lat, int n_vars, const Arithmetic& arith);

/// A configuration is a strictly increasing list of indices into lat.points.
using Configuration = std::vector<std::size_t>;

/// Visits all C(m, n) index subsets in lexicographic order.
void for_each_configuration(std::size_t m, std::size_t n, const std::function<void(const Configuration&)>& visit);

/// Throws EnumerationTooLarge when C(m, n) exceeds the QJSF_MAX_CONFIGS limit.
void guard_enumeration(std::size_t m, std::size_t n);
std::uint64_t max_configurations();
std::uint64_t binomial(std::size_t m, std::size_t n);

/// Unnormalized prod_i w(x_i) * prod_{i<j} (x_i - x_j)^2.
Scalar config_weight(const Configuration& conf, const TruncatedLattice& lat, const std::vector<Scalar>& weights,
                     const Arithmetic& arith);

/// Sum of config_weight over every N-point configuration (1 for N = 0).
Scalar normalize(const TruncatedLattice& lat, int n_vars, const Arithmetic& arith);

struct GramMatrix {
  std::vector<Partition> index;
  Matrix values{0};
  double tail_bound = 0.0;
};

/// G[l, m] = sum_X M_N(X) phi_{l|N}(X) phi_{m|N}(X) over all configurations.
GramMatrix gram_bruteforce(const std::vector<Partition>& lambdas, int n_vars, const TruncatedLattice& lat,
                           const Arithmetic& arith);

/// Same matrix from N x N determinants of univariate cross-moments.
GramMatrix gram_andreief(const std::vector<Partition>& lambdas, int n_vars, const TruncatedLattice& lat,
                         const Arithmetic& arith);

/// <M_N, S_{nu|N}> computed from moment determinants.
Scalar schur_moment(const Partition& nu, int n_vars, const TruncatedLattice& lat, const Arithmetic& arith);

struct NormRow {
  int n_vars;
  Scalar finite;
  Scalar limit;
  Scalar error;                 // finite - limit
  std::optional<Scalar> ratio;  // error(N) / error(N-1)
};

std::vector<NormRow> norm_convergence_study(const Partition& lambda, int n_min, int n_max, const QParams& params);

struct ConcentrationRow {
  int n_vars;
  Scalar mean;     // <M_N, S_(1)>
  Scalar target;   // sum of the N points of largest modulus
  Scalar gap;      // |mean - target|
  std::vector<Scalar> argmax;  // most probable configuration
  Scalar argmax_probability;
};

/// Requires the exceptional series (gamma = delta = 0).
std::vector<ConcentrationRow> concentration_diagnostic(const std::vector<int>& n_values, const QParams& params,
                                                       int cut, const Arithmetic& arith);

}  // namespace qjsf
