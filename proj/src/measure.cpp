#include "qjsf/measure.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <limits>
#include <string>

namespace qjsf {

namespace {

std::complex<double> to_complex(const Scalar& z) {
  const Gaussian g = z.as_gaussian();
  return {g.re.get_d(), g.im.get_d()};
}

// single-point relative weights W(side^-1 q^k) / W(alpha^-1 q) for k = 1..count, in doubles
std::vector<double> side_profile(const QParams& params, bool positive, const Scalar& c, const Scalar& d, int count) {
  const double q = params.ctx.q().get_d();
  const double own = positive ? params.alpha.get_d() : params.beta.get_d();
  const double other = positive ? params.beta.get_d() : params.alpha.get_d();
  const std::complex<double> cc = to_complex(c);
  const std::complex<double> dd = to_complex(d);
  std::vector<double> r(static_cast<std::size_t>(count));
  double cur = 1.0;
  double qt = 1.0;
  for (int k = 1; k <= count; ++k) {
    r[static_cast<std::size_t>(k - 1)] = cur;
    qt *= q;
    const double num = ((1.0 - cc * qt / own) * (1.0 - dd * qt / own)).real();
    cur *= q * num / ((1.0 - qt) * (1.0 - other * qt / own));
  }
  return r;
}

struct TailProfile {
  std::vector<double> pos;
  std::vector<double> neg;  // already scaled by the cross-half constant
};

TailProfile tail_profile(const QParams& params, int n_vars, int count) {
  const Scalar c = params.c_for(n_vars);
  const Scalar d = params.d_for(n_vars);
  TailProfile t{side_profile(params, true, c, d, count), side_profile(params, false, c, d, count)};
  const Scalar x_pos = params.ctx.q_scalar() / Scalar(params.alpha);
  const Scalar x_neg = params.ctx.q_scalar() / Scalar(params.beta);
  const double kappa = (weight(x_neg, params, c, d, 128, 1e-25) / weight(x_pos, params, c, d, 128, 1e-25)).to_double();
  for (double& v : t.neg) v *= kappa;
  return t;
}

constexpr int kProfileLength = 4000;

double single_tail(const TailProfile& t, int cut) {
  double top = 0.0;
  double rest = 0.0;
  for (int k = 1; k <= kProfileLength; ++k) {
    const double w = t.pos[static_cast<std::size_t>(k - 1)] + t.neg[static_cast<std::size_t>(k - 1)];
    if (k <= cut) {
      top = std::max({top, t.pos[static_cast<std::size_t>(k - 1)], t.neg[static_cast<std::size_t>(k - 1)]});
    } else {
      rest += w;
    }
  }
  return rest / top;
}

Scalar lift(const Scalar& v, const Arithmetic& arith) {
  return arith.use_float && v.is_exact() ? v.to_float(arith.bits) : v;
}

std::vector<Scalar> lifted_points(const TruncatedLattice& lat, const Arithmetic& arith) {
  std::vector<Scalar> xs;
  xs.reserve(lat.points.size());
  for (const Scalar& x : lat.points) xs.push_back(lift(x, arith));
  return xs;
}

Scalar zero_of(const Arithmetic& arith) { return arith.use_float ? Scalar::big_float(0.0, arith.bits) : Scalar(0); }

// values[p][k] = phi_k(x_p) for k = 0..max_degree
std::vector<std::vector<Scalar>> phi_table(int max_degree, int n_vars, const TruncatedLattice& lat,
                                           const std::vector<Scalar>& xs) {
  const Scalar c = lat.params.c_for(n_vars);
  const Scalar d = lat.params.d_for(n_vars);
  std::vector<UnivariatePoly> polys;
  for (int k = 0; k <= max_degree; ++k) polys.push_back(phi_univariate(k, lat.params, c, d));
  std::vector<std::vector<Scalar>> out(xs.size());
  for (std::size_t p = 0; p < xs.size(); ++p) {
    for (const UnivariatePoly& poly : polys) out[p].push_back(poly(xs[p]));
  }
  return out;
}

std::vector<int> shifted_degrees(const Partition& lambda, int n_vars) {
  if (static_cast<int>(lambda.length()) > n_vars) {
    throw NTooSmall("phi_{lambda|N} needs N >= l(lambda) for lambda = " + lambda.to_string());
  }
  std::vector<int> out;
  for (int i = 1; i <= n_vars; ++i) out.push_back(lambda[static_cast<std::size_t>(i)] + n_vars - i);
  return out;
}

int max_shifted_degree(const std::vector<Partition>& lambdas, int n_vars) {
  int top = std::max(n_vars - 1, 0);
  for (const Partition& l : lambdas) top = std::max(top, l[1] + n_vars - 1);
  return top;
}

}  // namespace

int default_cut(const QParams& params, int n_vars, double tol) {
  const TailProfile t = tail_profile(params, n_vars, kProfileLength);
  for (int cut = 1; cut < kProfileLength / 2; ++cut) {
    if (single_tail(t, cut) < tol) return cut;
  }
  throw Error("no truncation reaches the requested tail tolerance");
}

TruncatedLattice truncate(const QParams& params, int n_vars, int cut, double tol) {
  TruncatedLattice lat{params};
  lat.n_vars = n_vars;
  lat.cut = cut > 0 ? cut : default_cut(params, n_vars, tol);
  lat.points = lattice(params, lat.cut);
  lat.single_tail = single_tail(tail_profile(params, n_vars, kProfileLength), lat.cut);
  lat.tail_bound = lat.single_tail * static_cast<double>(binomial(lat.points.size(), static_cast<std::size_t>(n_vars)));
  return lat;
}

std::vector<Scalar> weight_table(const TruncatedLattice& lat, int n_vars, const Arithmetic& arith) {
  const Scalar c = lat.params.c_for(n_vars);
  const Scalar d = lat.params.d_for(n_vars);
  if (!arith.use_float) return relative_weights(lat.points, lat.params, c, d);
  std::vector<Scalar> out;
  const double tol = std::ldexp(1.0, -static_cast<int>(arith.bits) + 8);
  for (const Scalar& x : lat.points) out.push_back(weight(x, lat.params, c, d, arith.bits, tol));
  return out;
}

std::uint64_t binomial(std::size_t m, std::size_t n) {
  if (n > m) return 0;
  n = std::min(n, m - n);
  long double r = 1;
  for (std::size_t i = 1; i <= n; ++i) r = r * static_cast<long double>(m - n + i) / static_cast<long double>(i);
  if (r > static_cast<long double>(std::numeric_limits<std::uint64_t>::max())) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(std::llround(r));
}

std::uint64_t max_configurations() {
  if (const char* env = std::getenv("QJSF_MAX_CONFIGS")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw Error(std::string("QJSF_MAX_CONFIGS is not a nonnegative integer: ") + env);
    }
  }
  return 2'000'000;
}

void guard_enumeration(std::size_t m, std::size_t n) {
  const std::uint64_t count = binomial(m, n);
  if (count > max_configurations()) {
    throw EnumerationTooLarge("C(" + std::to_string(m) + ", " + std::to_string(n) + ") = " + std::to_string(count) +
                              " configurations exceeds QJSF_MAX_CONFIGS = " + std::to_string(max_configurations()));
  }
}

void for_each_configuration(std::size_t m, std::size_t n, const std::function<void(const Configuration&)>& visit) {
  if (n > m) return;
  Configuration conf(n);
  for (std::size_t i = 0; i < n; ++i) conf[i] = i;
  while (true) {
    visit(conf);
    std::size_t i = n;
    while (i > 0 && conf[i - 1] == m - n + i - 1) --i;
    if (i == 0) return;
    ++conf[i - 1];
    for (std::size_t j = i; j < n; ++j) conf[j] = conf[j - 1] + 1;
  }
}

Scalar config_weight(const Configuration& conf, const TruncatedLattice& lat, const std::vector<Scalar>& weights,
                     const Arithmetic& arith) {
  Scalar w = lift(Scalar(1), arith);
  std::vector<Scalar> xs;
  for (std::size_t idx : conf) {
    w *= weights.at(idx);
    xs.push_back(lift(lat.points.at(idx), arith));
  }
  const Scalar v = vandermonde(xs);
  w *= v * v;
  if (w.sign() <= 0) throw NonPositiveWeight("configuration weight is not positive");
  return w;
}

Scalar normalize(const TruncatedLattice& lat, int n_vars, const Arithmetic& arith) {
  const std::size_t n = static_cast<std::size_t>(n_vars);
  if (n == 0) return lift(Scalar(1), arith);
  guard_enumeration(lat.points.size(), n);
  const std::vector<Scalar> weights = weight_table(lat, n_vars, arith);
  Scalar total = zero_of(arith);
  for_each_configuration(lat.points.size(), n,
                         [&](const Configuration& conf) { total += config_weight(conf, lat, weights, arith); });
  return total;
}

GramMatrix gram_bruteforce(const std::vector<Partition>& lambdas, int n_vars, const TruncatedLattice& lat,
                           const Arithmetic& arith) {
  const std::size_t n = static_cast<std::size_t>(n_vars);
  std::vector<std::vector<int>> degrees;
  for (const Partition& l : lambdas) degrees.push_back(shifted_degrees(l, n_vars));
  guard_enumeration(lat.points.size(), n);

  const std::vector<Scalar> xs = lifted_points(lat, arith);
  const std::vector<Scalar> weights = weight_table(lat, n_vars, arith);
  const auto values = phi_table(max_shifted_degree(lambdas, n_vars), n_vars, lat, xs);

  const std::size_t size = lambdas.size();
  Matrix sums(size, zero_of(arith));
  Scalar total = zero_of(arith);
  std::vector<Scalar> phis(size);
  std::vector<Scalar> pts(n);
  for_each_configuration(xs.size(), n, [&](const Configuration& conf) {
    Scalar m = lift(Scalar(1), arith);
    for (std::size_t j = 0; j < n; ++j) {
      pts[j] = xs[conf[j]];
      m *= weights[conf[j]];
    }
    const Scalar v = vandermonde(pts);
    m *= v * v;
    total += m;
    for (std::size_t a = 0; a < size; ++a) {
      Matrix mat(n);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) mat(i, j) = values[conf[j]][static_cast<std::size_t>(degrees[a][i])];
      }
      phis[a] = det(std::move(mat)) / v;
    }
    for (std::size_t a = 0; a < size; ++a) {
      const Scalar mp = m * phis[a];
      for (std::size_t b = 0; b < size; ++b) sums(a, b) += mp * phis[b];
    }
  });
  GramMatrix g{lambdas, Matrix(size), lat.single_tail * static_cast<double>(binomial(xs.size(), n))};
  for (std::size_t a = 0; a < size; ++a) {
    for (std::size_t b = 0; b < size; ++b) g.values(a, b) = sums(a, b) / total;
  }
  return g;
}

GramMatrix gram_andreief(const std::vector<Partition>& lambdas, int n_vars, const TruncatedLattice& lat,
                         const Arithmetic& arith) {
  const std::size_t n = static_cast<std::size_t>(n_vars);
  std::vector<std::vector<int>> degrees;
  for (const Partition& l : lambdas) degrees.push_back(shifted_degrees(l, n_vars));
  if (lat.points.size() < n) throw NTooSmall("lattice has fewer than N points");

  const std::vector<Scalar> xs = lifted_points(lat, arith);
  const std::vector<Scalar> weights = weight_table(lat, n_vars, arith);
  const int top = max_shifted_degree(lambdas, n_vars);
  const auto values = phi_table(top, n_vars, lat, xs);

  const std::size_t dim = static_cast<std::size_t>(top) + 1;
  Matrix moments(dim, zero_of(arith));
  for (std::size_t p = 0; p < xs.size(); ++p) {
    for (std::size_t k = 0; k < dim; ++k) {
      const Scalar wk = weights[p] * values[p][k];
      for (std::size_t l = k; l < dim; ++l) moments(k, l) += wk * values[p][l];
    }
  }
  for (std::size_t k = 0; k < dim; ++k) {
    for (std::size_t l = 0; l < k; ++l) moments(k, l) = moments(l, k);
  }
  auto cross = [&](const std::vector<int>& a, const std::vector<int>& b) {
    Matrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) m(i, j) = moments(static_cast<std::size_t>(a[i]), static_cast<std::size_t>(b[j]));
    }
    return det(std::move(m));
  };
  const Scalar base = cross(shifted_degrees(Partition{}, n_vars), shifted_degrees(Partition{}, n_vars));
  const std::size_t size = lambdas.size();
  GramMatrix g{lambdas, Matrix(size), lat.single_tail * static_cast<double>(binomial(xs.size(), n))};
  for (std::size_t a = 0; a < size; ++a) {
    for (std::size_t b = 0; b < size; ++b) g.values(a, b) = cross(degrees[a], degrees[b]) / base;
  }
  return g;
}

Scalar schur_moment(const Partition& nu, int n_vars, const TruncatedLattice& lat, const Arithmetic& arith) {
  if (static_cast<int>(nu.length()) > n_vars) return lift(Scalar(0), arith);
  const std::size_t n = static_cast<std::size_t>(n_vars);
  const std::vector<Scalar> xs = lifted_points(lat, arith);
  const std::vector<Scalar> weights = weight_table(lat, n_vars, arith);
  const long top = 2L * (n_vars - 1) + nu[1];
  std::vector<Scalar> power(static_cast<std::size_t>(top) + 1, zero_of(arith));
  for (std::size_t p = 0; p < xs.size(); ++p) {
    Scalar term = weights[p];
    for (auto& m : power) {
      m += term;
      term *= xs[p];
    }
  }
  auto hankel = [&](const Partition& shape) {
    Matrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 1; j <= n; ++j) {
        m(i, j - 1) = power[(n - 1 - i) + static_cast<std::size_t>(shape[j]) + n - j];
      }
    }
    return det(std::move(m));
  };
  return hankel(nu) / hankel(Partition{});
}

std::vector<NormRow> norm_convergence_study(const Partition& lambda, int n_min, int n_max, const QParams& params) {
  const Scalar limit = phi_limit_norm(lambda, params);
  std::vector<NormRow> rows;
  for (int n = std::max<int>(n_min, static_cast<int>(lambda.length())); n <= n_max; ++n) {
    NormRow row{n, phi_finite_norm(lambda, n, params), limit, Scalar(0), std::nullopt};
    row.error = row.finite - limit;
    if (!rows.empty() && !rows.back().error.is_zero()) row.ratio = row.error / rows.back().error;
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<ConcentrationRow> concentration_diagnostic(const std::vector<int>& n_values, const QParams& params,
                                                       int cut, const Arithmetic& arith) {
  if (params.series != Series::exceptional) {
    throw InadmissibleParameters("concentration diagnostic needs the exceptional case gamma = delta = 0");
  }
  std::vector<ConcentrationRow> rows;
  for (int n_vars : n_values) {
    const TruncatedLattice lat = truncate(params, n_vars, cut);
    const std::size_t n = static_cast<std::size_t>(n_vars);
    if (n > lat.points.size()) throw NTooSmall("N exceeds the number of lattice points 2K");
    guard_enumeration(lat.points.size(), n);
    const std::vector<Scalar> weights = weight_table(lat, n_vars, arith);

    Scalar total = zero_of(arith);
    Scalar first = zero_of(arith);
    Scalar best = zero_of(arith);
    Configuration best_conf;
    for_each_configuration(lat.points.size(), n, [&](const Configuration& conf) {
      const Scalar w = config_weight(conf, lat, weights, arith);
      Scalar s = zero_of(arith);
      for (std::size_t idx : conf) s += lift(lat.points[idx], arith);
      total += w;
      first += w * s;
      if (best_conf.empty() || w > best) {
        best = w;
        best_conf = conf;
      }
    });

    std::vector<Scalar> by_modulus = lat.points;
    std::stable_sort(by_modulus.begin(), by_modulus.end(),
                     [](const Scalar& a, const Scalar& b) { return a.abs() > b.abs(); });
    Scalar target(0);
    for (std::size_t i = 0; i < n; ++i) target += by_modulus[i];

    ConcentrationRow row{n_vars, first / total, lift(target, arith), Scalar(0), {}, best / total};
    row.gap = (row.mean - row.target).abs();
    for (std::size_t idx : best_conf) row.argmax.push_back(lat.points[idx]);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace qjsf
