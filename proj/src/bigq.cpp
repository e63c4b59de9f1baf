#include "qjsf/bigq.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <optional>
#include <unordered_map>

namespace qjsf {

std::string to_string(Series s) {
  switch (s) {
    case Series::principal: return "principal";
    case Series::complementary: return "complementary";
    case Series::exceptional: return "exceptional";
  }
  return "unknown";
}

Scalar QParams::s() const { return gamma * delta * ctx.q_scalar() / Scalar(Rational(alpha * beta)); }

Scalar QParams::c_for(int n_vars) const { return gamma * ctx.qpow(1 - n_vars); }

Scalar QParams::d_for(int n_vars) const { return delta * ctx.qpow(1 - n_vars); }

long gap_index(const Rational& x, const Rational& q, const Rational& alpha, const Rational& beta) {
  if (sgn(x) == 0) throw InadmissibleParameters("complementary series: gamma and delta must be nonzero");
  const bool positive = sgn(x) > 0;
  const Rational mag = positive ? Rational(x) : Rational(-x);
  Rational point = positive ? Rational(alpha / q) : Rational(-beta / q);
  long k = 0;
  while (mag >= point) {
    if (mag == point) {
      throw InadmissibleParameters("complementary series: " + x.get_str() +
                                   " coincides with a point of the gap sequence");
    }
    point /= q;
    ++k;
  }
  return positive ? k : -(k + 1);
}

QParams classify(const Rational& q, const Rational& alpha, const Rational& beta, const Scalar& gamma,
                 const Scalar& delta) {
  QContext ctx(q);
  if (sgn(alpha) <= 0) throw InadmissibleParameters("alpha must be positive");
  if (sgn(beta) >= 0) throw InadmissibleParameters("beta must be negative");
  if (!gamma.is_exact() || !delta.is_exact()) {
    throw InadmissibleParameters("gamma and delta must be exact (rational or Gaussian rational)");
  }
  if (!gamma.is_real() || !delta.is_real()) {
    if (!(delta == gamma.conj()) || gamma.is_real()) {
      throw InadmissibleParameters("principal series: gamma and delta must be complex conjugates off the real axis");
    }
    return QParams{ctx, alpha, beta, gamma, delta, Series::principal};
  }
  const Scalar g = gamma.to_real();
  const Scalar d = delta.to_real();
  if (g.is_zero() && d.is_zero()) return QParams{ctx, alpha, beta, g, d, Series::exceptional};
  if (g.is_zero() || d.is_zero() || g.sign() != d.sign()) {
    throw InadmissibleParameters("complementary series: gamma and delta must be nonzero and of the same sign");
  }
  if (gap_index(g.rational(), q, alpha, beta) != gap_index(d.rational(), q, alpha, beta)) {
    throw InadmissibleParameters(
        "complementary series: gamma and delta must lie in one open gap of the sequence "
        "... < beta q^-2 < beta q^-1 < 0 < alpha q^-1 < alpha q^-2 < ...");
  }
  return QParams{ctx, alpha, beta, g, d, Series::complementary};
}

UnivariatePoly::UnivariatePoly(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) {}

Scalar UnivariatePoly::operator()(const Scalar& x) const {
  if (coeffs_.empty()) return Scalar::zero_like(x);
  unsigned bits = x.precision_bits();
  for (const Scalar& c : coeffs_) bits = std::max(bits, c.precision_bits());
  auto lift = [bits](const Scalar& v) { return bits && v.is_exact() ? v.to_float(bits) : v; };
  const Scalar xv = lift(x);
  Scalar acc = lift(coeffs_.back());
  for (std::size_t k = coeffs_.size() - 1; k-- > 0;) acc = acc * xv + lift(coeffs_[k]);
  return acc;
}

std::vector<Scalar> lattice(const QParams& params, int cut) {
  std::vector<Scalar> pts;
  pts.reserve(2 * static_cast<std::size_t>(std::max(cut, 0)));
  for (int k = 1; k <= cut; ++k) {
    const Scalar qk = params.ctx.qpow(k);
    pts.push_back(qk / Scalar(params.beta));
    pts.push_back(qk / Scalar(params.alpha));
  }
  std::sort(pts.begin(), pts.end(), [](const Scalar& a, const Scalar& b) { return a < b; });
  return pts;
}

namespace {

double magnitude(const Scalar& z) {
  const Gaussian g = z.as_gaussian();
  return std::hypot(g.re.get_d(), g.im.get_d());
}

struct LatticeSite {
  bool positive;
  long k;  // x = side^-1 q^k
};

LatticeSite locate(const Scalar& x, const QParams& params) {
  const Rational& xr = x.rational();
  if (sgn(xr) == 0) throw Error("0 is not a lattice point");
  const bool positive = sgn(xr) > 0;
  const Rational side = positive ? params.alpha : params.beta;
  Rational p = params.ctx.q() / side;
  for (long k = 1; k <= 100000; ++k) {
    if (p == xr) return {positive, k};
    if (positive ? p < xr : p > xr) break;
    p *= params.ctx.q();
  }
  throw Error(x.to_string() + " is not a point of the q-lattice");
}

// W(side^-1 q^k) / W(side^-1 q) as an exact finite product
Scalar side_ratio(const LatticeSite& site, const QParams& params, const Scalar& c, const Scalar& d) {
  const Scalar own(site.positive ? params.alpha : params.beta);
  const Scalar other(site.positive ? params.beta : params.alpha);
  Scalar r = params.ctx.qpow(site.k - 1);
  for (long t = 1; t < site.k; ++t) {
    const Scalar qt = params.ctx.qpow(t);
    const Scalar den = (Scalar(1) - qt) * (Scalar(1) - other * qt / own);
    const Scalar num = (Scalar(1) - c * qt / own) * (Scalar(1) - d * qt / own);
    if (num.is_zero()) throw NonPositiveWeight("weight vanishes at a lattice point");
    r *= num / den;
  }
  return r.to_real();
}

Scalar cross_side_constant(const QParams& params, const Scalar& c, const Scalar& d, unsigned bits) {
  const Scalar x_pos = params.ctx.q_scalar() / Scalar(params.alpha);
  const Scalar x_neg = params.ctx.q_scalar() / Scalar(params.beta);
  const double tol = std::ldexp(1.0, -static_cast<int>(bits) + 8);
  const Scalar ratio = weight(x_neg, params, c, d, bits, tol) / weight(x_pos, params, c, d, bits, tol);
  Rational exact;
  mpfr_get_q(exact.get_mpq_t(), ratio.big_float_value().backend().data());
  return Scalar(exact);
}

}  // namespace

Scalar weight(const Scalar& x, const QParams& params, const Scalar& c, const Scalar& d, unsigned bits,
              double tail_tol) {
  const Scalar a(params.alpha);
  const Scalar b(params.beta);
  const double scale = (magnitude(a) + magnitude(b) + magnitude(c) + magnitude(d)) * magnitude(x);
  const double q = params.ctx.q().get_d();
  Scalar w = x.abs().to_float(bits);
  double tail = scale / (1.0 - q);
  for (long i = 0;; ++i) {
    const Scalar qi = params.ctx.qpow(i);
    const Scalar num = (Scalar(1) - a * x * qi) * (Scalar(1) - b * x * qi);
    const Scalar den = (Scalar(1) - c * x * qi) * (Scalar(1) - d * x * qi);
    if (den.is_zero()) throw PoleEncountered("weight denominator vanishes at " + x.to_string());
    const Scalar f = (num / den).to_real();
    if (!f.is_real()) throw NonPositiveWeight("(c, d) do not give a real weight at " + x.to_string());
    w *= f.to_float(bits);
    // remaining factors satisfy |f - 1| <= ~2 scale q^i; their product is within the tail bound
    if (scale * std::pow(q, static_cast<double>(i + 1)) < 0.25 && 4.0 * tail < tail_tol) break;
    tail *= q;
  }
  if (w.sign() <= 0) throw NonPositiveWeight("weight is not positive at " + x.to_string());
  return w;
}

Scalar relative_weight(const Scalar& x, const QParams& params, const Scalar& c, const Scalar& d, unsigned bits) {
  const LatticeSite site = locate(x, params);
  Scalar r = side_ratio(site, params, c, d);
  if (!site.positive) r *= cross_side_constant(params, c, d, bits);
  if (r.sign() <= 0) throw NonPositiveWeight("weight is not positive at " + x.to_string());
  return r;
}

std::vector<Scalar> relative_weights(const std::vector<Scalar>& xs, const QParams& params, const Scalar& c,
                                     const Scalar& d, unsigned bits) {
  std::optional<Scalar> kappa;
  std::vector<Scalar> out;
  out.reserve(xs.size());
  for (const Scalar& x : xs) {
    const LatticeSite site = locate(x, params);
    Scalar r = side_ratio(site, params, c, d);
    if (!site.positive) {
      if (!kappa) kappa = cross_side_constant(params, c, d, bits);
      r *= *kappa;
    }
    if (r.sign() <= 0) throw NonPositiveWeight("weight is not positive at " + x.to_string());
    out.push_back(std::move(r));
  }
  return out;
}

namespace {

std::mutex phi_mutex;
std::unordered_map<std::string, UnivariatePoly> phi_cache;

UnivariatePoly phi_univariate_uncached(int degree, const QParams& params, const Scalar& c, const Scalar& d) {
  const QContext& ctx = params.ctx;
  const Scalar a(params.alpha);
  const Scalar b(params.beta);
  const Scalar q = ctx.q_scalar();
  const long l = degree;
  const Scalar big = c * d * ctx.qpow(l + 1) / (a * b);  // c d q^{l+1} / (a b)
  const Scalar lower1 = c * q / a;
  const Scalar lower2 = c * q / b;
  const Scalar pref_den = c.pow(l) * poch(big, l, ctx);
  if (pref_den.is_zero()) throw PoleEncountered("big q-Jacobi prefactor has a vanishing denominator");
  const Scalar pref = poch(lower1, l, ctx) * poch(lower2, l, ctx) / pref_den;

  std::vector<Scalar> sum(static_cast<std::size_t>(l) + 1, Scalar(0));
  std::vector<Scalar> basis{Scalar(1)};  // (c x; q)_k, ascending coefficients
  Scalar term(1);
  for (long k = 0; k <= l; ++k) {
    if (k > 0) {
      const Scalar qk = ctx.qpow(k - 1);
      const Scalar den = (Scalar(1) - lower1 * qk) * (Scalar(1) - lower2 * qk) * (Scalar(1) - ctx.qpow(k));
      if (den.is_zero()) throw PoleEncountered("3phi2 lower parameter hits q^{-m}");
      term *= (Scalar(1) - ctx.qpow(-l) * qk) * (Scalar(1) - big * qk) * q / den;
      // basis *= (1 - c q^{k-1} x)
      const Scalar root = c * qk;
      std::vector<Scalar> next(basis.size() + 1, Scalar(0));
      for (std::size_t j = 0; j < basis.size(); ++j) {
        next[j] += basis[j];
        next[j + 1] -= root * basis[j];
      }
      basis = std::move(next);
    }
    for (std::size_t j = 0; j < basis.size(); ++j) sum[j] += term * basis[j];
  }
  for (Scalar& v : sum) v = (pref * v).to_real();
  return UnivariatePoly(std::move(sum));
}

}  // namespace

UnivariatePoly phi_univariate(int degree, const QParams& params, const Scalar& c, const Scalar& d) {
  if (c.is_zero()) throw ZeroCParameter();
  const std::string key = std::to_string(degree) + "|" + params.ctx.q().get_str() + "|" + params.alpha.get_str() +
                          "|" + params.beta.get_str() + "|" + c.to_string() + "|" + d.to_string();
  {
    std::lock_guard lock(phi_mutex);
    if (auto it = phi_cache.find(key); it != phi_cache.end()) return it->second;
  }
  UnivariatePoly p = phi_univariate_uncached(degree, params, c, d);
  std::lock_guard lock(phi_mutex);
  phi_cache.emplace(key, p);
  return p;
}

std::vector<UnivariatePoly> gram_schmidt_monic(int max_degree, const std::vector<Scalar>& points,
                                               const std::vector<Scalar>& weights) {
  if (points.size() != weights.size()) throw std::invalid_argument("points and weights differ in length");
  if (static_cast<int>(points.size()) < max_degree + 1) {
    throw DegenerateMoments("need at least " + std::to_string(max_degree + 1) + " support points");
  }
  const Scalar& like = weights.front();
  const Scalar zero = Scalar::zero_like(like);
  const Scalar one = Scalar::one_like(like);
  std::vector<Scalar> xs;
  for (const Scalar& x : points) xs.push_back(coerce_like(x, like));

  // values of p_k at the support points, alongside its coefficients (Stieltjes recursion)
  std::vector<UnivariatePoly> out;
  std::vector<Scalar> prev_coeffs;
  std::vector<Scalar> cur_coeffs{one};
  std::vector<Scalar> prev_vals;
  std::vector<Scalar> cur_vals(xs.size(), one);
  Scalar prev_norm = one;
  for (int k = 0; k <= max_degree; ++k) {
    out.emplace_back(cur_coeffs);
    if (k == max_degree) break;
    Scalar norm = zero;
    Scalar moment = zero;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      const Scalar wv = weights[i] * cur_vals[i] * cur_vals[i];
      norm += wv;
      moment += wv * xs[i];
    }
    if (norm.is_zero()) throw DegenerateMoments("vanishing norm at degree " + std::to_string(k));
    const Scalar a_k = moment / norm;
    const Scalar b_k = k == 0 ? zero : norm / prev_norm;
    std::vector<Scalar> next(cur_coeffs.size() + 1, zero);
    for (std::size_t j = 0; j < cur_coeffs.size(); ++j) {
      next[j + 1] += cur_coeffs[j];
      next[j] -= a_k * cur_coeffs[j];
    }
    for (std::size_t j = 0; j < prev_coeffs.size(); ++j) next[j] -= b_k * prev_coeffs[j];
    std::vector<Scalar> next_vals(xs.size(), zero);
    for (std::size_t i = 0; i < xs.size(); ++i) {
      next_vals[i] = (xs[i] - a_k) * cur_vals[i];
      if (k > 0) next_vals[i] -= b_k * prev_vals[i];
    }
    prev_coeffs = std::move(cur_coeffs);
    cur_coeffs = std::move(next);
    prev_vals = std::move(cur_vals);
    cur_vals = std::move(next_vals);
    prev_norm = norm;
  }
  return out;
}

Scalar phi_multivariate_det(const Partition& lambda, const std::vector<Scalar>& xs, const QParams& params) {
  const int n = static_cast<int>(xs.size());
  if (n < static_cast<int>(lambda.length())) throw NTooSmall("phi_{lambda|N} needs N >= l(lambda)");
  if (params.gamma.is_zero()) throw ZeroCParameter();
  if (n == 0) return Scalar(1);
  const Scalar c = params.c_for(n);
  const Scalar d = params.d_for(n);
  Matrix m(xs.size());
  for (int i = 1; i <= n; ++i) {
    const UnivariatePoly p = phi_univariate(lambda[static_cast<std::size_t>(i)] + n - i, params, c, d);
    for (int j = 1; j <= n; ++j) m(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) = p(xs[static_cast<std::size_t>(j - 1)]);
  }
  const Scalar v = vandermonde(xs);
  return (det(std::move(m)) / v).to_real();
}

Scalar rho(const Partition& lambda, const Partition& mu, const QParams& params) {
  if (params.gamma.is_zero()) throw ZeroCParameter();
  const std::size_t len = lambda.length();
  if (mu.length() > len) return Scalar(0);
  const QContext& ctx = params.ctx;
  const Scalar& g = params.gamma;
  const Scalar a(params.alpha);
  const Scalar b(params.beta);
  const Scalar gd_ab = g * params.delta / (a * b);
  Matrix m(len);
  for (std::size_t i = 1; i <= len; ++i) {
    for (std::size_t k = 1; k <= len; ++k) {
      const long li = lambda[i];
      const long mk = mu[k];
      const long ii = static_cast<long>(i);
      const long kk = static_cast<long>(k);
      const long r = li - mk - ii + kk;
      if (r < 0) {
        m(i - 1, k - 1) = Scalar(0);
        continue;
      }
      const Scalar shift = ctx.qpow(mk - kk + 2);
      const Scalar num = poch(g / a * shift, r, ctx) * poch(g / b * shift, r, ctx);
      const Scalar den = ctx.qpow((mk - kk + 1) * r) * poch(gd_ab * ctx.qpow(li + mk - ii - kk + 3), r, ctx) *
                         poch(ctx.q_scalar(), r, ctx);
      if (den.is_zero()) throw PoleEncountered("rho determinant entry has a vanishing denominator");
      m(i - 1, k - 1) = num / den;
    }
  }
  // no (-1)^{|lambda|-|mu|} prefactor: with it the expansion disagrees with the determinant
  return g.pow(-static_cast<long>(lambda.size())) * det(std::move(m));
}

PhiExpansion phi_limit_expansion(const Partition& lambda, const QParams& params) {
  PhiExpansion out;
  const auto subs = subpartitions(lambda);
  for (const Partition& mu : subs) {
    Scalar r = rho(lambda, mu, params);
    if (!r.is_zero()) out.interp.emplace(mu, r);
  }
  for (const Partition& nu : subs) {
    Scalar c(0);
    for (const auto& [mu, r] : out.interp) {
      if (contains(mu, nu)) c += r * sigma(mu, nu, params.ctx);
    }
    out.schur.add(nu, (c * params.gamma.pow(nu.size())).to_real());
  }
  return out;
}

SchurExpansion phi_finite_expansion(const Partition& lambda, int n_vars, const QParams& params) {
  if (n_vars < static_cast<int>(lambda.length())) throw NTooSmall("phi_{lambda|N} needs N >= l(lambda)");
  const PhiExpansion limit = phi_limit_expansion(lambda, params);
  const Scalar qn = params.ctx.qpow(n_vars);
  const Scalar top = poch_diagram(qn, lambda, params.ctx);
  SchurExpansion out;
  for (const auto& [nu, c] : limit.schur.coeffs()) {
    if (static_cast<int>(nu.length()) > n_vars) continue;
    out.add(nu, top / poch_diagram(qn, nu, params.ctx) * c);
  }
  return out;
}

Scalar phi_limit_norm(const Partition& lambda, const QParams& params) {
  const QContext& ctx = params.ctx;
  const Scalar q = ctx.q_scalar();
  const Scalar a(params.alpha);
  const Scalar b(params.beta);
  const Scalar s = params.s();
  long exponent = 0;
  for (std::size_t i = 1; i <= lambda.length(); ++i) {
    exponent += static_cast<long>(lambda[i]) * (lambda[i] + 3 - 2 * static_cast<long>(i));
  }
  const long size = lambda.size();
  Scalar out = ctx.qpow(exponent) * (-s).pow(size) * (-(a * b)).pow(-size);
  out *= poch_diagram(params.gamma * q / a, lambda, ctx) * poch_diagram(params.gamma * q / b, lambda, ctx);
  out *= poch_diagram(params.delta * q / a, lambda, ctx) * poch_diagram(params.delta * q / b, lambda, ctx);
  const Scalar den = poch_diagram(s * q, doubled(lambda), ctx);
  if (den.is_zero()) throw PoleEncountered("(sq;q) over the doubled diagram vanishes");
  return (out / den).to_real();
}

Scalar h_univariate_norm(int degree, int n_vars, const QParams& params) {
  const QContext& ctx = params.ctx;
  const long l = degree;
  const long n = n_vars;
  const Scalar a(params.alpha);
  const Scalar b(params.beta);
  const Scalar s = params.s();
  const Scalar shift = ctx.qpow(2 - n);
  Scalar out = ctx.qpow(2 * l) * (-(a * b)).pow(-l);
  out *= poch(params.gamma * shift / a, l, ctx) * poch(params.gamma * shift / b, l, ctx);
  out *= poch(params.delta * shift / a, l, ctx) * poch(params.delta * shift / b, l, ctx);
  const Scalar den = poch(s * ctx.qpow(2 - 2 * n), 2 * l, ctx) * poch(s * ctx.qpow(3 - 2 * n), 2 * l, ctx);
  if (den.is_zero()) throw PoleEncountered("h_l(N) denominator vanishes");
  out /= den;
  out *= ctx.qpow(l * (l - 1) / 2) * poch(s * ctx.qpow(2 - 2 * n), l, ctx);
  // (q;q)_l factor confirmed against brute-force lattice sums
  out *= poch(ctx.q_scalar(), l, ctx);
  return out.to_real();
}

Scalar phi_finite_norm(const Partition& lambda, int n_vars, const QParams& params) {
  if (n_vars < static_cast<int>(lambda.length())) throw NTooSmall("phi_{lambda|N} needs N >= l(lambda)");
  Scalar out(1);
  for (int i = 1; i <= n_vars; ++i) {
    out *= h_univariate_norm(lambda[static_cast<std::size_t>(i)] + n_vars - i, n_vars, params) /
           h_univariate_norm(n_vars - i, n_vars, params);
  }
  return out.to_real();
}

}  // namespace qjsf
