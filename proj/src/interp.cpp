#include "qjsf/interp.hpp"

#include <mutex>
#include <string>
#include <unordered_map>

namespace qjsf {

void SchurExpansion::add(const Partition& nu, const Scalar& value) {
  auto it = coeffs_.find(nu);
  if (it == coeffs_.end()) {
    if (!value.is_zero()) coeffs_.emplace(nu, value);
    return;
  }
  it->second += value;
  if (it->second.is_zero()) coeffs_.erase(it);
}

Scalar SchurExpansion::coeff(const Partition& nu) const {
  auto it = coeffs_.find(nu);
  return it == coeffs_.end() ? Scalar(0) : it->second;
}

std::optional<Partition> SchurExpansion::top() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.rbegin()->first;
}

int SchurExpansion::degree() const { return coeffs_.empty() ? 0 : coeffs_.rbegin()->first.size(); }

Scalar SchurExpansion::evaluate(const std::vector<Scalar>& xs) const {
  Scalar sum;
  bool first = true;
  for (const auto& [nu, c] : coeffs_) {
    Scalar term = coerce_like(c, xs.empty() ? c : xs.front()) * schur_eval(nu, xs);
    if (first) {
      sum = std::move(term);
      first = false;
    } else {
      sum += term;
    }
  }
  return sum;
}

namespace {

std::mutex sigma_mutex;
std::unordered_map<std::string, Scalar> sigma_cache;

Scalar sigma_uncached(const Partition& mu, const Partition& nu, const QContext& ctx) {
  const std::size_t len = mu.length();
  if (nu.length() > len) return Scalar(0);
  Matrix m(len);
  for (std::size_t i = 1; i <= len; ++i) {
    for (std::size_t k = 1; k <= len; ++k) {
      const long r = static_cast<long>(mu[i]) - nu[k] - static_cast<long>(i) + static_cast<long>(k);
      m(i - 1, k - 1) = reciprocal_qfactorial(r, ctx);
    }
  }
  const long sign_exp = mu.size() - nu.size();
  const long q_exp = n_stat(mu) - n_stat(conjugate(mu)) - n_stat(nu) + n_stat(conjugate(nu));
  Scalar out = ctx.qpow(q_exp) * det(std::move(m));
  return sign_exp % 2 == 0 ? out : -out;
}

}  // namespace

Scalar sigma(const Partition& mu, const Partition& nu, const QContext& ctx) {
  const std::string key = mu.to_string() + "|" + nu.to_string() + "|" + ctx.q().get_str();
  {
    std::lock_guard lock(sigma_mutex);
    if (auto it = sigma_cache.find(key); it != sigma_cache.end()) return it->second;
  }
  Scalar value = sigma_uncached(mu, nu, ctx);
  std::lock_guard lock(sigma_mutex);
  sigma_cache.emplace(key, value);
  return value;
}

SchurExpansion interp_expansion(const Partition& mu, const QContext& ctx) {
  SchurExpansion out;
  for (const Partition& nu : subpartitions(mu)) out.add(nu, sigma(mu, nu, ctx));
  return out;
}

Scalar h_norm(const Partition& mu, const QContext& ctx) {
  long exponent = 0;
  for (std::size_t i = 1; i <= mu.length(); ++i) exponent += static_cast<long>(mu[i]) * (mu[i] - static_cast<long>(i) + 1);
  Scalar out = ctx.qpow(-exponent);
  for (const auto& [box, h] : hook_lengths(mu)) out *= Scalar(1) - ctx.qpow(h);
  return out;
}

Scalar interp_poly_det(const Partition& mu, const std::vector<Scalar>& xs, const QContext& ctx) {
  const long n = static_cast<long>(xs.size());
  if (n < static_cast<long>(mu.length())) {
    throw NTooSmall("I_{mu|N} needs N >= l(mu) = " + std::to_string(mu.length()));
  }
  if (n == 0) return Scalar(1);
  const Scalar& like = xs.front();
  Matrix a(xs.size());
  for (long i = 1; i <= n; ++i) {
    const long factors = mu[static_cast<std::size_t>(i)] + n - i;
    for (long j = 1; j <= n; ++j) {
      const Scalar& x = xs[static_cast<std::size_t>(j - 1)];
      Scalar entry = Scalar::one_like(like);
      for (long t = 1; t <= factors; ++t) entry *= x - coerce_like(ctx.qpow(n - t), like);
      a(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) = std::move(entry);
    }
  }
  const Scalar v = vandermonde(xs);
  return det(std::move(a)) / v;
}

SchurExpansion interp_poly_expansion(const Partition& mu, int n_vars, const QContext& ctx) {
  if (n_vars < static_cast<int>(mu.length())) {
    throw NTooSmall("I_{mu|N} needs N >= l(mu) = " + std::to_string(mu.length()));
  }
  const Scalar qn = ctx.qpow(n_vars);
  const Scalar top = poch_diagram(qn, mu, ctx);
  SchurExpansion out;
  for (const Partition& nu : subpartitions(mu)) {
    out.add(nu, top / poch_diagram(qn, nu, ctx) * sigma(mu, nu, ctx));
  }
  return out;
}

Scalar interp_combinatorial(const Partition& mu, const std::vector<Scalar>& xs, const QContext& ctx) {
  const int n = static_cast<int>(xs.size());
  Scalar sum;
  if (!xs.empty()) sum = Scalar::zero_like(xs.front());
  for (const Tableau& t : enumerate_reverse_tableaux(mu, n)) {
    Scalar prod = xs.empty() ? Scalar(1) : Scalar::one_like(xs.front());
    for (int i = 1; i <= static_cast<int>(mu.length()); ++i) {
      for (int j = 1; j <= mu[static_cast<std::size_t>(i)]; ++j) {
        const int v = t.at(i, j);
        const Scalar& x = xs[static_cast<std::size_t>(v - 1)];
        prod *= x - coerce_like(ctx.qpow(v + i - j - 1), x);
      }
    }
    sum += prod;
  }
  return sum;
}

Scalar schur_eval(const Partition& nu, const std::vector<Scalar>& xs) {
  const std::size_t n = xs.size();
  if (nu.length() > n) return Scalar(0);
  if (n == 0) return Scalar(1);
  Matrix a(n);
  for (std::size_t k = 1; k <= n; ++k) {
    const long e = nu[k] + static_cast<long>(n - k);
    for (std::size_t j = 1; j <= n; ++j) a(k - 1, j - 1) = xs[j - 1].pow(e);
  }
  const Scalar v = vandermonde(xs);
  return det(std::move(a)) / v;
}

Scalar schur_eval_jacobi_trudi(const Partition& nu, const std::vector<Scalar>& xs) {
  const std::size_t len = nu.length();
  if (len == 0) return xs.empty() ? Scalar(1) : Scalar::one_like(xs.front());
  const int top = nu[1] + static_cast<int>(len);
  const Scalar one = xs.empty() ? Scalar(1) : Scalar::one_like(xs.front());
  std::vector<Scalar> h(static_cast<std::size_t>(top) + 1, Scalar::zero_like(one));
  h[0] = one;
  // complete homogeneous h_k, adding one variable at a time
  for (const Scalar& x : xs) {
    for (std::size_t k = 1; k < h.size(); ++k) h[k] += x * h[k - 1];
  }
  Matrix m(len);
  for (std::size_t i = 1; i <= len; ++i) {
    for (std::size_t j = 1; j <= len; ++j) {
      const long k = nu[i] - static_cast<long>(i) + static_cast<long>(j);
      m(i - 1, j - 1) = k < 0 ? Scalar::zero_like(one) : h[static_cast<std::size_t>(k)];
    }
  }
  return det(std::move(m));
}

bool projection_consistency_check(const Partition& mu, const std::vector<Scalar>& xs, const QContext& ctx) {
  if (xs.size() < mu.length()) throw NTooSmall("projection check needs N-1 >= l(mu)");
  std::vector<Scalar> full = xs;
  full.push_back(coerce_like(ctx.qpow(static_cast<long>(xs.size())), xs.empty() ? Scalar(1) : xs.front()));
  return interp_poly_det(mu, full, ctx) == interp_poly_det(mu, xs, ctx);
}

std::vector<Scalar> newton_expand(int n_vars, int m, const QContext& ctx) {
  std::vector<Scalar> out;
  const Scalar q = ctx.q_scalar();
  const Scalar qm = poch(q, m, ctx);
  const long n_big = n_vars;
  auto weight = [&](long k) { return n_big * k - (k * k + k) / 2; };
  for (long n = 0; n <= m; ++n) {
    Scalar c = ctx.qpow(weight(m) - weight(n)) * qm / (poch(q, n, ctx) * poch(q, m - n, ctx));
    out.push_back((m - n) % 2 == 0 ? c : -c);
  }
  return out;
}

TruncatedSeries interp_series_truncated(const Partition& mu, const CoordinateRule& xs, int n_vars, int horizon,
                                        const QContext& ctx) {
  std::vector<Scalar> prefix;
  for (int i = 1; i <= n_vars; ++i) prefix.push_back(xs(static_cast<std::size_t>(i)));
  Scalar value = interp_combinatorial(mu, prefix, ctx);

  std::vector<Scalar> majorant;
  for (int n = 1; n <= std::max(horizon, n_vars); ++n) {
    majorant.push_back(xs(static_cast<std::size_t>(n)).abs() + ctx.qpow(n - mu[1]));
  }
  const Scalar full = schur_eval_jacobi_trudi(mu, majorant);
  majorant.resize(static_cast<std::size_t>(n_vars));
  const Scalar partial = schur_eval_jacobi_trudi(mu, majorant);
  return {std::move(value), (full - partial).to_double()};
}

}  // namespace qjsf
