#include "qjsf/verify.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "qjsf/bigq.hpp"
#include "qjsf/interp.hpp"
#include "qjsf/measure.hpp"
#include "qjsf/partition.hpp"
#include "qjsf/qseries.hpp"

namespace qjsf::verify {

namespace {

class Tally {
 public:
  void expect(bool ok, const std::function<std::string()>& what) {
    ++checks_;
    if (ok) return;
    if (failures_++ == 0) first_ = what();
  }
  void note(std::string s) { notes_.push_back(std::move(s)); }
  bool passed() const { return failures_ == 0 && checks_ > 0; }
  std::string summary(const std::string& ok_text) const {
    std::ostringstream out;
    if (checks_ == 0) {
      out << "no checks ran";
    } else if (failures_ == 0) {
      out << ok_text << " (" << checks_ << " checks)";
    } else {
      out << failures_ << " of " << checks_ << " checks failed; first: " << first_;
    }
    for (const std::string& n : notes_) out << "; " << n;
    return out.str();
  }

 private:
  long checks_ = 0;
  long failures_ = 0;
  std::string first_;
  std::vector<std::string> notes_;
};

using Rng = std::mt19937_64;

long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

Rational random_rational(Rng& rng, long span = 20, long max_den = 9) {
  return Rational(uniform(rng, -span, span), uniform(rng, 1, max_den));
}

// n pairwise distinct rationals avoiding `avoid`
std::vector<Scalar> random_points(Rng& rng, std::size_t n, const std::vector<Scalar>& avoid = {}) {
  std::vector<Scalar> out;
  while (out.size() < n) {
    Scalar x(random_rational(rng));
    bool fresh = true;
    for (const Scalar& y : out) fresh = fresh && !(x == y);
    for (const Scalar& y : avoid) fresh = fresh && !(x == y);
    if (fresh) out.push_back(std::move(x));
  }
  return out;
}

std::string show(const std::vector<Scalar>& xs) {
  std::string s = "(";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + xs[i].to_string();
  return s + ")";
}

QParams reference_principal() {
  return classify(Rational(1, 2), Rational(1), Rational(-1), Scalar::gaussian(Rational(1, 5), Rational(1, 7)),
                  Scalar::gaussian(Rational(1, 5), Rational(-1, 7)));
}

QParams reference_complementary() {
  return classify(Rational(1, 2), Rational(1), Rational(-1), Scalar(Rational(5, 2)), Scalar(Rational(3)));
}

QParams random_params(Rng& rng, bool principal) {
  static const Rational qs[] = {Rational(1, 2), Rational(1, 3), Rational(2, 5), Rational(3, 5)};
  static const Rational alphas[] = {Rational(1), Rational(2), Rational(1, 2), Rational(3, 2)};
  static const Rational betas[] = {Rational(-1), Rational(-2), Rational(-1, 3), Rational(-5, 4)};
  const Rational q = qs[uniform(rng, 0, 3)];
  const Rational a = alphas[uniform(rng, 0, 3)];
  const Rational b = betas[uniform(rng, 0, 3)];
  if (principal) {
    const Rational re(uniform(rng, -6, 6), uniform(rng, 1, 7));
    Rational im(uniform(rng, 1, 6), uniform(rng, 1, 7));
    if (uniform(rng, 0, 1)) im = -im;
    return classify(q, a, b, Scalar::gaussian(re, im), Scalar::gaussian(re, -im));
  }
  // two distinct interior points of the gap (side q^-k, side q^-k-1), k in {1, 2}
  const bool positive = uniform(rng, 0, 1) == 1;
  const Rational side = positive ? a : b;
  Rational lo = side;
  for (long k = uniform(rng, 1, 2); k > 0; --k) lo /= q;
  const Rational hi = lo / q;
  const long t1 = uniform(rng, 1, 6);
  long t2 = uniform(rng, 1, 5);
  if (t2 >= t1) ++t2;
  const Rational g = lo + (hi - lo) * Rational(t1, 7);
  const Rational d = lo + (hi - lo) * Rational(t2, 7);
  return classify(q, a, b, Scalar(g), Scalar(d));
}

std::vector<Partition> up_to(int max_size, int min_size = 0) {
  std::vector<Partition> out;
  for (const Partition& p : enumerate_partitions(max_size)) {
    if (p.size() >= min_size) out.push_back(p);
  }
  return out;
}

Scalar cofactor_det(const std::vector<std::vector<Scalar>>& a) {
  const std::size_t n = a.size();
  if (n == 0) return Scalar(1);
  if (n == 1) return a[0][0];
  Scalar out(0);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<Scalar>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Scalar> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != j) row.push_back(a[i][k]);
      }
      minor.push_back(std::move(row));
    }
    const Scalar term = a[0][j] * cofactor_det(minor);
    out += j % 2 == 0 ? term : -term;
  }
  return out;
}

Matrix to_matrix(const std::vector<std::vector<Scalar>>& a) {
  Matrix m(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) m(i, j) = a[i][j];
  }
  return m;
}

// ---- suites ----------------------------------------------------------------

Outcome scalar_suite(const Options& opts) {
  Rng rng(opts.seed);
  Tally t;
  auto random_scalar = [&](bool gaussian) {
    return gaussian ? Scalar::gaussian(random_rational(rng), random_rational(rng)) : Scalar(random_rational(rng));
  };
  for (int trial = 0; trial < 200; ++trial) {
    const bool g = trial % 2 == 1;
    const Scalar a = random_scalar(g), b = random_scalar(g), c = random_scalar(g);
    t.expect((a + b) + c == a + (b + c), [&] { return "additive associativity"; });
    t.expect((a * b) * c == a * (b * c), [&] { return "multiplicative associativity"; });
    t.expect(a * (b + c) == a * b + a * c, [&] { return "distributivity"; });
    if (!b.is_zero()) t.expect(a / b * b == a, [&] { return "division inverse"; });
  }
  for (std::size_t n = 1; n <= 5; ++n) {
    for (int trial = 0; trial < 4; ++trial) {
      std::vector<std::vector<Scalar>> a(n, std::vector<Scalar>(n));
      for (auto& row : a) {
        for (auto& v : row) v = Scalar(random_rational(rng, 9, 5));
      }
      const Scalar d = det(to_matrix(a));
      t.expect(d == cofactor_det(a), [&] { return "det differs from cofactor expansion at n=" + std::to_string(n); });
      if (n >= 2) {
        std::swap(a[0], a[n - 1]);
        t.expect(det(to_matrix(a)) == -d, [&] { return "row swap did not negate det"; });
      }
    }
  }
  return {"scalar", t.passed(), t.summary("field axioms and determinant identities hold exactly")};
}

Outcome partition_suite(const Options&) {
  Tally t;
  const auto parts = up_to(8);
  for (const Partition& l : parts) {
    const Partition c = conjugate(l);
    t.expect(conjugate(c) == l, [&] { return "conjugate not an involution at " + l.to_string(); });
    t.expect(c.size() == l.size(), [&] { return "conjugate changed size at " + l.to_string(); });
    long binom = 0;
    for (int v : l.parts()) binom += static_cast<long>(v) * (v - 1) / 2;
    t.expect(n_stat(c) == binom, [&] { return "n(l') identity fails at " + l.to_string(); });
  }
  const auto small = up_to(5);
  for (const Partition& a : small) {
    for (const Partition& b : small) {
      if (contains(a, b) && contains(b, a)) t.expect(a == b, [&] { return "containment not antisymmetric"; });
    }
  }
  for (const Partition& mu : up_to(4)) {
    for (int n = 1; n <= 4; ++n) {
      const auto count = static_cast<long>(enumerate_reverse_tableaux(mu, n).size());
      const Scalar s = schur_eval_jacobi_trudi(mu, std::vector<Scalar>(static_cast<std::size_t>(n), Scalar(1)));
      t.expect(s == Scalar(count), [&] { return "tableau count != S_mu(1^N) at " + mu.to_string(); });
    }
  }
  return {"partition", t.passed(), t.summary("conjugation, containment and tableau counts consistent")};
}

Outcome qseries_suite(const Options& opts) {
  Rng rng(opts.seed + 1);
  Tally t;
  const QContext ctx(opts.q);
  for (int trial = 0; trial < 60; ++trial) {
    const Scalar z(random_rational(rng, 30, 11));
    const long m = uniform(rng, -6, 6);
    const long n = uniform(rng, -6, 6);
    try {
      const Scalar lhs = poch(z, m + n, ctx);
      const Scalar rhs = poch(z, m, ctx) * poch(z * ctx.qpow(m), n, ctx);
      t.expect(lhs == rhs, [&] { return "poch additivity fails for z=" + z.to_string(); });
    } catch (const PoleEncountered&) {
      // z lands on q^{-j}; skipped
    }
  }
  for (const Partition& l : up_to(6)) {
    const Scalar z(random_rational(rng));
    Scalar rows(1);
    for (std::size_t i = 1; i <= l.length(); ++i) rows *= poch(z * ctx.qpow(1 - static_cast<long>(i)), l[i], ctx);
    t.expect(rows == poch_diagram(z, l, ctx), [&] { return "row and box forms differ at " + l.to_string(); });
  }
  for (long l = 0; l <= 4; ++l) {
    const Scalar a(random_rational(rng)), b(random_rational(rng));
    const Scalar c(Rational(uniform(rng, 11, 30), 7)), d(Rational(-uniform(rng, 1, 30), 7));
    Scalar sum(0);
    for (long k = 0; k <= l + 2; ++k) {
      const Scalar term = poch(ctx.qpow(-l), k, ctx) * poch(a, k, ctx) * poch(b, k, ctx) /
                          (poch(c, k, ctx) * poch(d, k, ctx) * poch(ctx.q_scalar(), k, ctx)) * ctx.qpow(k);
      if (k > l) t.expect(term.is_zero(), [&] { return "term beyond l does not vanish"; });
      sum += term;
    }
    t.expect(sum == phi32_terminating(l, a, b, c, d, ctx), [&] { return "3phi2 differs from termwise sum"; });
  }
  return {"qseries", t.passed(), t.summary("Pochhammer identities and 3phi2 termination hold exactly")};
}

Outcome golden_suite(const Options& opts) {
  Tally t;
  std::set<Rational> qs{Rational(1, 2), Rational(1, 3), Rational(2, 5), opts.q};
  for (const Rational& qr : qs) {
    const QContext ctx(qr);
    const Scalar q(qr);
    const Scalar one(1);
    const std::map<Partition, std::map<Partition, Scalar>> expected{
        {Partition{1}, {{Partition{1}, one}, {Partition{}, -one / (one - q)}}},
        {Partition{1, 1},
         {{Partition{1, 1}, one}, {Partition{1}, -q / (one - q)}, {Partition{}, q * q / ((one - q) * (one - q * q))}}},
        {Partition{2},
         {{Partition{2}, one},
          {Partition{1}, -one / (q * (one - q))},
          {Partition{}, one / (q * (one - q) * (one - q * q))}}},
    };
    for (const auto& [mu, want] : expected) {
      const SchurExpansion got = interp_expansion(mu, ctx);
      t.expect(got.coeffs() == want, [&] {
        return "I_" + mu.to_string() + " at q=" + qr.get_str() + " differs from the worked example";
      });
    }
  }
  return {"golden", t.passed(), t.summary("worked expansions of I_(1), I_(1,1), I_(2) reproduced exactly")};
}

Outcome vanishing_suite(const Options& opts) {
  Tally t;
  const QContext ctx(opts.q);
  const int lambda_max = std::max(6, opts.max_size);
  const auto lambdas = up_to(lambda_max);
  for (const Partition& mu : up_to(opts.max_size, 1)) {
    for (const Partition& lam : lambdas) {
      if (contains(lam, mu)) continue;
      const int lo = static_cast<int>(std::max({mu.length(), lam.length(), std::size_t{1}}));
      for (int n = lo; n <= 6; ++n) {
        const Scalar v = interp_poly_det(mu, node_vector(lam, n, opts.q), ctx);
        t.expect(v.is_zero(), [&] {
          return "I_{" + mu.to_string() + "|" + std::to_string(n) + "}(X(" + lam.to_string() + ")) = " + v.to_string();
        });
      }
    }
  }
  return {"vanishing", t.passed(), t.summary("all exact zeros")};
}

Outcome normalization_suite(const Options& opts) {
  Tally t;
  const QContext ctx(opts.q);
  for (const Partition& mu : up_to(opts.max_size)) {
    const Scalar h = h_norm(mu, ctx);
    for (int n = std::max<int>(1, static_cast<int>(mu.length())); n <= 6; ++n) {
      const Scalar v = interp_poly_det(mu, node_vector(mu, n, opts.q), ctx);
      t.expect(v == h, [&] { return "I_{" + mu.to_string() + "|" + std::to_string(n) + "}(X(mu)) != H(mu)"; });
    }
  }
  return {"normalization", t.passed(), t.summary("I_mu(X(mu)) = H(mu) exactly for every N")};
}

Outcome agreement_suite(const Options& opts) {
  Rng rng(opts.seed + 2);
  Tally t;
  const QContext ctx(opts.q);
  for (const Partition& mu : up_to(opts.max_size)) {
    for (int n = std::max<int>(1, static_cast<int>(mu.length())); n <= 5; ++n) {
      const SchurExpansion e = interp_poly_expansion(mu, n, ctx);
      for (int trial = 0; trial < 10; ++trial) {
        const auto xs = random_points(rng, static_cast<std::size_t>(n));
        const Scalar d = interp_poly_det(mu, xs, ctx);
        const Scalar c = interp_combinatorial(mu, xs, ctx);
        const Scalar s = e.evaluate(xs);
        t.expect(d == c && c == s, [&] {
          return "mu=" + mu.to_string() + " N=" + std::to_string(n) + " at " + show(xs) + ": det " + d.to_string() +
                 ", tableaux " + c.to_string() + ", Schur " + s.to_string();
        });
      }
    }
  }
  return {"agreement", t.passed(), t.summary("determinant, tableau and Schur evaluations agree exactly")};
}

Outcome projective_suite(const Options& opts) {
  Rng rng(opts.seed + 3);
  Tally t;
  const QContext ctx(opts.q);
  for (const Partition& mu : up_to(opts.max_size)) {
    for (int n = std::max<int>(2, static_cast<int>(mu.length()) + 1); n <= 6; ++n) {
      for (int trial = 0; trial < 3; ++trial) {
        const auto xs = random_points(rng, static_cast<std::size_t>(n - 1), {ctx.qpow(n - 1)});
        t.expect(projection_consistency_check(mu, xs, ctx),
                 [&] { return "x_N = q^{N-1} fails for mu=" + mu.to_string() + " N=" + std::to_string(n); });
      }
    }
  }
  return {"projective", t.passed(), t.summary("x_N = q^{N-1} maps I_{mu|N} to I_{mu|N-1} exactly")};
}

Outcome stability_suite(const Options& opts) {
  Tally t;
  const QContext ctx(opts.q);
  for (const Partition& mu : up_to(opts.max_size)) {
    for (int n = std::max<int>(1, static_cast<int>(mu.length())); n <= 6; ++n) {
      const SchurExpansion e = interp_poly_expansion(mu, n, ctx);
      const Scalar qn = ctx.qpow(n);
      for (const Partition& nu : subpartitions(mu)) {
        const Scalar scaled = e.coeff(nu) * poch_diagram(qn, nu, ctx) / poch_diagram(qn, mu, ctx);
        t.expect(scaled == sigma(mu, nu, ctx), [&] { return "N-dependence at mu=" + mu.to_string() + " nu=" + nu.to_string(); });
      }
    }
  }
  return {"stability", t.passed(), t.summary("finite-N coefficients rescale to sigma exactly")};
}

Outcome newton_suite(const Options& opts) {
  Tally t;
  const QContext ctx(opts.q);
  for (int n = 1; n <= 6; ++n) {
    for (int m = 0; m <= 6; ++m) {
      std::vector<Scalar> poly{Scalar(1)};
      for (int k = 1; k <= m; ++k) {
        const Scalar root = ctx.qpow(n - k);
        std::vector<Scalar> next(poly.size() + 1, Scalar(0));
        for (std::size_t j = 0; j < poly.size(); ++j) {
          next[j + 1] += poly[j];
          next[j] -= root * poly[j];
        }
        poly = std::move(next);
      }
      t.expect(newton_expand(n, m, ctx) == poly,
               [&] { return "Newton coefficients differ at N=" + std::to_string(n) + " m=" + std::to_string(m); });
    }
  }
  return {"newton", t.passed(), t.summary("Newton coefficients match polynomial products")};
}

Outcome expansion_suite(const Options& opts) {
  Rng rng(opts.seed + 4);
  Tally t;
  for (const QParams& params : {reference_principal(), reference_complementary()}) {
    for (const Partition& lam : up_to(3)) {
      for (int n = std::max<int>(1, static_cast<int>(lam.length())); n <= 3; ++n) {
        const SchurExpansion e = phi_finite_expansion(lam, n, params);
        for (int trial = 0; trial < 3; ++trial) {
          const auto xs = random_points(rng, static_cast<std::size_t>(n));
          const Scalar d = phi_multivariate_det(lam, xs, params);
          const Scalar s = e.evaluate(xs);
          t.expect(d == s, [&] {
            return to_string(params.series) + " lambda=" + lam.to_string() + " N=" + std::to_string(n) + " at " +
                   show(xs) + ": det " + d.to_string() + " vs expansion " + s.to_string();
          });
        }
      }
    }
  }
  return {"expansion", t.passed(), t.summary("determinant and Schur expansion of phi_{lambda|N} agree exactly")};
}

Outcome realness_suite(const Options& opts) {
  Rng rng(opts.seed + 5);
  Tally t;
  std::vector<QParams> sets{reference_principal()};
  for (int i = 0; i < 3; ++i) sets.push_back(random_params(rng, true));
  for (const QParams& params : sets) {
    for (const Partition& lam : up_to(3)) {
      const PhiExpansion e = phi_limit_expansion(lam, params);
      t.expect(e.schur.coeff(lam) == Scalar(1), [&] { return "S_lambda coefficient is not 1 at " + lam.to_string(); });
      for (const auto& [nu, c] : e.schur.coeffs()) {
        t.expect(c.is_real(), [&] { return "non-real coefficient " + c.to_string() + " at nu=" + nu.to_string(); });
        t.expect(contains(lam, nu), [&] { return "coefficient outside lambda at nu=" + nu.to_string(); });
      }
    }
  }
  return {"realness", t.passed(), t.summary("Phi_lambda Schur coefficients are real with leading coefficient 1")};
}

Outcome unitriangularity_suite(const Options& opts) {
  Rng rng(opts.seed + 6);
  Tally t;
  for (const QParams& params : {reference_principal(), reference_complementary(), random_params(rng, false)}) {
    for (const Partition& lam : up_to(std::max(4, opts.max_size))) {
      const PhiExpansion e = phi_limit_expansion(lam, params);
      t.expect(e.schur.top() == std::optional<Partition>(lam),
               [&] { return "top term is not S_lambda at " + lam.to_string(); });
      t.expect(e.schur.coeff(lam) == Scalar(1), [&] { return "S_lambda coefficient is not 1 at " + lam.to_string(); });
      for (const auto& [nu, c] : e.schur.coeffs()) {
        t.expect(contains(lam, nu), [&] { return "coefficient outside lambda at nu=" + nu.to_string(); });
      }
    }
  }
  return {"unitriangularity", t.passed(), t.summary("only nu inside lambda occur, with S_lambda coefficient 1")};
}

Outcome symmetry_suite(const Options& opts) {
  Rng rng(opts.seed + 7);
  Tally t;
  for (int trial = 0; trial < 6; ++trial) {
    const QParams params = random_params(rng, trial % 2 == 0);
    for (int n = 1; n <= 3; ++n) {
      for (int l = 0; l <= 5; ++l) {
        const auto a = phi_univariate(l, params, params.c_for(n), params.d_for(n));
        const auto b = phi_univariate(l, params, params.d_for(n), params.c_for(n));
        t.expect(a.coeffs() == b.coeffs(), [&] { return "c<->d asymmetry at degree " + std::to_string(l); });
        t.expect(a.degree() == l && a.coeffs().back() == Scalar(1), [&] { return "phi_l not monic"; });
      }
    }
  }
  return {"symmetry", t.passed(), t.summary("phi_l is monic and symmetric under c <-> d")};
}

Outcome positivity_suite(const Options& opts) {
  Rng rng(opts.seed + 8);
  Tally t;
  for (int trial = 0; trial < 20; ++trial) {
    const QParams params = random_params(rng, trial % 2 == 0);
    for (const Partition& lam : up_to(4)) {
      const Scalar v = phi_limit_norm(lam, params);
      t.expect(v.is_real() && v.sign() > 0, [&] {
        return "norm " + v.to_string() + " at lambda=" + lam.to_string() + " (" + to_string(params.series) + ")";
      });
    }
  }
  return {"positivity", t.passed(), t.summary("limit norms strictly positive")};
}

// |r| in [q/2, 2q]
bool rate_ok(double ratio, double q) { return std::abs(ratio) >= q / 2 && std::abs(ratio) <= 2 * q; }

Outcome coefficient_rate_suite(const Options&) {
  Tally t;
  for (const QParams& params : {reference_principal(), reference_complementary()}) {
    const double q = params.ctx.q().get_d();
    for (const Partition& lam : up_to(3, 1)) {
      const SchurExpansion limit = phi_limit_expansion(lam, params).schur;
      for (const auto& [nu, c] : limit.coeffs()) {
        if (nu == lam) continue;
        Scalar prev;
        for (int n = 6; n <= 12; ++n) {
          const Scalar err = phi_finite_expansion(lam, n, params).coeff(nu) - c;
          if (n > 6) {
            const double r = (err / prev).to_double();
            t.expect(rate_ok(r, q), [&] {
              return "lambda=" + lam.to_string() + " nu=" + nu.to_string() + " N=" + std::to_string(n) +
                     " ratio " + std::to_string(r);
            });
          }
          prev = err;
        }
      }
    }
  }
  return {"coefficient_rate", t.passed(), t.summary("Schur coefficients of phi_{lambda|N} converge at rate q")};
}

Outcome norm_limit_suite(const Options&) {
  Tally t;
  for (const QParams& params : {reference_principal(), reference_complementary()}) {
    const double q = params.ctx.q().get_d();
    for (const Partition& lam : {Partition{1}, Partition{2}, Partition{1, 1}}) {
      for (const NormRow& row : norm_convergence_study(lam, 6, 12, params)) {
        if (row.n_vars == 6) continue;
        const double r = row.ratio ? row.ratio->to_double() : 0.0;
        t.expect(row.ratio && rate_ok(r, q), [&] {
          return to_string(params.series) + " lambda=" + lam.to_string() + " N=" + std::to_string(row.n_vars) +
                 " error ratio " + std::to_string(r);
        });
      }
    }
  }
  return {"norm_limit", t.passed(), t.summary("finite norms approach the limit norm with error ratio in [q/2, 2q]")};
}

double relative_offdiag(const GramMatrix& g) {
  double worst = 0.0;
  for (std::size_t a = 0; a < g.index.size(); ++a) {
    for (std::size_t b = 0; b < g.index.size(); ++b) {
      if (a == b) continue;
      const double scale = std::sqrt(g.values(a, a).to_double() * g.values(b, b).to_double());
      worst = std::max(worst, std::abs(g.values(a, b).to_double()) / scale);
    }
  }
  return worst;
}

std::vector<Partition> fitting(int max_size, int n_vars) {
  std::vector<Partition> out;
  for (const Partition& p : up_to(max_size)) {
    if (static_cast<int>(p.length()) <= n_vars) out.push_back(p);
  }
  return out;
}

Outcome orthogonality_suite(const Options&) {
  Tally t;
  const QParams params = reference_principal();
  std::ostringstream info;
  for (int n = 1; n <= 3; ++n) {
    const TruncatedLattice lat = truncate(params, n);
    const auto lambdas = fitting(3, n);
    const GramMatrix g = gram_bruteforce(lambdas, n, lat, Arithmetic::floating(256));
    const double off = relative_offdiag(g);
    t.expect(off <= 1e-8, [&] { return "N=" + std::to_string(n) + " off-diagonal " + std::to_string(off); });
    double diag = 0.0;
    for (std::size_t a = 0; a < lambdas.size(); ++a) {
      const double want = phi_finite_norm(lambdas[a], n, params).to_double();
      const double rel = std::abs(g.values(a, a).to_double() / want - 1.0);
      diag = std::max(diag, rel);
      t.expect(rel <= 1e-8, [&] { return "N=" + std::to_string(n) + " diagonal at " + lambdas[a].to_string(); });
    }
    info << "N=" << n << " K=" << lat.cut << " off " << off << " diag " << diag << (n < 3 ? ", " : "");
  }
  t.note(info.str());
  return {"orthogonality", t.passed(), t.summary("Gram matrices diagonal to 1e-8 with diagonals matching h-products")};
}

Outcome fastpath_suite(const Options& opts) {
  Rng rng(opts.seed + 9);
  Tally t;
  std::vector<std::pair<QParams, int>> sets{{reference_principal(), 8}, {reference_complementary(), 6}};
  for (int i = 0; i < 5; ++i) sets.emplace_back(random_params(rng, i % 2 == 0), static_cast<int>(uniform(rng, 3, 6)));
  for (const auto& [params, cut] : sets) {
    for (int n = 1; n <= 3; ++n) {
      const TruncatedLattice lat = truncate(params, n, cut);
      const auto lambdas = fitting(3, n);
      const GramMatrix b = gram_bruteforce(lambdas, n, lat, Arithmetic::exact());
      const GramMatrix a = gram_andreief(lambdas, n, lat, Arithmetic::exact());
      for (std::size_t i = 0; i < lambdas.size(); ++i) {
        for (std::size_t j = 0; j < lambdas.size(); ++j) {
          t.expect(a.values(i, j) == b.values(i, j), [&] {
            return "N=" + std::to_string(n) + " K=" + std::to_string(cut) + " entry (" + lambdas[i].to_string() +
                   ", " + lambdas[j].to_string() + ")";
          });
        }
      }
    }
  }
  return {"fastpath", t.passed(), t.summary("moment-determinant Gram equals configuration sums exactly")};
}

Outcome gram_suite(const Options& opts) {
  Rng rng(opts.seed + 10);
  Tally t;
  for (const QParams& params : {reference_principal(), random_params(rng, false)}) {
    for (int n = 1; n <= 2; ++n) {
      const TruncatedLattice lat = truncate(params, n, 4);
      const auto lambdas = fitting(2, n);
      const GramMatrix g = gram_bruteforce(lambdas, n, lat, Arithmetic::exact());
      t.expect(g.values(0, 0) == Scalar(1), [&] { return "G[-,-] != 1"; });
      for (std::size_t a = 0; a < lambdas.size(); ++a) {
        t.expect(g.values(a, a).sign() > 0, [&] { return "nonpositive diagonal"; });
        for (std::size_t b = 0; b < lambdas.size(); ++b) {
          t.expect(g.values(a, b) == g.values(b, a), [&] { return "Gram matrix not symmetric"; });
        }
      }
      const auto weights = weight_table(lat, n, Arithmetic::exact());
      const Scalar z = normalize(lat, n, Arithmetic::exact());
      Scalar total(0);
      for_each_configuration(lat.points.size(), static_cast<std::size_t>(n), [&](const Configuration& conf) {
        total += config_weight(conf, lat, weights, Arithmetic::exact()) / z;
      });
      t.expect(total == Scalar(1), [&] { return "probabilities do not sum to 1"; });
    }
  }
  return {"gram", t.passed(), t.summary("Gram matrices symmetric with positive diagonal; M_N sums to 1")};
}

Outcome truncation_suite(const Options&) {
  Tally t;
  const QParams params = reference_principal();
  const int n = 2;
  const auto lambdas = fitting(2, n);
  std::ostringstream info;
  double prev = -1.0;
  for (int cut : {8, 12, 16}) {
    const TruncatedLattice lat = truncate(params, n, cut);
    const double off = relative_offdiag(gram_bruteforce(lambdas, n, lat, Arithmetic::floating(256)));
    t.expect(off <= 10 * lat.tail_bound, [&] { return "off-diagonal exceeds 10 x tail bound at K=" + std::to_string(cut); });
    if (prev >= 0) t.expect(off < prev, [&] { return "off-diagonal did not shrink at K=" + std::to_string(cut); });
    prev = off;
    info << "K=" << cut << " off " << off << " bound " << lat.tail_bound << (cut < 16 ? ", " : "");
  }
  t.note(info.str());
  return {"truncation", t.passed(), t.summary("truncation residual bounded by the tail estimate and shrinking in K")};
}

Outcome moments_suite(const Options&) {
  Tally t;
  const QParams params = reference_principal();
  {
    const TruncatedLattice lat = truncate(params, 2, 4);
    const auto weights = weight_table(lat, 2, Arithmetic::exact());
    Scalar z(0), s1(0), s2(0), s11(0);
    for_each_configuration(lat.points.size(), 2, [&](const Configuration& c) {
      const Scalar w = config_weight(c, lat, weights, Arithmetic::exact());
      const Scalar& x = lat.points[c[0]];
      const Scalar& y = lat.points[c[1]];
      z += w;
      s1 += w * (x + y);
      s2 += w * (x * x + x * y + y * y);
      s11 += w * x * y;
    });
    t.expect(schur_moment(Partition{1}, 2, lat, Arithmetic::exact()) == s1 / z, [] { return "moment of S_(1)"; });
    t.expect(schur_moment(Partition{2}, 2, lat, Arithmetic::exact()) == s2 / z, [] { return "moment of S_(2)"; });
    t.expect(schur_moment(Partition{1, 1}, 2, lat, Arithmetic::exact()) == s11 / z, [] { return "moment of S_(1,1)"; });
  }
  for (const Partition& nu : {Partition{1}, Partition{2}, Partition{1, 1}}) {
    std::vector<double> m;
    for (int n = 1; n <= 9; ++n) m.push_back(schur_moment(nu, n, truncate(params, n), Arithmetic::floating()).to_double());
    for (std::size_t k = 3; k < m.size(); ++k) {
      const double ratio = std::abs((m[k] - m[k - 1]) / (m[k - 1] - m[k - 2]));
      t.expect(ratio < 0.9, [&] { return "Cauchy differences not shrinking for nu=" + nu.to_string(); });
    }
  }
  return {"moments", t.passed(), t.summary("Schur moments of M_N converge geometrically in N")};
}

Outcome exceptional_suite(const Options&) {
  Tally t;
  const QParams params = classify(Rational(1, 2), Rational(1), Rational(-3), Scalar(0), Scalar(0));
  const auto rows = concentration_diagnostic({2, 4, 6}, params, 8, Arithmetic::exact());
  std::ostringstream info;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    info << "gap(" << rows[i].n_vars << ")=" << rows[i].gap.to_double() << (i + 1 < rows.size() ? ", " : "");
    if (i > 0) {
      t.expect(rows[i].gap < rows[i - 1].gap, [&] { return "gap did not decrease at N=" + std::to_string(rows[i].n_vars); });
    }
  }
  const auto full = concentration_diagnostic({16}, params, 8, Arithmetic::exact());
  t.expect(full.front().gap.is_zero(), [] { return "gap at full packing is not 0"; });
  for (const Partition& lam : up_to(4)) {
    const Scalar v = phi_limit_norm(lam, params);
    t.expect(v == Scalar(lam.empty() ? 1 : 0), [&] { return "limit norm at " + lam.to_string() + " is " + v.to_string(); });
  }
  t.note(info.str());
  return {"exceptional", t.passed(), t.summary("gap to the outermost configuration shrinks; limit norms vanish")};
}

using SuiteFn = Outcome (*)(const Options&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r{
      {"scalar", scalar_suite},
      {"partition", partition_suite},
      {"qseries", qseries_suite},
      {"golden", golden_suite},
      {"vanishing", vanishing_suite},
      {"normalization", normalization_suite},
      {"agreement", agreement_suite},
      {"projective", projective_suite},
      {"stability", stability_suite},
      {"newton", newton_suite},
      {"expansion", expansion_suite},
      {"realness", realness_suite},
      {"unitriangularity", unitriangularity_suite},
      {"symmetry", symmetry_suite},
      {"positivity", positivity_suite},
      {"coefficient_rate", coefficient_rate_suite},
      {"norm_limit", norm_limit_suite},
      {"gram", gram_suite},
      {"fastpath", fastpath_suite},
      {"truncation", truncation_suite},
      {"moments", moments_suite},
      {"orthogonality", orthogonality_suite},
      {"exceptional", exceptional_suite},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

std::vector<Outcome> run(const std::string& suite, const Options& opts) {
  std::vector<Outcome> out;
  for (const auto& [name, fn] : registry()) {
    if (suite != "all" && suite != name) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = fn(opts);
    } catch (const std::exception& e) {
      o = {name, false, std::string("raised: ") + e.what()};
    }
    o.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.push_back(std::move(o));
  }
  if (out.empty()) throw std::invalid_argument("unknown suite '" + suite + "'");
  return out;
}

}  // namespace qjsf::verify
