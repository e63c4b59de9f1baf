#include <CLI11.hpp>

#include <iomanip>
#include <iostream>
#include <sstream>

#include "qjsf/bigq.hpp"
#include "qjsf/interp.hpp"
#include "qjsf/io.hpp"
#include "qjsf/measure.hpp"
#include "qjsf/verify.hpp"

using namespace qjsf;
using io::Json;

namespace {

struct Flags {
  std::string q = "1/2";
  std::string alpha = "1";
  std::string beta = "-1";
  std::string gamma;
  std::string delta;
  std::string mu = "-";
  std::string lambda = "-";
  std::string nu = "-";
  std::string x;
  std::string n_list;
  int n_vars = 0;
  int cut = 0;
  int max_size = 3;
  std::string format = "pretty";
  bool use_float = false;
  unsigned precision = kDefaultPrecisionBits;
  double tail_tol = 1e-14;
  std::uint64_t seed = verify::Options{}.seed;
  std::string suite = "all";
  std::string method = "andreief";
};

Rational parse_q(const Flags& f) {
  const Scalar q = Scalar::parse(f.q);
  if (q.kind() != Kind::rational) throw InadmissibleParameters("q must be a rational number in (0, 1)");
  QContext ctx(q.rational());
  return ctx.q();
}

Rational parse_rational_flag(const std::string& text, const std::string& name) {
  const Scalar v = Scalar::parse(text).to_real();
  if (v.kind() != Kind::rational) throw ParseError("--" + name + " must be rational");
  return v.rational();
}

QParams parse_params(const Flags& f, bool allow_exceptional_default) {
  const std::string g = f.gamma.empty() && allow_exceptional_default ? "0" : f.gamma;
  const std::string d = f.delta.empty() ? (g.empty() ? "" : Scalar::parse(g).conj().to_string()) : f.delta;
  if (g.empty()) throw ParseError("--gamma is required");
  return classify(parse_q(f), parse_rational_flag(f.alpha, "alpha"), parse_rational_flag(f.beta, "beta"),
                  Scalar::parse(g), Scalar::parse(d));
}

std::vector<Scalar> parse_points(const std::string& text) {
  std::vector<Scalar> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(Scalar::parse(item));
  return out;
}

std::vector<int> parse_ints(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
  return out;
}

Scalar present(const Scalar& v, const Flags& f) {
  if (!f.use_float || !v.is_exact()) return v;
  return v.is_real() ? v.to_real().to_float(f.precision) : v;
}

Json value_json(const Scalar& v, const Flags& f) { return io::scalar_json(present(v, f)); }

Json expansion_json(const SchurExpansion& e, const Flags& f) {
  SchurExpansion shown;
  for (const auto& [nu, c] : e.coeffs()) shown.add(nu, present(c, f));
  return io::expansion_json(shown);
}

void emit_expansion(const SchurExpansion& e, const Flags& f, Json head, const std::string& title) {
  if (f.format == "json") {
    head["expansion"] = expansion_json(e, f);
    std::cout << head.dump(2) << '\n';
  } else if (f.format == "csv") {
    std::cout << io::csv_header() << '\n';
    for (const auto& [nu, c] : e.coeffs()) std::cout << io::csv_row(nu.to_string(), "", present(c, f), 0.0) << '\n';
  } else {
    if (head.contains("params")) std::cout << "series: " << head["params"]["series"].get<std::string>() << '\n';
    std::cout << title << '\n';
    for (const auto& [nu, c] : e.coeffs()) {
      std::cout << "  S_" << std::left << std::setw(10) << ("(" + nu.to_string() + ")") << present(c, f) << '\n';
    }
  }
}

void emit_value(const std::string& label, const Scalar& v, const Flags& f, Json head) {
  if (f.format == "json") {
    head["value"] = value_json(v, f);
    std::cout << head.dump(2) << '\n';
  } else if (f.format == "csv") {
    std::cout << io::csv_header() << '\n'
              << io::csv_row(head.value("lambda", head.value("mu", "")), head.value("nu", ""), present(v, f), 0.0)
              << '\n';
  } else {
    if (head.contains("params")) std::cout << "series: " << head["params"]["series"].get<std::string>() << '\n';
    std::cout << label << " = " << present(v, f) << '\n';
  }
}

Json q_head(const Flags& f) { return {{"q", parse_q(f).get_str()}}; }

Json params_head(const QParams& p) { return {{"params", io::params_json(p)}}; }

int run_verify(const Flags& f) {
  verify::Options opts;
  opts.q = parse_q(f);
  opts.max_size = f.max_size;
  opts.seed = f.seed;
  const auto outcomes = verify::run(f.suite, opts);
  bool ok = true;
  Json arr = Json::array();
  for (const auto& o : outcomes) {
    ok = ok && o.passed;
    arr.push_back({{"suite", o.suite}, {"passed", o.passed}, {"detail", o.detail}, {"seconds", o.seconds}});
    if (f.format == "pretty") {
      std::cout << (o.passed ? "PASS " : "FAIL ") << std::left << std::setw(18) << o.suite << o.detail << " ["
                << std::fixed << std::setprecision(2) << o.seconds << "s]\n";
    }
  }
  if (f.format == "json") std::cout << Json{{"suites", arr}, {"passed", ok}}.dump(2) << '\n';
  if (f.format == "csv") {
    std::cout << "suite,passed,seconds,detail\n";
    for (const auto& o : outcomes) std::cout << o.suite << ',' << o.passed << ',' << o.seconds << ",\"" << o.detail << "\"\n";
  }
  return ok ? 0 : 1;
}

int run_gram(const Flags& f) {
  const QParams p = parse_params(f, false);
  if (f.n_vars < 1) throw ParseError("--N must be at least 1");
  const TruncatedLattice lat = truncate(p, f.n_vars, f.cut, f.tail_tol);
  std::vector<Partition> lambdas;
  for (const Partition& l : enumerate_partitions(f.max_size)) {
    if (static_cast<int>(l.length()) <= f.n_vars) lambdas.push_back(l);
  }
  const Arithmetic arith = f.use_float ? Arithmetic::floating(f.precision) : Arithmetic::exact();
  GramMatrix g;
  if (f.method == "brute") {
    g = gram_bruteforce(lambdas, f.n_vars, lat, arith);
  } else if (f.method == "andreief") {
    g = gram_andreief(lambdas, f.n_vars, lat, arith);
  } else {
    throw ParseError("--method must be brute or andreief");
  }
  if (f.format == "json") {
    Json out = params_head(p);
    out["N"] = f.n_vars;
    out["K"] = lat.cut;
    out["gram"] = io::gram_json(g);
    std::cout << out.dump(2) << '\n';
  } else if (f.format == "csv") {
    std::cout << io::gram_csv(g);
  } else {
    std::cout << "series: " << to_string(p.series) << "\nN = " << f.n_vars << ", K = " << lat.cut
              << ", tail bound = " << g.tail_bound << '\n';
    for (std::size_t a = 0; a < lambdas.size(); ++a) {
      for (std::size_t b = 0; b < lambdas.size(); ++b) {
        std::cout << "  G[" << lambdas[a].to_string() << ", " << lambdas[b].to_string() << "] = " << g.values(a, b)
                  << '\n';
      }
    }
  }
  return 0;
}

int run_converge(const Flags& f) {
  const QParams p = parse_params(f, false);
  const Partition lambda = Partition::parse(f.lambda);
  const int n_max = f.n_vars > 0 ? f.n_vars : 12;
  const auto rows = norm_convergence_study(lambda, 1, n_max, p);
  if (f.format == "json") {
    Json arr = Json::array();
    for (const auto& r : rows) {
      arr.push_back({{"N", r.n_vars},
                     {"finite", value_json(r.finite, f)},
                     {"limit", value_json(r.limit, f)},
                     {"error", value_json(r.error, f)},
                     {"relative_error", (r.error / r.limit).to_double()},
                     {"ratio", r.ratio ? Json(r.ratio->to_double()) : Json(nullptr)}});
    }
    Json out = params_head(p);
    out["lambda"] = lambda.to_string();
    out["rows"] = arr;
    std::cout << out.dump(2) << '\n';
  } else {
    if (f.format == "pretty") std::cout << "series: " << to_string(p.series) << '\n';
    std::cout << "N,finite,limit,relative_error,ratio\n";
    for (const auto& r : rows) {
      std::cout << r.n_vars << ',' << r.finite.to_double() << ',' << r.limit.to_double() << ','
                << (r.error / r.limit).to_double() << ',' << (r.ratio ? std::to_string(r.ratio->to_double()) : "")
                << '\n';
    }
  }
  return 0;
}

int run_concentrate(const Flags& f) {
  const QParams p = parse_params(f, true);
  const std::vector<int> ns = f.n_list.empty() ? std::vector<int>{2, 4, 6} : parse_ints(f.n_list);
  const Arithmetic arith = f.use_float ? Arithmetic::floating(f.precision) : Arithmetic::exact();
  const auto rows = concentration_diagnostic(ns, p, f.cut > 0 ? f.cut : 8, arith);
  if (f.format == "json") {
    Json arr = Json::array();
    for (const auto& r : rows) {
      Json pts = Json::array();
      for (const Scalar& x : r.argmax) pts.push_back(io::scalar_json(x));
      arr.push_back({{"N", r.n_vars},
                     {"mean", value_json(r.mean, f)},
                     {"target", value_json(r.target, f)},
                     {"gap", value_json(r.gap, f)},
                     {"argmax", pts},
                     {"argmax_probability", value_json(r.argmax_probability, f)}});
    }
    Json out = params_head(p);
    out["rows"] = arr;
    std::cout << out.dump(2) << '\n';
  } else {
    if (f.format == "pretty") std::cout << "series: " << to_string(p.series) << '\n';
    std::cout << "N,mean,target,gap,argmax_probability\n";
    for (const auto& r : rows) {
      std::cout << r.n_vars << ',' << r.mean.to_double() << ',' << r.target.to_double() << ',' << r.gap.to_double()
                << ',' << r.argmax_probability.to_double() << '\n';
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Interpolation symmetric functions and big q-Jacobi polynomials"};
  app.require_subcommand(1);
  Flags f;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--q", f.q, "base q in (0,1), rational")->capture_default_str();
    sub->add_option("--format", f.format, "json, csv or pretty")
        ->check(CLI::IsMember({"json", "csv", "pretty"}))
        ->capture_default_str();
    sub->add_flag("--float", f.use_float, "print floats instead of exact rationals");
    sub->add_option("--precision", f.precision, "float precision in bits")->capture_default_str();
  };
  auto add_params = [&](CLI::App* sub) {
    sub->add_option("--alpha", f.alpha, "alpha > 0")->capture_default_str();
    sub->add_option("--beta", f.beta, "beta < 0")->capture_default_str();
    sub->add_option("--gamma", f.gamma, "gamma, rational or a/b+c/di");
    sub->add_option("--delta", f.delta, "delta (defaults to conj(gamma))");
  };

  auto* sigma_cmd = app.add_subcommand("sigma", "Schur coefficient sigma(mu, nu) of I_mu");
  add_common(sigma_cmd);
  sigma_cmd->add_option("--mu", f.mu)->required();
  sigma_cmd->add_option("--nu", f.nu)->required();

  auto* interp_cmd = app.add_subcommand("interp", "Schur expansion of I_mu (or I_{mu|N} with --N)");
  add_common(interp_cmd);
  interp_cmd->add_option("--mu", f.mu)->required();
  interp_cmd->add_option("--N", f.n_vars, "number of variables (0 = the symmetric function)");

  auto* hnorm_cmd = app.add_subcommand("hnorm", "normalization H(mu; q) = I_mu(X(mu))");
  add_common(hnorm_cmd);
  hnorm_cmd->add_option("--mu", f.mu)->required();

  auto* eval_cmd = app.add_subcommand("eval", "evaluate I_{mu|N} three ways at --x or at X_N(lambda)");
  add_common(eval_cmd);
  eval_cmd->add_option("--mu", f.mu)->required();
  eval_cmd->add_option("--x", f.x, "comma-separated coordinates");
  eval_cmd->add_option("--lambda", f.lambda, "evaluate at the node X_N(lambda)");
  eval_cmd->add_option("--N", f.n_vars);

  auto* rho_cmd = app.add_subcommand("rho", "coefficient rho(lambda, mu) of Phi_lambda on I_mu(X gamma)");
  add_common(rho_cmd);
  add_params(rho_cmd);
  rho_cmd->add_option("--lambda", f.lambda)->required();
  rho_cmd->add_option("--mu", f.mu)->required();

  auto* phi_cmd = app.add_subcommand("phi", "Schur expansion of Phi_lambda (or phi_{lambda|N} with --N)");
  add_common(phi_cmd);
  add_params(phi_cmd);
  phi_cmd->add_option("--lambda", f.lambda)->required();
  phi_cmd->add_option("--N", f.n_vars);

  auto* phinorm_cmd = app.add_subcommand("phinorm", "squared norm of Phi_lambda (or phi_{lambda|N} with --N)");
  add_common(phinorm_cmd);
  add_params(phinorm_cmd);
  phinorm_cmd->add_option("--lambda", f.lambda)->required();
  phinorm_cmd->add_option("--N", f.n_vars);

  auto* gram_cmd = app.add_subcommand("gram", "Gram matrix of phi_{lambda|N}, |lambda| <= --max-size");
  add_common(gram_cmd);
  add_params(gram_cmd);
  gram_cmd->add_option("--N", f.n_vars)->required();
  gram_cmd->add_option("--K", f.cut, "lattice cut (0 = default tail rule)");
  gram_cmd->add_option("--max-size", f.max_size)->capture_default_str();
  gram_cmd->add_option("--tail-tol", f.tail_tol, "single-point tail tolerance for the default cut")->capture_default_str();
  gram_cmd->add_option("--method", f.method, "brute or andreief")->capture_default_str();

  auto* converge_cmd = app.add_subcommand("converge", "finite-N norms against the limit norm");
  add_common(converge_cmd);
  add_params(converge_cmd);
  converge_cmd->add_option("--lambda", f.lambda)->required();
  converge_cmd->add_option("--N", f.n_vars, "largest N (default 12)");

  auto* concentrate_cmd = app.add_subcommand("concentrate", "exceptional-case concentration diagnostic");
  add_common(concentrate_cmd);
  add_params(concentrate_cmd);
  concentrate_cmd->add_option("--N", f.n_list, "comma-separated N values (default 2,4,6)");
  concentrate_cmd->add_option("--K", f.cut, "lattice cut (default 8)");

  auto* verify_cmd = app.add_subcommand("verify", "run property suites");
  add_common(verify_cmd);
  verify_cmd->add_option("--suite", f.suite, "suite name or all")->capture_default_str();
  verify_cmd->add_option("--max-size", f.max_size, "largest |mu| for the interpolation suites");
  verify_cmd->add_option("--seed", f.seed, "seed for random sweeps")->capture_default_str();
  verify_cmd->callback([&] {
    if (verify_cmd->count("--max-size") == 0) f.max_size = verify::Options{}.max_size;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*sigma_cmd) {
      const QContext ctx(parse_q(f));
      const Partition mu = Partition::parse(f.mu), nu = Partition::parse(f.nu);
      Json head = q_head(f);
      head["mu"] = mu.to_string();
      head["nu"] = nu.to_string();
      emit_value("sigma(" + mu.to_string() + ", " + nu.to_string() + ")", sigma(mu, nu, ctx), f, head);
    } else if (*interp_cmd) {
      const QContext ctx(parse_q(f));
      const Partition mu = Partition::parse(f.mu);
      Json head = q_head(f);
      head["mu"] = mu.to_string();
      if (f.n_vars > 0) head["N"] = f.n_vars;
      const SchurExpansion e = f.n_vars > 0 ? interp_poly_expansion(mu, f.n_vars, ctx) : interp_expansion(mu, ctx);
      emit_expansion(e, f, head, "I_(" + mu.to_string() + ")" + (f.n_vars > 0 ? "|" + std::to_string(f.n_vars) : ""));
    } else if (*hnorm_cmd) {
      const QContext ctx(parse_q(f));
      const Partition mu = Partition::parse(f.mu);
      Json head = q_head(f);
      head["mu"] = mu.to_string();
      emit_value("H(" + mu.to_string() + ")", h_norm(mu, ctx), f, head);
    } else if (*eval_cmd) {
      const QContext ctx(parse_q(f));
      const Partition mu = Partition::parse(f.mu);
      std::vector<Scalar> xs;
      if (!f.x.empty()) {
        xs = parse_points(f.x);
      } else {
        if (f.n_vars < 1) throw ParseError("eval needs --x or --N (with optional --lambda)");
        xs = node_vector(Partition::parse(f.lambda), f.n_vars, ctx.q());
      }
      const int n = static_cast<int>(xs.size());
      const Scalar d = interp_poly_det(mu, xs, ctx);
      const Scalar c = interp_combinatorial(mu, xs, ctx);
      const Scalar s = interp_poly_expansion(mu, n, ctx).evaluate(xs);
      if (f.format == "json") {
        Json pts = Json::array();
        for (const Scalar& x : xs) pts.push_back(io::scalar_json(x));
        Json out = q_head(f);
        out["mu"] = mu.to_string();
        out["x"] = pts;
        out["determinant"] = value_json(d, f);
        out["tableaux"] = value_json(c, f);
        out["schur"] = value_json(s, f);
        out["agree"] = d == c && c == s;
        std::cout << out.dump(2) << '\n';
      } else {
        std::cout << "determinant = " << present(d, f) << "\ntableaux    = " << present(c, f)
                  << "\nschur       = " << present(s, f) << '\n';
      }
    } else if (*rho_cmd) {
      const QParams p = parse_params(f, false);
      const Partition lambda = Partition::parse(f.lambda), mu = Partition::parse(f.mu);
      Json head = params_head(p);
      head["lambda"] = lambda.to_string();
      head["mu"] = mu.to_string();
      emit_value("rho(" + lambda.to_string() + ", " + mu.to_string() + ")", rho(lambda, mu, p), f, head);
    } else if (*phi_cmd) {
      const QParams p = parse_params(f, false);
      const Partition lambda = Partition::parse(f.lambda);
      Json head = params_head(p);
      head["lambda"] = lambda.to_string();
      if (f.n_vars > 0) {
        head["N"] = f.n_vars;
        emit_expansion(phi_finite_expansion(lambda, f.n_vars, p), f, head,
                       "phi_(" + lambda.to_string() + ")|" + std::to_string(f.n_vars));
      } else {
        const PhiExpansion e = phi_limit_expansion(lambda, p);
        if (f.format == "json") head["interp"] = io::interp_coeffs_json(e.interp);
        emit_expansion(e.schur, f, head, "Phi_(" + lambda.to_string() + ")");
      }
    } else if (*phinorm_cmd) {
      const QParams p = parse_params(f, true);
      const Partition lambda = Partition::parse(f.lambda);
      Json head = params_head(p);
      head["lambda"] = lambda.to_string();
      if (f.n_vars > 0) {
        head["N"] = f.n_vars;
        emit_value("||phi_(" + lambda.to_string() + ")|" + std::to_string(f.n_vars) + "||^2",
                   phi_finite_norm(lambda, f.n_vars, p), f, head);
      } else {
        emit_value("||Phi_(" + lambda.to_string() + ")||^2", phi_limit_norm(lambda, p), f, head);
      }
    } else if (*gram_cmd) {
      return run_gram(f);
    } else if (*converge_cmd) {
      return run_converge(f);
    } else if (*concentrate_cmd) {
      return run_concentrate(f);
    } else if (*verify_cmd) {
      return run_verify(f);
    }
  } catch (const InadmissibleParameters& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
