#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qjsf/bigq.hpp"
#include "qjsf/interp.hpp"
#include "qjsf/measure.hpp"
#include "qjsf/verify.hpp"

namespace py = pybind11;
using namespace qjsf;

namespace {

Partition to_partition(const py::object& obj) {
  if (py::isinstance<py::str>(obj)) return Partition::parse(obj.cast<std::string>());
  return Partition(obj.cast<std::vector<int>>());
}

Scalar to_scalar(const py::object& obj) {
  if (py::isinstance<py::int_>(obj)) return Scalar(Rational(obj.cast<long>()));
  return Scalar::parse(py::str(obj).cast<std::string>());
}

Rational to_rational(const py::object& obj) {
  const Scalar v = to_scalar(obj).to_real();
  if (v.kind() != Kind::rational) throw ParseError("expected a rational value");
  return v.rational();
}

QContext to_ctx(const py::object& q) { return QContext(to_rational(q)); }

py::dict expansion_dict(const SchurExpansion& e) {
  py::dict out;
  for (const auto& [nu, c] : e.coeffs()) out[py::str(nu.to_string())] = c.to_string();
  return out;
}

}  // namespace

PYBIND11_MODULE(_qjsf, m) {
  m.doc() = "Interpolation symmetric functions and big q-Jacobi polynomials with exact arithmetic";

  // later registrations are tried first, so the subclass goes last
  py::register_exception<Error>(m, "QjsfError", PyExc_RuntimeError);
  py::register_exception<InadmissibleParameters>(m, "InadmissibleParameters", PyExc_ValueError);

  py::class_<QParams>(m, "Params")
      .def(py::init([](const py::object& q, const py::object& alpha, const py::object& beta, const py::object& gamma,
                       const py::object& delta) {
             return classify(to_rational(q), to_rational(alpha), to_rational(beta), to_scalar(gamma),
                             to_scalar(delta));
           }),
           py::arg("q"), py::arg("alpha"), py::arg("beta"), py::arg("gamma"), py::arg("delta"))
      .def_property_readonly("series", [](const QParams& p) { return to_string(p.series); })
      .def_property_readonly("s", [](const QParams& p) { return p.s().to_string(); })
      .def("__repr__", [](const QParams& p) {
        return "Params(q=" + p.ctx.q().get_str() + ", alpha=" + p.alpha.get_str() + ", beta=" + p.beta.get_str() +
               ", gamma=" + p.gamma.to_string() + ", delta=" + p.delta.to_string() + ", series=" +
               to_string(p.series) + ")";
      });

  m.def("sigma", [](const py::object& mu, const py::object& nu, const py::object& q) {
    return sigma(to_partition(mu), to_partition(nu), to_ctx(q)).to_string();
  }, py::arg("mu"), py::arg("nu"), py::arg("q"));

  m.def("interp_expansion", [](const py::object& mu, const py::object& q, int n_vars) {
    const QContext ctx = to_ctx(q);
    return expansion_dict(n_vars > 0 ? interp_poly_expansion(to_partition(mu), n_vars, ctx)
                                     : interp_expansion(to_partition(mu), ctx));
  }, py::arg("mu"), py::arg("q"), py::arg("N") = 0);

  m.def("h_norm", [](const py::object& mu, const py::object& q) {
    return h_norm(to_partition(mu), to_ctx(q)).to_string();
  }, py::arg("mu"), py::arg("q"));

  m.def("interp_eval", [](const py::object& mu, const std::vector<py::object>& xs, const py::object& q) {
    const QContext ctx = to_ctx(q);
    const Partition p = to_partition(mu);
    std::vector<Scalar> pts;
    for (const auto& x : xs) pts.push_back(to_scalar(x));
    py::dict out;
    out["determinant"] = interp_poly_det(p, pts, ctx).to_string();
    out["tableaux"] = interp_combinatorial(p, pts, ctx).to_string();
    out["schur"] = interp_poly_expansion(p, static_cast<int>(pts.size()), ctx).evaluate(pts).to_string();
    return out;
  }, py::arg("mu"), py::arg("x"), py::arg("q"));

  m.def("node_vector", [](const py::object& lambda, int n_vars, const py::object& q) {
    std::vector<std::string> out;
    for (const Scalar& x : node_vector(to_partition(lambda), n_vars, to_rational(q))) out.push_back(x.to_string());
    return out;
  }, py::arg("lambda_"), py::arg("N"), py::arg("q"));

  m.def("rho", [](const py::object& lambda, const py::object& mu, const QParams& p) {
    return rho(to_partition(lambda), to_partition(mu), p).to_string();
  }, py::arg("lambda_"), py::arg("mu"), py::arg("params"));

  m.def("phi_expansion", [](const py::object& lambda, const QParams& p, int n_vars) {
    const Partition l = to_partition(lambda);
    return expansion_dict(n_vars > 0 ? phi_finite_expansion(l, n_vars, p) : phi_limit_expansion(l, p).schur);
  }, py::arg("lambda_"), py::arg("params"), py::arg("N") = 0);

  m.def("phi_eval", [](const py::object& lambda, const std::vector<py::object>& xs, const QParams& p) {
    std::vector<Scalar> pts;
    for (const auto& x : xs) pts.push_back(to_scalar(x));
    return phi_multivariate_det(to_partition(lambda), pts, p).to_string();
  }, py::arg("lambda_"), py::arg("x"), py::arg("params"));

  m.def("phi_norm", [](const py::object& lambda, const QParams& p, int n_vars) {
    const Partition l = to_partition(lambda);
    return (n_vars > 0 ? phi_finite_norm(l, n_vars, p) : phi_limit_norm(l, p)).to_string();
  }, py::arg("lambda_"), py::arg("params"), py::arg("N") = 0);

  m.def("gram", [](const QParams& p, int n_vars, int cut, int max_size, bool use_float, const std::string& method) {
    std::vector<Partition> lambdas;
    for (const Partition& l : enumerate_partitions(max_size)) {
      if (static_cast<int>(l.length()) <= n_vars) lambdas.push_back(l);
    }
    const TruncatedLattice lat = truncate(p, n_vars, cut);
    const Arithmetic arith = use_float ? Arithmetic::floating() : Arithmetic::exact();
    if (method != "brute" && method != "andreief") throw ParseError("method must be 'brute' or 'andreief'");
    const GramMatrix g = method == "brute" ? gram_bruteforce(lambdas, n_vars, lat, arith)
                                           : gram_andreief(lambdas, n_vars, lat, arith);
    std::vector<std::string> index;
    std::vector<std::vector<std::string>> values(lambdas.size());
    for (std::size_t a = 0; a < lambdas.size(); ++a) {
      index.push_back(lambdas[a].to_string());
      for (std::size_t b = 0; b < lambdas.size(); ++b) values[a].push_back(g.values(a, b).to_string());
    }
    py::dict out;
    out["index"] = index;
    out["values"] = values;
    out["K"] = lat.cut;
    out["tail_bound"] = g.tail_bound;
    return out;
  }, py::arg("params"), py::arg("N"), py::arg("K") = 0, py::arg("max_size") = 2, py::arg("use_float") = false,
     py::arg("method") = "andreief");

  m.def("verify", [](const std::string& suite, const py::object& q, int max_size, std::uint64_t seed) {
    verify::Options opts;
    opts.q = to_rational(q);
    opts.max_size = max_size;
    opts.seed = seed;
    py::list out;
    for (const auto& o : verify::run(suite, opts)) {
      py::dict d;
      d["suite"] = o.suite;
      d["passed"] = o.passed;
      d["detail"] = o.detail;
      d["seconds"] = o.seconds;
      out.append(d);
    }
    return out;
  }, py::arg("suite"), py::arg("q") = "1/2", py::arg("max_size") = 4, py::arg("seed") = verify::Options{}.seed);

  m.def("suite_names", [] { return verify::suite_names(); });
}
