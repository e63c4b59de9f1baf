#include "qjsf/io.hpp"

#include <sstream>

namespace qjsf::io {

Json scalar_json(const Scalar& value) { return value.to_string(); }

Scalar scalar_from_json(const Json& value, unsigned float_bits) {
  if (!value.is_string()) throw ParseError("scalar values are serialized as strings");
  return Scalar::parse(value.get<std::string>(), float_bits);
}

Json expansion_json(const SchurExpansion& e, const std::string& basis) {
  Json coeffs = Json::array();
  for (const auto& [nu, c] : e.coeffs()) coeffs.push_back({{"index", nu.to_string()}, {"value", scalar_json(c)}});
  return {{"basis", basis}, {"coeffs", std::move(coeffs)}};
}

SchurExpansion expansion_from_json(const Json& j, unsigned float_bits) {
  if (!j.contains("basis") || j.at("basis") != "schur") throw ParseError("expected a Schur-basis expansion");
  SchurExpansion e;
  for (const Json& entry : j.at("coeffs")) {
    e.add(Partition::parse(entry.at("index").get<std::string>()), scalar_from_json(entry.at("value"), float_bits));
  }
  return e;
}

Json interp_coeffs_json(const std::map<Partition, Scalar>& coeffs) {
  Json arr = Json::array();
  for (const auto& [mu, c] : coeffs) arr.push_back({{"index", mu.to_string()}, {"value", scalar_json(c)}});
  return {{"basis", "interp"}, {"coeffs", std::move(arr)}};
}

Json params_json(const QParams& params) {
  return {{"q", params.ctx.q().get_str()},
          {"alpha", params.alpha.get_str()},
          {"beta", params.beta.get_str()},
          {"gamma", scalar_json(params.gamma)},
          {"delta", scalar_json(params.delta)},
          {"series", to_string(params.series)}};
}

Json gram_json(const GramMatrix& g) {
  Json entries = Json::array();
  for (std::size_t a = 0; a < g.index.size(); ++a) {
    for (std::size_t b = 0; b < g.index.size(); ++b) {
      entries.push_back({{"lambda", g.index[a].to_string()},
                         {"mu", g.index[b].to_string()},
                         {"value", scalar_json(g.values(a, b))}});
    }
  }
  return {{"entries", std::move(entries)}, {"tail_bound", g.tail_bound}};
}

std::pair<std::string, std::string> re_im(const Scalar& value) {
  if (value.kind() == Kind::gaussian) {
    const Gaussian g = value.as_gaussian();
    return {Scalar(g.re).to_string(), Scalar(g.im).to_string()};
  }
  return {value.to_string(), "0"};
}

std::string csv_header() { return "lambda,mu,value_re,value_im,tail_bound"; }

std::string csv_row(const std::string& lambda, const std::string& mu, const Scalar& value, double tail_bound) {
  const auto [re, im] = re_im(value);
  std::ostringstream out;
  out << '"' << lambda << "\",\"" << mu << "\"," << re << ',' << im << ',' << tail_bound;
  return out.str();
}

std::string gram_csv(const GramMatrix& g) {
  std::ostringstream out;
  out << csv_header() << '\n';
  for (std::size_t a = 0; a < g.index.size(); ++a) {
    for (std::size_t b = 0; b < g.index.size(); ++b) {
      out << csv_row(g.index[a].to_string(), g.index[b].to_string(), g.values(a, b), g.tail_bound) << '\n';
    }
  }
  return out.str();
}

}  // namespace qjsf::io
