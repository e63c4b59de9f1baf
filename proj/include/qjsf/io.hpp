#pragma once

// JSON and CSV forms of the library's results.

#include <string>
#include <vector>

#include <json.hpp>

#include "qjsf/bigq.hpp"
#include "qjsf/interp.hpp"
#include "qjsf/measure.hpp"

namespace qjsf::io {

using Json = nlohmann::ordered_json;

/// Exact values as "p/q" or "a+bi" strings; floats in scientific notation.
Json scalar_json(const Scalar& value);
Scalar scalar_from_json(const Json& value, unsigned float_bits = 0);

/// {"basis":"schur","coeffs":[{"index":"2,1","value":"-3/4"}, ...]} in graded order.
Json expansion_json(const SchurExpansion& e, const std::string& basis = "schur");
SchurExpansion expansion_from_json(const Json& j, unsigned float_bits = 0);

/// {"basis":"interp","coeffs":[...]} for coefficients on I_mu(X gamma).
Json interp_coeffs_json(const std::map<Partition, Scalar>& coeffs);

Json params_json(const QParams& params);

Json gram_json(const GramMatrix& g);

/// Rows "lambda,mu,value_re,value_im,tail_bound".
std::string csv_header();
std::string csv_row(const std::string& lambda, const std::string& mu, const Scalar& value, double tail_bound);
std::string gram_csv(const GramMatrix& g);

/// Real and imaginary parts as strings ("0" imaginary part for real kinds).
std::pair<std::string, std::string> re_im(const Scalar& value);

}  // namespace qjsf::io
