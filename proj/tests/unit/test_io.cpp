#include <doctest.h>

#include "qjsf/io.hpp"

using namespace qjsf;

TEST_CASE("scalar JSON") {
  CHECK(io::scalar_json(Scalar(-3, 4)) == "-3/4");
  const Scalar z = Scalar::gaussian(Rational(1, 5), Rational(-1, 7));
  CHECK(io::scalar_from_json(io::scalar_json(z)) == z);
  CHECK(io::scalar_from_json(io::Json("5")) == Scalar(5));
  CHECK_THROWS_AS(io::scalar_from_json(io::Json(5)), ParseError);
  const Scalar f = Scalar(1, 3).to_float(128);
  CHECK(io::scalar_from_json(io::scalar_json(f), 128).to_double() == doctest::Approx(1.0 / 3));
}

TEST_CASE("expansion JSON round trip") {
  const QContext ctx(Rational(1, 2));
  const SchurExpansion e = interp_expansion(Partition{2, 1}, ctx);
  const io::Json j = io::expansion_json(e);
  CHECK(j["basis"] == "schur");
  CHECK(j["coeffs"][0]["index"] == "-");
  const SchurExpansion back = io::expansion_from_json(io::Json::parse(j.dump()));
  CHECK(back.coeffs() == e.coeffs());
}

TEST_CASE("CSV") {
  CHECK(io::csv_header() == "lambda,mu,value_re,value_im,tail_bound");
  CHECK(io::re_im(Scalar::gaussian(1, -2)) == std::pair<std::string, std::string>{"1", "-2"});
  CHECK(io::re_im(Scalar(1, 2)) == std::pair<std::string, std::string>{"1/2", "0"});
  const std::string row = io::csv_row("2,1", "1", Scalar(1, 2), 0.0);
  CHECK(row.rfind("\"2,1\",\"1\",1/2,0,", 0) == 0);
}
