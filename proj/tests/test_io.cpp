#include <doctest.h>

#include <fstream>
#include <sstream>

#include "hjj/errors.hpp"
#include "hjj/io.hpp"
#include "support.hpp"

using namespace hjj;
using namespace testsupport;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("algebra files round-trip against the in-memory fixtures") {
  CHECK(parse_algebra(fixture_path("alg2.json")) == alg2());
  CHECK(parse_algebra(fixture_path("abel1.json")) == abel1());
  CHECK(parse_algebra(fixture_path("alg3.json")) == alg3());
  CHECK(parse_algebra(fixture_path("jj5.json")) == jj5());
}

TEST_CASE("serialization is canonical byte for byte") {
  for (const char* name : {"alg2.json", "abel1.json", "alg3.json", "jj5.json"}) {
    HomAlgebra a = parse_algebra(fixture_path(name));
    CHECK(serialize_algebra(a) == slurp(fixture_path(name)));
  }
  // parse(serialize(a)) is the identity for any algebra
  HomAlgebra scrambled = rand_conjugate(alg2());
  CHECK(parse_algebra_text(serialize_algebra(scrambled)) == scrambled);
}

TEST_CASE("algebra parsing rejects malformed input") {
  CHECK_THROWS_AS(parse_algebra(fixture_path("missing.json")), ParseError);
  CHECK_THROWS_AS(parse_algebra_text("not json"), ParseError);
  CHECK_THROWS_AS(parse_algebra_text("[]"), ParseError);
  CHECK_THROWS_AS(parse_algebra_text(R"({"basis":[],"alpha":[],"products":[]})"), ParseError);
  CHECK_THROWS_AS(parse_algebra_text(R"({"basis":["e1","e1"],"alpha":[["1"]],"products":[]})"),
                  ParseError);
  CHECK_THROWS_AS(parse_algebra_text(R"({"basis":["e1"],"alpha":[["1","0"]],"products":[]})"),
                  ParseError);
  CHECK_THROWS_AS(
      parse_algebra_text(R"({"basis":["e1"],"alpha":[["1"]],"products":[{"left":"zz","right":"e1","value":{}}]})"),
      ParseError);
  CHECK_THROWS_AS(
      parse_algebra_text(R"({"basis":["e1"],"alpha":[["1"]],"products":[{"left":"e1","right":"e1","value":{"e1":"0.5"}}]})"),
      ParseError);
  // numeric scalars are rejected on purpose: exactness demands strings
  CHECK_THROWS_AS(parse_algebra_text(R"({"basis":["e1"],"alpha":[[1]],"products":[]})"),
                  ParseError);
  // mirror conflicts surface as such
  CHECK_THROWS_AS(parse_algebra_text(R"({"basis":["e1","e2"],"alpha":[["1","0"],["0","1"]],
    "products":[{"left":"e1","right":"e2","value":{"e1":"1"}},
                {"left":"e2","right":"e1","value":{"e2":"1"}}]})"),
                  ConflictingProduct);
}

TEST_CASE("representation files parse and verify") {
  HomAlgebra a = alg2();
  Representation r = parse_representation(fixture_path("rep_adjoint.json"), a);
  CHECK(r == adjoint_rep(a, 0));
  CHECK(verify_representation(r).all());

  CHECK_THROWS_AS(parse_representation_text(R"({"dim":0,"phi":[],"rho":{}})", a), ParseError);
  CHECK_THROWS_AS(parse_representation_text(R"({"dim":1,"phi":[["1"]],"rho":{}})", a),
                  ParseError);  // rho must cover every basis label
  CHECK_THROWS_AS(
      parse_representation_text(R"({"dim":1,"phi":[["1","0"]],"rho":{"e1":[["0"]],"e2":[["0"]]}})", a),
      ParseError);
}

TEST_CASE("operator matrices parse in column convention") {
  Matrix t = parse_operator_matrix(fixture_path("op_t.json"));
  CHECK(t.rows() == 2);
  CHECK(t(1, 0) == Rational(1));
  CHECK(t(0, 0) == Rational(0));
  CHECK_THROWS_AS(parse_operator_matrix_text(R"({"matrix":[]})"), ParseError);
  CHECK_THROWS_AS(parse_operator_matrix_text(R"({"matrix":[["1"],["1","2"]]})"), ParseError);
}

TEST_CASE("form files symmetrize sparse entries") {
  HomAlgebra a = alg2();
  BilinearForm theta = parse_form(fixture_path("theta_valid.json"), a);
  CHECK(theta.at(0, 0) == Rational(1));
  CHECK(theta.symmetric());

  BilinearForm mirrored = parse_form_text(R"({"e1,e2":"3"})", a);
  CHECK(mirrored.at(0, 1) == Rational(3));
  CHECK(mirrored.at(1, 0) == Rational(3));

  CHECK_THROWS_AS(parse_form_text(R"({"e1,e2":"1","e2,e1":"2"})", a), ConflictingProduct);
  CHECK_THROWS_AS(parse_form_text(R"({"e1":"1"})", a), ParseError);
  CHECK_THROWS_AS(parse_form_text(R"({"e1,zz":"1"})", a), ParseError);
}

TEST_CASE("product series files expand sparse coefficients") {
  HomAlgebra a = alg2();
  FormalProductSeries s = parse_product_series(fixture_path("series_constant.json"), a);
  CHECK(s.order() == 5);
  for (std::size_t i = 0; i <= 5; ++i) CHECK(s.coeff(i) == BilinearMap::product_of(a));

  FormalProductSeries failing = parse_product_series(fixture_path("series_failing.json"), a);
  CHECK(failing.order() == 1);
  CHECK(failing.coeff(1).eval_basis(1, 1) == Vec{Rational(1), Rational(0)});

  CHECK_THROWS_AS(parse_product_series_text(R"({"order":2,"coeffs":[]})", a), ParseError);
  // the base coefficient must spell out the product itself
  CHECK_THROWS_AS(parse_product_series_text(R"({"order":0,"coeffs":[{}]})", a), InvalidSeries);
}
