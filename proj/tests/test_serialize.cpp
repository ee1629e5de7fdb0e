#include <doctest.h>

#include <random>

#include "conjdim/constructor.hpp"
#include "conjdim/error.hpp"
#include "conjdim/poly_algebra.hpp"
#include "conjdim/serialize.hpp"

using namespace conjdim;

namespace {

NFElem random_elem(std::mt19937_64& rng, const FieldPtr& k) {
  std::uniform_int_distribution<int> num(-40, 40), den(1, 9);
  std::vector<Rational> c;
  for (int i = 0; i < k->degree(); ++i) c.push_back(rational_normalize(num(rng), den(rng)));
  return NFElem(k, c);
}

UniPoly random_poly(std::mt19937_64& rng, const FieldPtr& k, int deg) {
  std::vector<NFElem> c;
  for (int i = 0; i <= deg; ++i) c.push_back(random_elem(rng, k));
  if (c.back().is_zero()) c.back() = NFElem(k, Rational(1));
  return make_unipoly(k, c);
}

}  // namespace

TEST_CASE("field labels round-trip") {
  for (const FieldPtr& k : {NumberField::rationals(), cyclotomic_field(4), cyclotomic_field(3), cyclotomic_field(8)}) {
    const Json j = field_to_json(k);
    CHECK(j.is_string());
    CHECK(field_from_json(j)->label() == k->label());
  }
  const FieldPtr q = NumberField::rationals();
  const FieldPtr k = make_number_field(make_unipoly(q, std::vector<Rational>{-2, 0, 0, 1}), "K");
  const Json j = field_to_json(k);
  REQUIRE(j.is_object());
  const FieldPtr back = field_from_json(j);
  CHECK(back->degree() == 3);
  CHECK(field_to_json(back) == j);
}

TEST_CASE("elements and polynomials round-trip") {
  std::mt19937_64 rng(7);
  const std::vector<FieldPtr> fields{NumberField::rationals(), cyclotomic_field(4), cyclotomic_field(5)};
  for (int i = 0; i < 60; ++i) {
    const FieldPtr& k = fields[i % fields.size()];
    const NFElem a = random_elem(rng, k);
    CHECK(nfelem_from_string(nfelem_to_string(a), k) == a);
    const UniPoly f = random_poly(rng, k, 1 + i % 7);
    const Json j = poly_to_json(f, "t");
    CHECK(poly_var(j) == "t");
    const UniPoly g = poly_from_json(j);
    CHECK(g == f);
    // Re-serializing is byte-identical.
    CHECK(poly_to_json(g, "t").dump() == j.dump());
    CHECK(Json::parse(j.dump()) == j);
  }
}

TEST_CASE("polynomial input forms") {
  const UniPoly f = poly_from_json(Json::parse(R"({"field": "Q", "var": "x", "expr": "x^4 - 10*x^2 + 1"})"));
  CHECK(to_string(f) == to_string(make_unipoly(NumberField::rationals(), std::vector<Rational>{1, 0, -10, 0, 1})));
  const UniPoly g = poly_from_json(Json::parse(R"({"field": "Q", "coeffs": [1, "-1/2", 3]})"));
  CHECK(g.degree() == 2);
  CHECK(g.coeffs()[1] == NFElem(NumberField::rationals(), Rational(-1, 2)));
  CHECK_THROWS_AS(poly_from_json(Json::parse(R"({"field": "Q"})")), ParseError);
}

TEST_CASE("construction output re-parses") {
  ConstructOptions opt;
  opt.verify = false;
  const Construction c = construct("G2", 0, 0, std::nullopt, std::nullopt, opt);
  const Json j = to_json(c);
  REQUIRE(c.alpha_minpoly);
  CHECK(poly_from_json(j["minimal_polynomial"]) == *c.alpha_minpoly);
  CHECK(poly_from_json(j["auxiliary"]["poly"]) == c.auxiliary->poly);
  CHECK(j["degree"] == "12");
  CHECK(Json::parse(j.dump()) == j);
}
