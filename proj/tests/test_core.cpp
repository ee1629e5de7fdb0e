#include <doctest.h>

#include <random>

#include "conjdim/error.hpp"
#include "conjdim/multi_poly.hpp"
#include "conjdim/number_field.hpp"
#include "conjdim/rational.hpp"

using namespace conjdim;

namespace {

Rational random_rational(std::mt19937_64& rng, int bound = 50) {
  std::uniform_int_distribution<int> num(-bound, bound), den(1, bound);
  const int p = num(rng), q = den(rng);
  return rational_normalize(p, q);
}

NFElem random_elem(std::mt19937_64& rng, const FieldPtr& k) {
  std::vector<Rational> c;
  for (int i = 0; i < k->degree(); ++i) c.push_back(random_rational(rng));
  return NFElem(k, c);
}

}  // namespace

TEST_CASE("rational_normalize") {
  CHECK(rational_normalize(2, -4) == Rational(-1, 2));
  CHECK(to_string(rational_normalize(2, -4)) == "-1/2");
  CHECK(to_string(rational_normalize(0, 7)) == "0");
  CHECK(rational_normalize(0, 7).get_den() == 1);
  CHECK(to_string(rational_normalize(572, 1)) == "572");
  CHECK_THROWS_AS(rational_normalize(1, 0), DivisionByZero);
  CHECK_THROWS_WITH(rational_normalize(1, 0), "division by zero");
}

TEST_CASE("parse_rational") {
  CHECK(parse_rational(" -3/6 ") == Rational(-1, 2));
  CHECK(parse_rational("+12") == 12);
  CHECK_THROWS_AS(parse_rational("1/0"), DivisionByZero);
  CHECK_THROWS_AS(parse_rational("abc"), ParseError);
  CHECK_THROWS_AS(parse_rational("1/"), ParseError);
}

TEST_CASE("rational_is_square") {
  CHECK(rational_is_square(Rational(9, 4)));
  CHECK_FALSE(rational_is_square(Rational(-1)));
  CHECK_FALSE(rational_is_square(Rational(223967999, 97200)));
  CHECK(rational_is_square(Rational(0)));
  std::mt19937_64 rng(7);
  for (int i = 0; i < 1000; ++i) {
    Rational q = random_rational(rng, 100000);
    CHECK(rational_is_square(q * q));
  }
}

TEST_CASE("number field arithmetic") {
  FieldPtr qi = cyclotomic_field(4);
  CHECK(qi->label() == "Q(i)");
  CHECK(qi->modulus() == std::vector<Rational>{1, 0, 1});
  NFElem i = NFElem::generator(qi);
  NFElem one(qi, Rational(1));
  CHECK((one + i) * (one - i) == NFElem(qi, Rational(2)));
  CHECK((one + i).to_string() == "[1, 1]@Q(i)");

  FieldPtr q3 = cyclotomic_field(3);
  CHECK(q3->modulus() == std::vector<Rational>{1, 1, 1});
  NFElem w = NFElem::generator(q3);
  CHECK((w * w + w + NFElem(q3, Rational(1))).is_zero());

  FieldPtr qu = NumberField::create({7, 1, 1}, "Q(u)", IrreducibilityProvenance::Asserted);
  NFElem u = NFElem::generator(qu);
  CHECK(u.pow(6) == NFElem(qu, std::vector<Rational>{-203, -120}));

  CHECK_THROWS_AS(i + w, FieldMismatch);
  CHECK_THROWS_AS(i / NFElem(qi), DivisionByZero);
}

TEST_CASE("cyclotomic fields") {
  CHECK(cyclotomic_field(1)->is_rationals());
  CHECK(cyclotomic_field(2)->is_rationals());
  CHECK_THROWS_AS(cyclotomic_field(61), Error);
  CHECK_THROWS_AS(cyclotomic_field(0), Error);
  CHECK(cyclotomic_polynomial(12) == std::vector<Rational>{1, 0, -1, 0, 1});
  for (int l : {3, 4, 5, 6, 8, 10, 12, 20, 60}) {
    NFElem w = root_of_unity(l);
    CHECK(w.pow(l).is_one());
    for (int d = 1; d < l; ++d)
      if (l % d == 0) CHECK_FALSE(w.pow(d).is_one());
  }
}

TEST_CASE("field axioms on random samples") {
  std::mt19937_64 rng(11);
  std::vector<FieldPtr> fields{NumberField::rationals(), cyclotomic_field(4), cyclotomic_field(5),
                               NumberField::create({-2, 0, 0, 1}, "Q(c)", IrreducibilityProvenance::Asserted)};
  for (int trial = 0; trial < 200; ++trial) {
    const FieldPtr& k = fields[trial % fields.size()];
    NFElem a = random_elem(rng, k), b = random_elem(rng, k), c = random_elem(rng, k);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
  }
}

TEST_CASE("dense polynomial basics") {
  FieldPtr q = NumberField::rationals();
  UniPoly f = make_unipoly(q, {-1, 0, 1});
  UniPoly g = make_unipoly(q, {-1, 1});
  auto [quo, rem] = divmod(f, g);
  CHECK(quo == make_unipoly(q, {1, 1}));
  CHECK(rem.is_zero_poly());
  CHECK(f.derivative() == make_unipoly(q, {0, 2}));
  CHECK(f.compose(g) == make_unipoly(q, {0, -2, 1}));
  CHECK(to_string(make_unipoly(q, {Rational(-3, 2), 0, 1, -1})) == "-x^3 + x^2 - 3/2");
  CHECK(prem(make_unipoly(q, {1, 0, 0, 2}), make_unipoly(q, {1, 3})) == make_unipoly(q, {Rational(25)}));
}

TEST_CASE("multivariate polynomials") {
  FieldPtr qi = cyclotomic_field(4);
  std::vector<std::string> v{"x1", "x2"};
  MultiPoly f = parse_multipoly("x1^2 - (1+i)*x1*x2 + 3/2*x2^2", qi, v);
  CHECK(f.term_count() == 3);
  CHECK(f.total_degree() == 2);
  CHECK(f.is_homogeneous());
  MultiPoly g = parse_multipoly("x1 - x2", qi, v);
  MultiPoly h = f * g;
  CHECK(exact_div(h, g) == f);
  CHECK_THROWS_AS(exact_div(f, g), Error);
  auto u = h.as_univariate_in(1);
  CHECK(u.degree() == 3);
  CHECK(MultiPoly::from_univariate(u, 1) == h);
  MultiPoly sub = f.substitute(0, MultiPoly::variable(qi, v, 1));
  CHECK(sub == parse_multipoly("(3/2 - i)*x2^2", qi, v));
  CHECK(parse_multipoly(f.to_string(), qi, v) == f);
  CHECK_THROWS_AS(parse_multipoly("x1 + y", qi, v), ParseError);
}
