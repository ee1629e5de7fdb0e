#include <doctest.h>

#include "conjdim/error.hpp"
#include "conjdim/irreducibility.hpp"
#include "conjdim/poly_algebra.hpp"
#include "oracles.hpp"

using namespace conjdim;

namespace {

const FieldPtr& QQ() { return NumberField::rationals(); }

UniPoly qpoly(std::vector<Rational> c) { return make_unipoly(QQ(), c); }

std::vector<std::string> xs{"x1", "x2"};

}  // namespace

TEST_CASE("poly_gcd") {
  CHECK(poly_gcd(qpoly({-1, 0, 1}), qpoly({-1, 1})) == qpoly({-1, 1}));
  UniPoly f = qpoly({4, 0, 2});
  CHECK(poly_gcd(f, qpoly({})) == monic(f));
  UniPoly g = qpoly({-2, 0, 0, 0, 0, 0, 1});
  CHECK(poly_gcd(g, g.derivative()) == qpoly({1}));
}

TEST_CASE("resultant examples") {
  Rational a(3, 7), b(-5, 2);
  CHECK(resultant(qpoly({-a, 1}), qpoly({-b, 1})) == NFElem(QQ(), a - b));
  CHECK(resultant(qpoly({-2, 0, 1}), qpoly({-3, 0, 1})) == NFElem(QQ(), Rational(1)));
  // Res_x2(I1, I2 - 2) for the G2 invariants is (x1^6 - 2)^2.
  MultiPoly i1 = parse_multipoly("x1^2 - x1*x2 + x2^2", QQ(), xs);
  MultiPoly i2 = parse_multipoly("(x1*x2*(x1-x2))^2 - 2", QQ(), xs);
  MultiPoly r = resultant(i1, i2, 1);
  CHECK(r == parse_multipoly("(x1^6 - 2)^2", QQ(), xs));
  CHECK_THROWS_AS(resultant(parse_multipoly("x1", QQ(), xs), parse_multipoly("x1+1", QQ(), xs), 1), Error);
}

TEST_CASE("resultant agrees with the Sylvester determinant") {
  std::mt19937_64 rng(2024);
  std::vector<FieldPtr> fields{QQ(), cyclotomic_field(4), cyclotomic_field(3)};
  for (int trial = 0; trial < 150; ++trial) {
    const FieldPtr& k = fields[trial % 3];
    std::uniform_int_distribution<int> deg(1, 6);
    UniPoly f = oracle::random_poly(rng, k, deg(rng)), g = oracle::random_poly(rng, k, deg(rng));
    NFElem r = resultant(f, g);
    CHECK(r == oracle::sylvester_resultant(f, g));
    // Res(f, g) = (-1)^(deg f deg g) Res(g, f)
    NFElem s = resultant(g, f);
    CHECK(r == ((f.degree() * g.degree()) % 2 ? -s : s));
  }
}

TEST_CASE("bivariate resultant agrees with evaluation") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    MultiPoly f(QQ(), xs), g(QQ(), xs);
    std::uniform_int_distribution<int> e(0, 3), c(-5, 5);
    for (int t = 0; t < 5; ++t) {
      f.add_term(Monomial{static_cast<std::uint16_t>(e(rng)), static_cast<std::uint16_t>(e(rng))}, NFElem(QQ(), Rational(c(rng))));
      g.add_term(Monomial{static_cast<std::uint16_t>(e(rng)), static_cast<std::uint16_t>(e(rng))}, NFElem(QQ(), Rational(c(rng))));
    }
    if (f.degree_in(1) < 1 || g.degree_in(1) < 1) continue;
    MultiPoly r = resultant(f, g, 1);
    for (int x = -2; x <= 2; ++x) {
      MultiPoly xv = MultiPoly::constant(QQ(), xs, NFElem(QQ(), Rational(x)));
      UniPoly fx = f.substitute(0, xv).to_unipoly(1), gx = g.substitute(0, xv).to_unipoly(1);
      // Specialisation commutes with the resultant when leading coefficients survive.
      if (fx.degree() != f.degree_in(1) || gx.degree() != g.degree_in(1)) continue;
      NFElem pt[2] = {NFElem(QQ(), Rational(x)), NFElem(QQ(), Rational(0))};
      CHECK(r.evaluate(pt) == oracle::sylvester_resultant(fx, gx));
    }
  }
}

TEST_CASE("discriminant") {
  CHECK(discriminant(qpoly({-1, 1, 1})) == NFElem(QQ(), Rational(5)));
  CHECK(discriminant(qpoly({1, -1, 0, 1})) == NFElem(QQ(), Rational(-23)));
  CHECK_THROWS_AS(discriminant(qpoly({3})), Error);
}

TEST_CASE("Newton identities") {
  std::vector<std::string> ev{"e1", "e2"};
  CHECK(powersum_in_elementary(2, 2, QQ(), ev) == parse_multipoly("e1^2 - 2*e2", QQ(), ev));
  auto e = powersums_to_elementary({NFElem(QQ(), Rational(5)), NFElem(QQ(), Rational(13))});
  CHECK(e[0] == NFElem(QQ(), Rational(5)));
  CHECK(e[1] == NFElem(QQ(), Rational(6)));
  auto z = powersums_to_elementary(std::vector<NFElem>(4, NFElem(QQ())));
  for (const auto& x : z) CHECK(x.is_zero());

  std::vector<std::string> in{"s2", "s4", "s6"}, out{"s2", "s4", "s6", "s8"};
  MultiPoly i6 = parse_multipoly("(8 - 2^5)*s6 + 15*s2*s4 + 15*s4*s2", QQ(), in);
  CHECK(newton_reduce(i6, {1, 2, 3}, 4, out) == parse_multipoly("-24*s6 + 30*s2*s4", QQ(), out));
}

TEST_CASE("newton_reduce matches direct evaluation on random 4-tuples") {
  std::mt19937_64 rng(5);
  std::vector<std::string> in{"p5", "p6", "p7", "p1"}, out{"p1", "p2", "p3", "p4"};
  MultiPoly expr = parse_multipoly("p5*p6 - 3*p7 + p1^2*p5 + 1/2", QQ(), in);
  MultiPoly red = newton_reduce(expr, {5, 6, 7, 1}, 4, out);
  for (int t = 0; t < 50; ++t) {
    Rational z[4];
    for (auto& v : z) v = oracle::random_rational(rng, 9);
    auto ps = [&](int k) {
      Rational s = 0;
      for (auto& v : z) s += rpow(v, k);
      return NFElem(QQ(), s);
    };
    std::vector<NFElem> direct_pt{ps(5), ps(6), ps(7), ps(1)}, red_pt{ps(1), ps(2), ps(3), ps(4)};
    CHECK(expr.evaluate(direct_pt) == red.evaluate(red_pt));
  }
}

TEST_CASE("perfect_power_root") {
  UniPoly p = qpoly({-2, 0, 1});
  auto r = perfect_power_root(p.pow(3), 3);
  CHECK(r.root == p);
  CHECK(r.constant.is_one());
  auto r2 = perfect_power_root(p.pow(2) * NFElem(QQ(), Rational(-7)), 2);
  CHECK(r2.root == p);
  CHECK(r2.constant == NFElem(QQ(), Rational(-7)));
  CHECK_THROWS_AS(perfect_power_root(qpoly({-2, 0, 0, 1}), 3), Error);
  std::mt19937_64 rng(3);
  for (int t = 0; t < 40; ++t) {
    UniPoly q = oracle::random_poly(rng, t % 2 ? cyclotomic_field(4) : QQ(), 1 + t % 4);
    int m = 1 + t % 4;
    CHECK(perfect_power_root(q.pow(m), m).root == monic(q));
  }
}

TEST_CASE("square classes") {
  CHECK(in_delta_square_class(4, 7));
  CHECK_FALSE(in_delta_square_class(-1, 5));
  CHECK(in_delta_square_class(20, 5));
  CHECK_THROWS_AS(in_delta_square_class(0, 5), Error);
  auto cubic = NumberField::create({-2, 0, 0, 1}, "Q(c)", IrreducibilityProvenance::Asserted);
  CHECK(rational_square_in_odd_degree_field(9, *cubic));
  CHECK_FALSE(rational_square_in_odd_degree_field(2, *cubic));
  CHECK_FALSE(rational_square_in_odd_degree_field(-4, *cubic));
  CHECK_THROWS_AS(rational_square_in_odd_degree_field(9, *cyclotomic_field(4)), Error);
}

TEST_CASE("real roots") {
  auto roots = isolate_real_roots(qpoly({-2, 0, 1}));
  REQUIRE(roots.size() == 2);
  CHECK(roots[0].hi <= 0);
  CHECK(roots[1].lo >= 0);
  CHECK(isolate_real_roots(qpoly({1, 0, 1})).empty());
  auto qq = RealEmbedding::rational(QQ());
  auto c = count_real_roots(qpoly({2, -3, 1}), qq);
  CHECK(c.real_roots == 2);
  CHECK(c.negative_roots == 0);
  c = count_real_roots(qpoly({-6, 1, 1}), qq);  // roots -3, 2
  CHECK(c.negative_roots == 1);
  CHECK(c.positive_roots == 1);
  // Over Q(cbrt 2): x^2 - theta has two real roots, x^2 + theta none.
  auto k = NumberField::create({-2, 0, 0, 1}, "Q(c)", IrreducibilityProvenance::Asserted);
  auto emb = RealEmbedding::largest_real_root(k);
  NFElem t = NFElem::generator(k);
  CHECK(emb.sign(t - NFElem(k, Rational(5, 4))) == 1);
  CHECK(emb.sign(t - NFElem(k, Rational(127, 100))) == -1);
  CHECK(count_real_roots(make_unipoly(k, {-t, NFElem(k), NFElem(k, Rational(1))}), emb).real_roots == 2);
  CHECK(count_real_roots(make_unipoly(k, {t, NFElem(k), NFElem(k, Rational(1))}), emb).real_roots == 0);
}

TEST_CASE("factor_mod_p") {
  auto f2 = factor_mod_p(qpoly({1, 1, 1}), 2);
  CHECK(f2.profile.degrees == std::vector<int>{2});
  auto f5 = factor_mod_p(qpoly({-1, 0, 1}), 5);
  CHECK(f5.profile.degrees == std::vector<int>{1, 1});
  auto sq = factor_mod_p(qpoly({1, 2, 1}), 7);
  CHECK_FALSE(sq.profile.squarefree_mod_p);
  CHECK(sq.profile.degrees == std::vector<int>{1, 1});
  CHECK_THROWS_AS(factor_mod_p(qpoly({1, 0, 3}), 3), Error);
  CHECK_THROWS_AS(factor_mod_p(qpoly({1, 0, 1}), 4), Error);
  // The product of the factors reproduces f mod p.
  UniPoly f = qpoly({3, -1, 4, 1, -5, 9, 2, 6, 5, 3, 5});
  for (std::uint64_t p : {101ull, 103ull, 2ull, 3ull}) {
    auto fac = factor_mod_p(f, p);
    ModPoly prod{fac.leading};
    for (const auto& h : fac.factors) prod = modp::mul(prod, h, p);
    ModPoly want;
    for (const auto& c : rational_coeffs(f)) want.push_back(mpz_fdiv_ui(c.get_num_mpz_t(), p));
    modp::trim(want);
    CHECK(prod == want);
  }
}

TEST_CASE("irreducibility certificates") {
  auto c1 = irreducibility_certificate(qpoly({1, 1, 1}));
  CHECK(c1.verdict == Verdict::Irreducible);
  CHECK(c1.phase == 1);
  CHECK(c1.evidence.size() == 25);

  auto c2 = irreducibility_certificate(qpoly({-1, 0, 1}));
  CHECK(c2.verdict == Verdict::Reducible);
  REQUIRE(c2.witness_factor.has_value());
  CHECK(*c2.witness_factor == qpoly({-1, 1}));

  std::vector<Rational> g2(13);
  g2[0] = 470596;
  g2[6] = 572;
  g2[12] = 1;
  auto c3 = irreducibility_certificate(qpoly(g2));
  CHECK(c3.verdict == Verdict::Irreducible);
  CHECK(c3.phase == 2);
  CHECK(c3.recombination_checked);

  // Over Q(i): x^2 + 1 splits, x^2 - 3 does not.
  const FieldPtr& qi = cyclotomic_field(4);
  auto c4 = irreducibility_certificate(make_unipoly(qi, std::vector<Rational>{1, 0, 1}));
  CHECK(c4.verdict == Verdict::Reducible);
  REQUIRE(c4.witness_factor.has_value());
  CHECK(c4.witness_factor->degree() == 1);
  CHECK(divmod(make_unipoly(qi, std::vector<Rational>{1, 0, 1}), *c4.witness_factor).second.is_zero_poly());
  CHECK(irreducibility_certificate(make_unipoly(qi, std::vector<Rational>{-3, 0, 1})).verdict == Verdict::Irreducible);
  auto cubic = NumberField::create({-2, 0, 0, 1}, "Q(c)", IrreducibilityProvenance::Asserted);
  auto c6 = irreducibility_certificate(make_unipoly(cubic, std::vector<Rational>{-2, 0, 0, 1}));
  CHECK(c6.verdict == Verdict::Reducible);
  CHECK(irreducibility_certificate(make_unipoly(cubic, std::vector<Rational>{-3, 0, 0, 1})).verdict == Verdict::Irreducible);

  // x^4 + 1 is irreducible but splits modulo every prime.
  auto c5 = irreducibility_certificate(qpoly({1, 0, 0, 0, 1}));
  CHECK(c5.verdict == Verdict::Irreducible);
  CHECK(c5.phase == 2);
}

TEST_CASE("fuzz: products of two factors are never certified irreducible") {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<int> c(-9, 9), d(1, 5);
  for (int t = 0; t < 60; ++t) {
    auto make = [&] {
      std::vector<Rational> v;
      int deg = d(rng);
      for (int i = 0; i < deg; ++i) v.push_back(c(rng));
      v.push_back(1);
      return qpoly(v);
    };
    UniPoly a = make(), b = make();
    UniPoly prod = a * b;
    auto cert = irreducibility_certificate(prod);
    CHECK(cert.verdict != Verdict::Irreducible);
    if (cert.verdict == Verdict::Reducible) {
      REQUIRE(cert.witness_factor.has_value());
      CHECK(divmod(prod, *cert.witness_factor).second.is_zero_poly());
    }
    auto factors = factor_over_q(prod);
    UniPoly back = qpoly({1});
    for (const auto& f : factors) back = back * f;
    CHECK(back == prod);
  }
}

TEST_CASE("make_number_field") {
  auto k = make_number_field(qpoly({1, 0, 1}), "Q(i)");
  CHECK(k->provenance() == IrreducibilityProvenance::Certified);
  CHECK(make_number_field(qpoly({0, 1}), "Q")->degree() == 1);
  CHECK_THROWS_AS(make_number_field(qpoly({-1, 0, 1}), "bad"), Error);
  CHECK_THROWS_AS(make_number_field(qpoly({1, 0, 2}), "bad"), Error);
  auto a = make_number_field(qpoly({-1, 0, 1}), "asserted", true);
  CHECK(a->provenance() == IrreducibilityProvenance::Asserted);
}
