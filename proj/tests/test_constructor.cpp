#include <doctest.h>

#include <random>

#include "conjdim/constructor.hpp"
#include "conjdim/error.hpp"

using namespace conjdim;

namespace {

const FieldPtr& QQ() { return NumberField::rationals(); }

UniPoly parse_x(const std::string& s, const FieldPtr& k = NumberField::rationals(), const std::string& var = "x") {
  return parse_multipoly(s, k, {var}).to_unipoly(0);
}

std::vector<NFElem> qconsts(std::vector<Rational> v) {
  std::vector<NFElem> out;
  for (const auto& x : v) out.emplace_back(QQ(), x);
  return out;
}

}  // namespace

TEST_CASE("G2 auxiliary polynomial and minimal polynomial") {
  const InvariantSystem sys = g2_invariants();
  const AuxiliaryPoly aux = eliminate_to_auxiliary(sys, qconsts({0, 2}));
  CHECK(aux.poly == parse_x("x^6 - 2"));
  CHECK(aux.power == 2);
  CHECK(aux.orbit_size == 6);
  const ShiftedMinpoly m = minpoly_by_shifted_resultant(sys, qconsts({0, 2}), coordinate_weights("G2", {1, 3}));
  CHECK(m.poly == parse_x("y^12 + 572*y^6 + 470596", QQ(), "y"));
  CHECK(m.certificate.verdict == Verdict::Irreducible);
  CHECK_FALSE(m.factor_selected);
  // alpha = beta_1 returns P6 itself.
  CHECK(minpoly_by_shifted_resultant(sys, qconsts({0, 2}), {1, 0}).poly == parse_x("x^6 - 2"));
}

TEST_CASE("degenerate constants report the degree reached") {
  const InvariantSystem sys = g2_invariants();
  try {
    eliminate_to_auxiliary(sys, qconsts({0, 0}));
    FAIL("expected DegenerateConstants");
  } catch (const DegenerateConstants& e) {
    CHECK(e.achieved_degree() == 1);
  }
  CHECK_THROWS_AS(eliminate_to_auxiliary(sys, qconsts({1})), Error);
}

TEST_CASE("B2 constants (5, 4) give a reducible auxiliary polynomial") {
  const AuxiliaryPoly aux = eliminate_to_auxiliary(elem_symm_lpowers(2, 2), qconsts({5, 4}));
  CHECK(aux.poly == parse_x("x^4 - 5*x^2 + 4"));
  CHECK(irreducibility_certificate(aux.poly).verdict == Verdict::Reducible);
}

TEST_CASE("ST8 auxiliary polynomial over Q(i)") {
  const InvariantSystem sys = st8_invariants();
  const FieldPtr k = cyclotomic_field(4);
  const auto c = parse_constants("1+i, 1", k);
  const AuxiliaryPoly aux = eliminate_to_auxiliary(sys, c);
  const UniPoly printed = parse_x("27*x^24 - 270*(1+i)*x^16 + 270*x^12 - 810*i*x^8 + 54*(1+i)*x^4 - 9 + 8*i", k);
  CHECK(aux.poly == monic(printed));
  CHECK(aux.power == 4);
  CHECK(aux.orbit_size == 24);
  // R = constant * P24^4 with P24 monic; the printed form has leading 27.
  CHECK(aux.constant == NFElem(k, Rational(531441)));
  CHECK(aux.resultant == monic(printed).pow(4) * aux.constant);
  ShiftedOptions so;
  so.certify = false;
  const ShiftedMinpoly m = minpoly_by_shifted_resultant(sys, c, {1, 2}, so);
  CHECK(m.poly.degree() == 96);
  CHECK(m.power == 1);
}

TEST_CASE("minimal polynomial degree equals the orbit size of the weights") {
  const InvariantSystem sys = g2_invariants();
  const auto c = qconsts({0, 2});
  for (const auto& b : std::vector<std::vector<Rational>>{{1, 0}, {1, 1}, {1, -1}, {1, 2}, {2, 1}, {1, -3}, {3, 5}}) {
    ShiftedOptions so;
    so.certify = false;
    const ShiftedMinpoly m = minpoly_by_shifted_resultant(sys, c, b, so);
    const Orbit o = orbit(*sys.group, rational_vector(QQ(), b), Action::Column);
    CHECK(m.poly.degree() == static_cast<int>(o.elements.size()));
    const bool trivial = stabilizer_is_trivial(*sys.group, rational_vector(QQ(), b), Action::Column);
    CHECK((m.poly.degree() == 12) == trivial);
  }
}

TEST_CASE("construct G2 end to end") {
  const Construction c = construct("G2", 2, 0, std::nullopt, std::vector<Rational>{1, 3});
  CHECK(c.auxiliary->poly == parse_x("x^6 - 2"));
  CHECK(*c.alpha_minpoly == parse_x("y^12 + 572*y^6 + 470596", QQ(), "y"));
  CHECK(c.certificate->verdict == Verdict::Irreducible);
  CHECK(c.degree == 12);
  CHECK(c.conj_dim_claimed == 2);
  CHECK(*c.stabilizer_trivial);
  CHECK(*c.numeric_cross_check);
  REQUIRE(c.dim_report);
  CHECK(c.dim_report->dimension_upper == c.conj_dim_claimed);
  CHECK(c.dim_report->certified);
  CHECK(c.bounds == BoundVerdict::OK);
}

TEST_CASE("construct searches constants for Bn") {
  const Construction c = construct("Bn", 2, 0, std::nullopt, std::nullopt);
  CHECK(c.degree == 8);
  CHECK(c.certificate->verdict == Verdict::Irreducible);
  CHECK(*c.numeric_cross_check);
  CHECK(c.dim_report->dimension_upper == 2);
  const Construction c3 = construct("Bn", 3, 0, std::nullopt, std::nullopt);
  CHECK(c3.auxiliary->poly.degree() == 6);
  CHECK(c3.degree == 48);
  CHECK(c3.conj_dim_claimed == 3);
  CHECK(c3.certificate->verdict == Verdict::Irreducible);
  CHECK(c3.alpha_minpoly->degree() == 48);
  REQUIRE(c3.dim_report);
  CHECK(c3.dim_report->dimension_upper == 3);
}

TEST_CASE("construct over Q(omega_3) for G(3,1,2)") {
  ConstructOptions opt;
  opt.verify = false;
  const Construction c = construct("Gl1n", 2, 3, std::nullopt, std::nullopt, opt);
  CHECK(c.auxiliary->poly.degree() == 6);
  CHECK(c.degree == 18);
  CHECK(c.certificate->verdict == Verdict::Irreducible);
  CHECK(*c.numeric_cross_check);
  CHECK(c.bounds == BoundVerdict::OK);
}

TEST_CASE("F4 gamma chain reproduces the reference data") {
  const F4Chain ch = f4_gamma_chain();
  CHECK(ch.gamma_cubic == make_unipoly(QQ(), std::vector<Rational>{parse_rational("-114051068048293/6220800"),
                                                                   parse_rational("5811288377/36864"),
                                                                   parse_rational("5735/32"), 1}));
  CHECK(ch.cubic_certificate.verdict == Verdict::Irreducible);
  CHECK(ch.s2 == 5);
  CHECK(ch.q4 == f4_reference_q4(ch.k));
  CHECK(ch.p24 == f4_reference_p24());
  CHECK(ch.p24[22] == NFElem(QQ(), Rational(-15)));
  CHECK(ch.p24[0] == NFElem(QQ(), parse_rational("-24389830879/1592524800")));
  CHECK(ch.discriminant_rational);
  CHECK(ch.q4_discriminant == parse_rational("223967999/97200"));
  CHECK_FALSE(ch.discriminant_is_square);
  CHECK(ch.q4_roots.real_roots == 4);
  CHECK(ch.q4_roots.negative_roots == 1);
  CHECK(ch.resolvent_certificate.verdict == Verdict::Irreducible);
}

TEST_CASE("construct F4 stops at P24") {
  const Construction c = construct("F4", 4, 0, std::nullopt, std::nullopt);
  CHECK(c.auxiliary->poly == f4_reference_p24());
  CHECK(c.auxiliary->orbit_size == 24);
  CHECK(*c.stabilizer_trivial);
  CHECK(c.degree == 1152);
  CHECK(c.conj_dim_claimed == 4);
  CHECK_FALSE(c.alpha_minpoly.has_value());
  REQUIRE(c.auxiliary_certificate);
  CHECK(c.auxiliary_certificate->verdict == Verdict::Irreducible);
}

TEST_CASE("square-root towers") {
  CHECK(weighted_sqrt_tower(parse_x("x - 2"), {1}) == parse_x("x^2 - 2"));
  // sqrt2 + sqrt3 from the roots of (x-2)(x-3).
  CHECK(weighted_sqrt_tower(parse_x("x^2 - 5*x + 6"), {1, 1}).degree() == 8);
  CHECK(squarefree_part(weighted_sqrt_tower(parse_x("x^2 - 5*x + 6"), {1, 1})) == parse_x("x^4 - 10*x^2 + 1"));
  const SqrtMinpoly m = minpoly_of_weighted_sqrts(parse_x("x^2 + x - 1"), {1, 2});
  CHECK(m.poly.degree() == 8);
  CHECK(m.certificate.verdict == Verdict::Irreducible);
  CHECK_FALSE(m.numeric_assisted);
}

TEST_CASE("exact tower agrees with the rounded orbit product") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> coef(-6, 6), wt(1, 5);
  int done = 0;
  for (int trial = 0; done < 25 && trial < 200; ++trial) {
    const UniPoly f = make_unipoly(QQ(), std::vector<Rational>{coef(rng), coef(rng), 1});
    if (!is_squarefree(f) || f[0].is_zero()) continue;
    const std::vector<Rational> w{wt(rng), wt(rng)};
    ++done;
    CHECK(weighted_sqrt_tower(f, w) == weighted_sqrt_numeric(f, w));
  }
  CHECK(done == 25);
}

TEST_CASE("tower polynomial vanishes at the numeric alpha") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> coef(-5, 5), wt(-4, 4);
  int done = 0;
  for (int trial = 0; done < 20 && trial < 200; ++trial) {
    const int n = 1 + trial % 3;
    std::vector<Rational> c;
    for (int i = 0; i < n; ++i) c.emplace_back(coef(rng));
    c.emplace_back(1);
    const UniPoly f = make_unipoly(QQ(), c);
    if (!is_squarefree(f) || f[0].is_zero()) continue;
    std::vector<Rational> w;
    for (int i = 0; i < n; ++i) w.emplace_back(wt(rng));
    ++done;
    const UniPoly p = weighted_sqrt_tower(f, w);
    CHECK(p.degree() == (1 << n) * (n == 3 ? 6 : n));
    PrecisionScope scope(digits_to_bits(120));
    const auto vals = sqrt_conjugates(f, w, 100);
    std::vector<BigComplex> pc;
    for (const auto& x : p.coeffs()) pc.emplace_back(BigFloat(x.to_rational()));
    BigFloat scale(0L), pw(1L);
    for (const auto& x : pc) {
      scale += x.abs() * pw;
      pw *= vals[0].abs();
    }
    CHECK(horner(pc, vals[0]).abs() <= scale * pow2(-300));
  }
  CHECK(done == 20);
}

TEST_CASE("square-root criteria") {
  SqrtCriteria r = check_sqrt_criteria(parse_x("x^2 + x - 1"));
  CHECK(r.leading == -1);
  CHECK(r.discriminant == 5);
  CHECK(r.an_condition);
  CHECK(r.corollary_hypothesis);
  r = check_sqrt_criteria(parse_x("x^2 - 3*x + 2"));
  CHECK_FALSE(r.corollary_hypothesis);
  CHECK(r.roots.positive_roots == 2);
  r = check_sqrt_criteria(parse_x("x^2 - 2"));
  CHECK(r.an_condition);  // Delta^Z Q*^2 holds only positive classes here
  r = check_sqrt_criteria(nonexceptional_poly(3));
  CHECK(r.an_condition);
  CHECK(r.odd_condition == "holds: f(a_n t^2) is irreducible");
}

TEST_CASE("nonexceptional family") {
  CHECK(nonexceptional_poly(1) == parse_x("x - 2"));
  CHECK(nonexceptional_poly(2) == parse_x("x^2 + x - 1"));
  CHECK(nonexceptional_poly(3) == parse_x("x^3 - x + 1"));
  CHECK(nonexceptional_poly(4) == parse_x("x^4 + x - 1"));
  const Construction c1 = build_nonexceptional(1);
  CHECK(*c1.alpha_minpoly == parse_x("x^2 - 2"));
  const Construction c2 = build_nonexceptional(2);
  CHECK(c2.degree == 8);
  CHECK(c2.certificate->verdict == Verdict::Irreducible);
  CHECK(*c2.distinct_conjugates == 8);
  CHECK(*c2.numeric_cross_check);
  CHECK(c2.dim_report->dimension_upper == 2);
  CHECK(c2.dim_report->certified);
}

TEST_CASE("multiplicative example") {
  const Construction c1 = build_mult_example(1);
  CHECK(*c1.alpha_minpoly == parse_x("y^2 + 6*y + 1", QQ(), "y"));
  CHECK(*c1.exponent_rank == 1);
  const Construction c2 = build_mult_example(2);
  CHECK(c2.degree == 8);
  CHECK(*c2.distinct_conjugates == 8);
  CHECK(c2.certificate->verdict == Verdict::Irreducible);
  CHECK(*c2.exponent_rank == 2);
  CHECK(c2.dim_report->dimension_upper == 2);
  CHECK(c2.bounds == BoundVerdict::OK);
  for (int n = 1; n <= 5; ++n) CHECK(*build_mult_example(n, {false, false}).exponent_rank == n);
}

TEST_CASE("constant parsing") {
  const auto c = parse_constants("1+i,1", cyclotomic_field(4));
  REQUIRE(c.size() == 2);
  CHECK(c[0] == NFElem(cyclotomic_field(4), std::vector<Rational>{1, 1}));
  CHECK(parse_rationals("1,-3/2") == std::vector<Rational>{1, Rational(-3, 2)});
  CHECK_THROWS_AS(parse_rationals("1,x"), Error);
}
