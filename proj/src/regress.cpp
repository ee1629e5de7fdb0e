#include "conjdim/regress.hpp"

#include <chrono>
#include <cstdio>

#include "conjdim/conj_dim.hpp"
#include "conjdim/constructor.hpp"
#include "conjdim/error.hpp"
#include "conjdim/finite_field.hpp"
#include "conjdim/invariants.hpp"
#include "conjdim/lattice.hpp"
#include "conjdim/poly_algebra.hpp"
#include "conjdim/properties.hpp"
#include "conjdim/resultant.hpp"
#include "conjdim/tables.hpp"

namespace conjdim {

namespace {

using Checks = std::vector<std::pair<bool, std::string>>;

void check(Checks& out, bool ok, const std::string& what) { out.emplace_back(ok, what); }

const FieldPtr& QQ() { return NumberField::rationals(); }

UniPoly poly(const std::string& text, const FieldPtr& k = NumberField::rationals(), const std::string& var = "x") {
  return parse_multipoly(text, k, {var}).to_unipoly(0);
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void g2_end_to_end(Checks& out) {
  const Construction c = construct("G2", 2, 0, parse_constants("0,2", QQ()), std::vector<Rational>{1, 3});
  check(out, c.auxiliary && c.auxiliary->poly == poly("x^6 - 2"), "auxiliary P6 = x^6 - 2");
  check(out, c.alpha_minpoly && *c.alpha_minpoly == poly("y^12 + 572*y^6 + 470596", QQ(), "y"),
        "minimal polynomial y^12 + 572 y^6 + 470596");
  check(out, c.certificate && c.certificate->verdict == Verdict::Irreducible, "certified irreducible");
}

// (8 - 2^(2k-1)) s_2k + sum C(2k,2j) s_2j s_(2k-2j), straight from the power sums of z.
Rational f4_direct(int k, const std::vector<Rational>& z) {
  auto s = [&](int m) {
    Rational t = 0;
    for (const auto& x : z) t += rpow(x, m);
    return t;
  };
  Rational r = (Rational(8) - Rational(ipow(2, 2 * k - 1))) * s(2 * k);
  for (int j = 1; j < k; ++j) r += Rational(binomial(2 * k, 2 * j)) * s(2 * j) * s(2 * k - 2 * j);
  return r;
}

void f4_invariant_forms(Checks& out) {
  for (int k : {1, 3, 4, 6}) {
    const MultiPoly reduced = f4_reduced_form(k);
    check(out, reduced == f4_reference_form(k), "I" + std::to_string(2 * k) + " matches the printed form");
    const std::vector<std::vector<Rational>> points{{1, 2, 3, 5}, {Rational(1, 2), -3, 7, Rational(2, 3)}, {0, 1, -1, 4}};
    bool agree = true;
    for (const auto& z : points) {
      std::vector<NFElem> s;
      for (int m = 1; m <= 4; ++m) {
        Rational t = 0;
        for (const auto& x : z) t += rpow(x, 2 * m);
        s.emplace_back(QQ(), t);
      }
      agree = agree && reduced.evaluate(s) == NFElem(QQ(), f4_direct(k, z));
    }
    check(out, agree, "I" + std::to_string(2 * k) + " agrees with the defining sum at rational points");
  }
  const std::string i12 = f4_reduced_form(6).to_string();
  check(out, i12.find("1365/2") != std::string::npos && i12.find("159/2") != std::string::npos,
        "I12 carries 1365/2 and 159/2");
  check(out, verify_system(f4_invariants()), "I2, I6, I8, I12 are W(F4)-invariant");
}

void f4_chain(Checks& out) {
  const F4Chain ch = f4_gamma_chain();
  const UniPoly cubic = make_unipoly(QQ(), std::vector<Rational>{parse_rational("-114051068048293/6220800"),
                                                                 parse_rational("5811288377/36864"),
                                                                 parse_rational("5735/32"), Rational(1)});
  check(out, ch.gamma_cubic == cubic, "cubic for gamma matches");
  check(out, ch.cubic_certificate.verdict == Verdict::Irreducible, "cubic irreducible");
  check(out, ch.q4 == f4_reference_q4(ch.k), "Q4 over Q(gamma) matches");
  check(out, ch.p24.degree() == 24 && ch.p24 == f4_reference_p24(), "P24 matches");
  check(out, ch.p24[22] == NFElem(QQ(), Rational(-15)), "P24 x^22 coefficient -15");
  check(out, ch.p24[0] == NFElem(QQ(), parse_rational("-24389830879/1592524800")), "P24 constant term");
}

void f4_side(Checks& out) {
  const F4Chain ch = f4_gamma_chain();
  check(out, ch.discriminant_rational && ch.q4_discriminant == parse_rational("223967999/97200"),
        "disc Q4 = 223967999/97200");
  // Q(gamma) has odd degree, so a rational is a square there iff it is one in Q.
  check(out, !ch.discriminant_is_square && !rational_is_square(ch.q4_discriminant), "disc Q4 not a square in Q(gamma)");
  check(out, ch.q4_roots.real_roots == 4 && ch.q4_roots.negative_roots == 1, "Q4 has four real roots, one negative");
  const GroupPtr g = group_F4();
  check(out, g->order() == 1152, "W(F4) has 1152 elements");
  const Vector e1 = rational_vector(QQ(), {1, 0, 0, 0});
  check(out, orbit(*g, e1, Action::Column).elements.size() == 24, "orbit of e1 has 24 elements");
  const Vector b = rational_vector(QQ(), {1, 2, 3, 5});
  check(out, stabilizer_is_trivial(*g, b, Action::Column) && stabilizer_order(*g, b, Action::Column) == 1,
        "stabilizer of (1,2,3,5) is trivial");
}

void st8(Checks& out) {
  const InvariantSystem sys = st8_invariants();
  const FieldPtr k = sys.group->field();
  const auto c = parse_constants("1+i,1", k);
  const MultiPoly e8 = sys.polys[0] - MultiPoly::constant(k, sys.polys[0].vars(), c[0]);
  const MultiPoly e12 = sys.polys[1] - MultiPoly::constant(k, sys.polys[1].vars(), c[1]);
  const UniPoly r = resultant(e8, e12, 1).to_unipoly(0);
  const UniPoly printed = poly("27*x^24 - 270*(1+i)*x^16 + 270*x^12 - 810*i*x^8 + 54*(1+i)*x^4 - 9 + 8*i", k);
  check(out, r == printed.pow(4), "Res_x2(I8 - 1 - i, I12 - 1) = P24^4");
  const AuxiliaryPoly aux = eliminate_to_auxiliary(sys, c);
  check(out, aux.poly == monic(printed) && aux.power == 4, "elimination recovers P24 with multiplicity 4");
  const ShiftedMinpoly m = minpoly_by_shifted_resultant(sys, c, {1, 2});
  check(out, m.poly.degree() == 96, "alpha = beta + 2 beta' has degree 96 over Q(i)");
  check(out, m.certificate.verdict == Verdict::Irreducible, "degree-96 polynomial certified irreducible");
}

void tables(Checks& out) {
  struct Row1 {
    int n;
    const char* ratio;
    const char* order;
  };
  const std::vector<Row1> t1{{2, "3/2", "12"},          {4, "3", "1152"},          {6, "9/4", "103680"},
                             {7, "9/2", "2903040"},     {8, "135/2", "696729600"}, {9, "15/2", "1393459200"},
                             {10, "9/4", "8360755200"}};
  bool ok = true;
  for (int n = 0; n <= 20; ++n) {
    Integer expect = ipow(2, n) * factorial(n);
    Rational ratio = 1;
    for (const auto& r : t1)
      if (r.n == n) {
        expect = Integer(r.order);
        ratio = parse_rational(r.ratio);
      }
    ok = ok && d_max(n) == expect && Rational(d_max(n)) / Rational(ipow(2, n) * factorial(n)) == ratio;
  }
  check(out, ok, "d_max(n) and ratios for n <= 20 (135/2 at n = 8)");
  struct Row2 {
    int n, l;
    const char* ratio;
    const char* order;
  };
  const std::vector<Row2> t2{{2, 4, "3", "96"},           {2, 8, "3/2", "192"},           {2, 10, "3", "600"},
                             {2, 20, "3/2", "1200"},      {4, 4, "15/2", "46080"},        {4, 6, "5", "155520"},
                             {4, 10, "3", "720000"},      {5, 4, "3/2", "184320"},        {6, 6, "7/6", "39191040"},
                             {6, 10, "9/5", "1296000000"}, {8, 4, "45/28", "4246732800"}};
  ok = true;
  for (int l = 4; l <= 20; l += 2)
    for (int n = 0; n <= 10; ++n) {
      Integer expect = ipow(l, n) * factorial(n);
      Rational ratio = 1;
      for (const auto& r : t2)
        if (r.n == n && r.l == l) {
          expect = Integer(r.order);
          ratio = parse_rational(r.ratio);
        }
      ok = ok && D_cyc(l, n) == expect && Rational(D_cyc(l, n)) / Rational(ipow(l, n) * factorial(n)) == ratio;
    }
  check(out, ok, "D(Q(w_l), n) and ratios (45/28 at (8,4))");
  check(out, group_G2()->order() == 12 && d_max(2) == 12, "|W(G2)| = 12 = d_max(2)");
  check(out, group_F4()->order() == 1152 && d_max(4) == 1152, "|W(F4)| = 1152 = d_max(4)");
  check(out, group_ST8()->order() == 96 && D_cyc(4, 2) == 96, "|ST8| = 96 = D(Q(i), 2)");
  ok = true;
  for (int n = 1; n <= 6; ++n) ok = ok && Integer(static_cast<long>(group_Bn(n)->order())) == ipow(2, n) * factorial(n);
  check(out, ok, "|W(B_n)| = 2^n n! for n <= 6");
  ok = true;
  for (int n = 0; n < 20; ++n) ok = ok && d_max(n) < d_max(n + 1);
  check(out, ok, "d_max strictly increasing up to n = 20");
}

void sqrt_family(Checks& out) {
  auto t0 = std::chrono::steady_clock::now();
  const Construction c2 = build_nonexceptional(2);
  const double t2 = seconds_since(t0);
  check(out, c2.alpha_minpoly && c2.alpha_minpoly->degree() == 8, "n = 2: degree 8");
  check(out, c2.certificate && c2.certificate->verdict == Verdict::Irreducible, "n = 2: certified irreducible");
  check(out, c2.dim_report && c2.dim_report->certified && c2.dim_report->dimension_upper == 2, "n = 2: dimension 2");
  check(out, t2 < 5, "n = 2 within 5 s");
  const Construction c3 = build_nonexceptional(3);
  check(out, c3.alpha_minpoly && c3.alpha_minpoly->degree() == 48, "n = 3: degree 48");
  check(out, c3.certificate && c3.certificate->verdict == Verdict::Irreducible, "n = 3: certified irreducible");
  check(out, c3.dim_report && c3.dim_report->certified && c3.dim_report->dimension_upper == 3, "n = 3: dimension 3");
  check(out, check_sqrt_criteria(nonexceptional_poly(2)).an_condition && check_sqrt_criteria(nonexceptional_poly(3)).an_condition,
        "a_n hypothesis holds for both base polynomials");
}

void numeric_verifier(Checks& out) {
  const UniPoly f = poly("y^12 + 572*y^6 + 470596", QQ(), "y");
  const RelationLevel a = qspan_level(f, 100), b = qspan_level(f, 200);
  check(out, a.dimension_upper == 2 && b.dimension_upper == 2, "dimension 2 at 100 and 200 digits");
  check(out, a.relation_space == b.relation_space, "identical relation spaces at 100 and 200 digits");
  LadderOptions lo;
  lo.start_digits = 100;
  lo.max_digits = 200;
  const DimReport r = qspan_dimension(f, lo);
  check(out, r.dimension_upper == 2 && r.certified && r.stable, "ladder verdict stable and certified");
  check(out, check_bounds(r.dimension_upper, r.degree) == BoundVerdict::OK, "bounds hold for degree 12");
  const DimReport s = qspan_dimension(poly("x^6 - 2"), lo);
  check(out, s.dimension_upper == 2 && s.stable, "x^6 - 2 has dimension 2");
}

void finite_fields(Checks& out) {
  for (auto [q, n] : std::vector<std::pair<std::uint64_t, int>>{{2, 2}, {2, 3}, {3, 2}}) {
    const DqnReport r = verify_Dqn(q, n);
    const std::string tag = "(q,n) = (" + std::to_string(q) + "," + std::to_string(n) + ")";
    check(out, r.orbit_size == static_cast<int>(r.d) && Integer(static_cast<unsigned long>(r.d)) == D_finite(Integer(static_cast<unsigned long>(q)), n),
          tag + ": orbit size q^n - 1");
    check(out, r.span_dimension == n, tag + ": span dimension n");
    check(out, r.passed, tag + ": report passes");
  }
  const ScanReport s = scan_upper_bound(2, 2, 6);
  std::uint64_t best = 0;
  for (const auto& l : s.levels) best = std::max(best, l.max_degree_within);
  check(out, s.passed && s.levels.size() == 6, "no alpha in F_{2^m}, m <= 6, of dimension <= 2 and degree > 3");
  check(out, best == 3, "degree 3 is attained at dimension 2");
}

void mult_rank(Checks& out) {
  bool ok = true;
  for (int n = 1; n <= 5; ++n) {
    ok = ok && mult_rank_exponents(signed_permutation_exponents(n)) == n;
    ok = ok && check_bounds(n, ipow(2, n) * factorial(n)) == BoundVerdict::OK;
  }
  check(out, ok, "exponent rank n for n = 1..5, bounds hold at degree 2^n n!");
  for (int n = 1; n <= 3; ++n) {
    const Construction c = build_mult_example(n);
    const std::string tag = "n = " + std::to_string(n);
    check(out, c.exponent_rank && *c.exponent_rank == n, tag + ": exponent rank");
    check(out, c.bounds == BoundVerdict::OK && check_bounds(*c.exponent_rank, c.degree) == BoundVerdict::OK,
          tag + ": r <= d <= d_max(r)");
    if (n == 2) {
      check(out, c.distinct_conjugates && *c.distinct_conjugates == 8, "n = 2: 8 distinct conjugates");
      check(out, c.alpha_minpoly && c.alpha_minpoly->degree() == 8 && c.certificate &&
                     c.certificate->verdict == Verdict::Irreducible,
            "n = 2: irreducible degree-8 minimal polynomial");
    }
  }
}

void property_suites(Checks& out) {
  const PropertyReport r = run_property_suites();
  for (const auto& s : r.suites)
    check(out, s.failures == 0, s.name + ": " + std::to_string(s.cases) + " cases, " + std::to_string(s.failures) + " failures");
  check(out, r.total_cases() >= 1000, std::to_string(r.total_cases()) + " randomized cases in total");
}

}  // namespace

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> list{
      {"g2-end-to-end", "G2 construction with c = (0,2), b = (1,3)", 5, g2_end_to_end},
      {"f4-invariants", "F4 invariants from the power-sum formula", 10, f4_invariant_forms},
      {"f4-gamma-chain", "gamma cubic, Q4 and P24 for the F4 example", 120, f4_chain},
      {"f4-side-conditions", "discriminant, real roots and stabilizer for F4", 60, f4_side},
      {"st8", "ST8 over Q(i): P24 and the degree-96 minimal polynomial", 120, st8},
      {"tables", "bound tables, enumerated orders, monotonicity", 60, tables},
      {"sqrt-family", "weighted square roots for n = 2, 3", 300, sqrt_family},
      {"numeric-verifier", "conjugate dimension at 100 and 200 digits", 60, numeric_verifier},
      {"finite-fields", "q^n - 1 over finite fields and the upper-bound scan", 60, finite_fields},
      {"mult-rank", "multiplicative rank examples", 60, mult_rank},
      {"property-suites", "randomized property suites", 300, property_suites},
  };
  return list;
}

CriterionResult run_criterion(const Criterion& c) {
  CriterionResult r;
  r.id = c.id;
  r.limit_seconds = c.limit_seconds;
  Checks checks;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    c.body(checks);
  } catch (const std::exception& e) {
    r.error = e.what();
  }
  r.seconds = seconds_since(t0);
  bool ok = r.error.empty() && !checks.empty();
  for (const auto& [pass, what] : checks) {
    r.checks.push_back((pass ? "ok: " : "FAIL: ") + what);
    ok = ok && pass;
  }
  r.passed = ok && r.seconds <= r.limit_seconds;
  return r;
}

std::string summary_line(const CriterionResult& r) {
  char buf[64];
  std::snprintf(buf, sizeof buf, " (%.2f s / %.0f s)", r.seconds, r.limit_seconds);
  std::string line = (r.passed ? "PASS " : "FAIL ") + r.id + buf;
  if (r.passed) return line;
  if (!r.error.empty()) return line + ": error: " + r.error;
  for (const auto& c : r.checks)
    if (c.rfind("FAIL", 0) == 0) return line + ": " + c.substr(6);
  return line + ": time limit exceeded";
}

}  // namespace conjdim
