#include <doctest.h>

#include <random>

#include "conjdim/conj_dim.hpp"
#include "conjdim/error.hpp"
#include "conjdim/poly_algebra.hpp"
#include "conjdim/tables.hpp"

using namespace conjdim;

namespace {

const FieldPtr& QQ() { return NumberField::rationals(); }

UniPoly qpoly(std::vector<Rational> c) { return make_unipoly(QQ(), c); }

UniPoly parse_x(const std::string& s, const FieldPtr& k = NumberField::rationals()) {
  return parse_multipoly(s, k, {"x"}).to_unipoly(0);
}

Integer factorial(int n) {
  Integer r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace

TEST_CASE("bigfloat basics") {
  PrecisionScope scope(200);
  BigFloat two(2L);
  BigFloat s = sqrt(two);
  CHECK(abs(s * s - two) < pow2(-190));
  CHECK(BigFloat(Rational(7, 2)).round() == 4);
  CHECK(BigFloat(Rational(-7, 2)).round() == -4);
  CHECK(abs(exp(log(BigFloat(3L))) - BigFloat(3L)) < pow2(-190));
  BigComplex i(BigFloat(0L), BigFloat(1L));
  BigComplex m = i * i;
  CHECK(abs(m.re + BigFloat(1L)) < pow2(-190));
  CHECK(abs(BigComplex(BigFloat(0L), BigFloat(2L)).arg() - pi() / BigFloat(2L)) < pow2(-190));
  CHECK(digits_to_bits(30) >= 100);
}

TEST_CASE("roots of x^2 - 2 and x^6 - 2") {
  PrecisionScope scope(digits_to_bits(40));
  RootSet rs = roots_numeric(qpoly({-2, 0, 1}), 30);
  REQUIRE(rs.roots.size() == 2);
  CHECK(rs.certified);
  for (const auto& r : rs.roots) {
    CHECK(abs(abs(r.mid.re) - sqrt(BigFloat(2L))) < BigFloat(1e-28));
    CHECK(abs(r.mid.im) < BigFloat(1e-28));
  }
  rs = roots_numeric(qpoly({-2, 0, 0, 0, 0, 0, 1}), 30);
  CHECK(rs.certified);
  const BigFloat r6 = exp(log(BigFloat(2L)) / BigFloat(6L));
  for (const auto& r : rs.roots) CHECK(abs(r.mid.abs() - r6) < BigFloat(1e-28));
  CHECK_THROWS_AS(roots_numeric(qpoly({1, 2, 1}), 30), Error);
}

TEST_CASE("roots over Q(i) use the embedding i") {
  PrecisionScope scope(digits_to_bits(40));
  // x^2 - 2 i has roots +-(1 + i).
  RootSet rs = roots_numeric(parse_x("x^2 - 2*i", cyclotomic_field(4)), 30);
  CHECK(rs.certified);
  for (const auto& r : rs.roots) {
    CHECK(abs(abs(r.mid.re) - BigFloat(1L)) < BigFloat(1e-28));
    CHECK(abs(r.mid.re - r.mid.im) < BigFloat(1e-28));
  }
}

TEST_CASE("roots reproduce the coefficients") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> coef(-9, 9);
  PrecisionScope scope(digits_to_bits(60));
  int done = 0;
  for (int trial = 0; done < 40 && trial < 200; ++trial) {
    const int d = 2 + trial % 7;
    std::vector<Rational> c;
    for (int i = 0; i < d; ++i) c.emplace_back(coef(rng));
    c.emplace_back(1);
    UniPoly f = qpoly(c);
    if (!is_squarefree(f)) continue;
    ++done;
    RootSet rs = roots_numeric(f, 40);
    // Vieta: sum and product of the roots.
    BigComplex sum, prod(BigFloat(1L));
    for (const auto& r : rs.roots) {
      sum += r.mid;
      prod *= r.mid;
    }
    CHECK(abs(sum.re + BigFloat(c[d - 1])) < BigFloat(1e-30));
    CHECK(abs(sum.im) < BigFloat(1e-30));
    const BigFloat p0 = BigFloat(c[0]) * BigFloat(d % 2 ? -1L : 1L);
    CHECK(abs(prod.re - p0) < BigFloat(1e-30));
  }
  CHECK(done == 40);
}

TEST_CASE("complex_roots with numeric coefficients") {
  PrecisionScope scope(digits_to_bits(40));
  // (x - i)(x + 2) = x^2 + (2 - i) x - 2 i
  std::vector<BigComplex> c{BigComplex(BigFloat(0L), BigFloat(-2L)), BigComplex(BigFloat(2L), BigFloat(-1L)),
                            BigComplex(BigFloat(1L))};
  auto roots = complex_roots(c, 30);
  REQUIRE(roots.size() == 2);
  int hits = 0;
  for (const auto& r : roots) {
    if ((r.mid - BigComplex(BigFloat(0L), BigFloat(1L))).abs() < BigFloat(1e-25)) ++hits;
    if ((r.mid - BigComplex(BigFloat(-2L))).abs() < BigFloat(1e-25)) ++hits;
  }
  CHECK(hits == 2);
}

TEST_CASE("lll finds a short vector") {
  // The lattice contains (0, 1, 0) up to sign.
  IntMatrix b{{1, 1, 1}, {-1, 0, 2}, {3, 5, 6}};
  lll_reduce(b);
  auto norm2 = [](const std::vector<Integer>& v) -> Integer {
    Integer s = 0;
    for (const auto& x : v) s += x * x;
    return s;
  };
  CHECK(norm2(b[0]) == 1);
  // Determinant is preserved up to sign.
  auto det3 = [](const IntMatrix& m) -> Integer {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  };
  CHECK(abs(det3(b)) == 3);
}

TEST_CASE("lll recovers an integer relation") {
  // 3*sqrt2 - 2*sqrt8 + sqrt2 = 0 among (sqrt2, sqrt8, 1).
  PrecisionScope scope(300);
  const BigFloat k = pow2(120);
  std::vector<BigFloat> x{sqrt(BigFloat(2L)), sqrt(BigFloat(8L)), BigFloat(1L)};
  IntMatrix b(3, std::vector<Integer>(4, 0));
  for (int i = 0; i < 3; ++i) {
    b[i][i] = 1;
    b[i][3] = (x[i] * k).round();
  }
  lll_reduce(b);
  const auto& v = b[0];
  CHECK(v[0] == -2 * v[1]);
  CHECK(v[2] == 0);
}

TEST_CASE("integer_rank and rref") {
  CHECK(integer_rank({{1, 2}, {2, 4}}) == 1);
  CHECK(integer_rank({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}) == 2);
  CHECK(integer_rank({}) == 0);
  auto r = rational_rref({{2, 4}, {1, 2}});
  REQUIRE(r.size() == 1);
  CHECK(r[0][0] == 1);
  CHECK(r[0][1] == 2);
}

TEST_CASE("exceptional rows over Q") {
  const std::vector<std::pair<int, long long>> expect{
      {2, 12}, {4, 1152}, {6, 103680}, {7, 2903040}, {8, 696729600}, {9, 1393459200}, {10, 8360755200LL}};
  for (auto [n, b] : expect) CHECK(d_max(n) == Integer(std::to_string(b)));
  const auto& t1 = exceptional_rows_rational();
  CHECK(t1.size() == 7);
  for (const auto& row : t1) CHECK(row.ratio == Rational(row.bound) / Rational(Integer(1 << row.n) * factorial(row.n)));
  for (int n : {1, 3, 5, 11, 12}) CHECK(d_max(n) == Integer(Integer(1) << n) * factorial(n));
  for (int n = 1; n < 20; ++n) CHECK(d_max(n) < d_max(n + 1));
  CHECK(d_max(0) == 1);
}

TEST_CASE("exceptional rows over cyclotomic fields") {
  CHECK(D_cyc(4, 2) == 96);
  CHECK(D_cyc(8, 2) == 192);
  CHECK(D_cyc(10, 2) == 600);
  CHECK(D_cyc(20, 2) == 1200);
  CHECK(D_cyc(4, 4) == 46080);
  CHECK(D_cyc(6, 4) == 155520);
  CHECK(D_cyc(10, 4) == 720000);
  CHECK(D_cyc(4, 5) == 184320);
  CHECK(D_cyc(6, 6) == 39191040);
  CHECK(D_cyc(10, 6) == Integer("1296000000"));
  CHECK(D_cyc(4, 8) == Integer("4246732800"));
  CHECK(exceptional_rows_cyclotomic().size() == 11);
  for (const auto& row : exceptional_rows_cyclotomic()) {
    Integer generic = factorial(row.n);
    for (int i = 0; i < row.n; ++i) generic *= row.l;
    CHECK(row.ratio == Rational(row.bound) / Rational(generic));
  }
  CHECK(D_cyc(6, 2) == 72);
  CHECK(D_cyc(4, 3) == 384);
  CHECK_THROWS_AS(D_cyc(5, 2), Error);
  CHECK_THROWS_AS(D_cyc(2, 2), Error);
}

TEST_CASE("bounds and finite fields") {
  CHECK(check_bounds(2, 12) == BoundVerdict::OK);
  CHECK(check_bounds(2, 13) == BoundVerdict::ViolatesUpper);
  CHECK(check_bounds(3, 2) == BoundVerdict::ViolatesLower);
  CHECK(check_bounds(2, 96, Base::cyclotomic(4)) == BoundVerdict::OK);
  CHECK(check_bounds(2, 97, Base::cyclotomic(4)) == BoundVerdict::ViolatesUpper);
  CHECK(D_finite(2, 3) == 7);
  CHECK(D_finite(9, 2) == 80);
  CHECK_THROWS_AS(D_finite(6, 2), Error);
  CHECK(is_prime_power(49));
  CHECK_FALSE(is_prime_power(12));
  CHECK(check_bounds(2, 3, Base::finite(2)) == BoundVerdict::OK);
  CHECK(check_bounds(2, 4, Base::finite(2)) == BoundVerdict::ViolatesUpper);
  CHECK(min_dimension_for_degree(12) == 2);
  CHECK(min_dimension_for_degree(13) == 3);
  CHECK(min_dimension_for_degree(1152) == 4);
  CHECK(parse_base("cyc:4").l == 4);
  CHECK(parse_base("fq:9").q == 9);
  CHECK_THROWS_AS(parse_base("zz"), Error);
  CHECK(table_rows(Base::rationals(), 10).size() == 11);  // n = 0..10
}

TEST_CASE("qspan dimension examples") {
  DimReport r = qspan_dimension(parse_x("x^12 + 572*x^6 + 470596"));
  CHECK(r.dimension_lower == 2);
  CHECK(r.dimension_upper == 2);
  CHECK(r.certified);
  CHECK(r.stable);
  r = qspan_dimension(parse_x("x^6 - 2"));
  CHECK(r.dimension_upper == 2);
  CHECK(r.certified);
  r = qspan_dimension(parse_x("x^2 - 2"));
  CHECK(r.dimension_upper == 1);
  // x^3 - 3x + 1 is totally real with roots summing to zero: dimension 2.
  r = qspan_dimension(parse_x("x^3 - 3*x + 1"));
  CHECK(r.dimension_upper == 2);
  CHECK(r.dimension_lower == 2);
  // Conjugates +-sqrt2 +-sqrt3 span a plane.
  r = qspan_dimension(parse_x("x^4 - 10*x^2 + 1"));
  CHECK(r.dimension_upper == 2);
  r = qspan_dimension(parse_x("x^3 - x - 1"));
  CHECK(r.dimension_upper == 2);  // trace zero
  r = qspan_dimension(parse_x("x^3 - x^2 - 1"));
  CHECK(r.dimension_upper == 3);
  CHECK(r.dimension_lower == 2);  // degree 3 alone only forces 2
  CHECK_FALSE(r.certified);
}

TEST_CASE("multiplicative rank examples") {
  DimReport r = mult_rank_numeric(parse_x("x^4 - x^3 + x^2 - x + 1"));
  CHECK(r.torsion);
  r = mult_rank_numeric(parse_x("x^2 - 2"));
  CHECK(r.dimension_upper == 1);
  r = mult_rank_numeric(parse_x("x^3 - x - 1"));
  CHECK(r.dimension_upper == 2);  // a unit: the product of the roots is 1
  CHECK_THROWS_AS(mult_rank_numeric(parse_x("x^2 + x")), Error);
  CHECK(cyclotomic_index(parse_x("x^2 + 1")) == 4);
  CHECK_FALSE(cyclotomic_index(parse_x("x^2 + 2")).has_value());
}

TEST_CASE("orbit ranks of built-in groups") {
  auto g2 = group_G2();
  CHECK(orbit_rank(orbit(*g2, rational_vector(QQ(), {1, -3}), Action::Column).elements) == 2);
  auto f4 = group_F4();
  CHECK(orbit_rank(orbit(*f4, rational_vector(QQ(), {1, 2, 3, 5}), Action::Column).elements) == 4);
  // The diagonal is fixed by the symmetric part of B2 but still spans 2 dimensions.
  CHECK(orbit_rank(orbit(*group_Bn(2), rational_vector(QQ(), {1, 1}), Action::Row).elements) == 2);
  CHECK(orbit_rank({rational_vector(QQ(), {1, 2}), rational_vector(QQ(), {2, 4})}) == 1);
}

TEST_CASE("exponent matrices of signed permutations") {
  for (int n = 1; n <= 5; ++n) {
    IntMatrix m = signed_permutation_exponents(n);
    CHECK(Integer(static_cast<unsigned long>(m.size())) == Integer(Integer(1) << n) * factorial(n));
    CHECK(mult_rank_exponents(m) == n);
  }
}
