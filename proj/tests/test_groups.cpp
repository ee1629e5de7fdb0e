#include <doctest.h>

#include <random>

#include "conjdim/error.hpp"
#include "conjdim/invariants.hpp"
#include "conjdim/poly_algebra.hpp"
#include "oracles.hpp"

using namespace conjdim;

namespace {

const FieldPtr& QQ() { return NumberField::rationals(); }

Vector qvec(std::vector<Rational> v) { return rational_vector(QQ(), v); }

}  // namespace

TEST_CASE("group orders by enumeration") {
  for (int n = 1; n <= 6; ++n) {
    long long expect = 1;
    for (int i = 1; i <= n; ++i) expect *= 2 * i;
    CHECK(group_Bn(n)->order() == expect);
  }
  CHECK(group_G2()->order() == 12);
  CHECK(group_WB4()->order() == 384);
  CHECK(group_F4()->order() == 1152);
  CHECK(group_ST8()->order() == 96);
  CHECK(group_Gl1n(4, 2)->order() == 32);
  CHECK(group_Gl1n(3, 3)->order() == 162);
  CHECK(group_Gl1n(6, 2)->order() == 72);
  CHECK_THROWS_AS(group_Gl1n(4, 2, QQ()), Error);
  CHECK(group_Gl1n(3, 2, cyclotomic_field(6))->order() == 18);
  CHECK_THROWS_AS(builtin_group("E8"), Error);
}

TEST_CASE("enumeration is closed under multiplication") {
  for (const auto& g : {group_G2(), group_ST8(), group_Bn(3)}) {
    const auto& el = g->elements();
    MatGroup check(g->field(), g->dim(), g->generators(), "check", std::nullopt);
    for (std::size_t a = 0; a < el.size(); a += 3)
      for (std::size_t b = 0; b < el.size(); b += 5) {
        Matrix m = el[a] * el[b];
        CHECK(std::find(el.begin(), el.end(), m) != el.end());
      }
  }
}

TEST_CASE("enumeration cap") {
  const FieldPtr& q = QQ();
  MatGroup inf(q, 2, {Matrix(q, 2, {1, 1, 0, 1})}, "shear", std::nullopt);
  CHECK_THROWS_AS(inf.elements(50), BudgetExceeded);
}

TEST_CASE("orbits and stabilizers") {
  CHECK(orbit(*group_G2(), qvec({1, 0})).elements.size() == 6);
  CHECK(orbit(*group_F4(), qvec({1, 0, 0, 0})).elements.size() == 24);
  auto b3 = orbit(*group_Bn(3), qvec({1, 0, 0}));
  CHECK(b3.elements.size() == 6);
  CHECK(stabilizer_is_trivial(*group_F4(), qvec({1, 2, 3, 5}), Action::Column));
  CHECK(stabilizer_is_trivial(*group_F4(), qvec({1, 2, 3, 5}), Action::Row));
  CHECK_FALSE(stabilizer_is_trivial(*group_Bn(2), qvec({1, 0})));
  CHECK(stabilizer_is_trivial(*group_G2(), qvec({1, -3})));
  CHECK(orbit(*group_G2(), qvec({1, -3})).elements.size() == 12);
  // The transversal maps the base vector to each image.
  auto g = group_ST8();
  Vector v{NFElem(g->field(), Rational(1)), NFElem(g->field(), Rational(2))};
  auto o = orbit(*g, v);
  CHECK(o.elements.size() == 96);
  for (std::size_t k = 0; k < o.elements.size(); ++k)
    CHECK(apply(v, g->elements()[o.transversal[k]], Action::Column) == o.elements[k]);
}

TEST_CASE("orbit-stabilizer on random vectors") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> c(-2, 2);
  std::vector<GroupPtr> groups{group_G2(), group_Bn(3), group_F4(), group_ST8(), group_Gl1n(3, 2)};
  int cases = 0;
  for (const auto& g : groups)
    for (int t = 0; t < 40; ++t) {
      Vector v;
      for (int i = 0; i < g->dim(); ++i) v.emplace_back(g->field(), Rational(c(rng)));
      if (std::all_of(v.begin(), v.end(), [](const NFElem& x) { return x.is_zero(); })) continue;
      for (Action a : {Action::Row, Action::Column}) {
        const long long size = static_cast<long long>(orbit(*g, v, a).elements.size());
        CHECK(size * stabilizer_order(*g, v, a) == g->order());
        ++cases;
      }
    }
  CHECK(cases > 300);
}

TEST_CASE("invariance") {
  const auto xs = x_vars(2);
  CHECK(is_invariant(parse_multipoly("x1^2 - x1*x2 + x2^2", QQ(), xs), *group_G2()));
  // The G2 generator fixes I1 under the row action only.
  CHECK_FALSE(is_invariant(parse_multipoly("x1^2 - x1*x2 + x2^2", QQ(), xs), *group_G2(), Action::Column));
  CHECK_FALSE(is_invariant(parse_multipoly("x1", QQ(), xs), *group_Bn(2)));
  CHECK_THROWS_AS(is_invariant(parse_multipoly("x1", QQ(), x_vars(3)), *group_Bn(2)), Error);
  auto st8 = st8_invariants();
  CHECK(is_invariant(st8.polys[0], *st8.group));
  CHECK(is_invariant(st8.polys[1], *st8.group));
}

TEST_CASE("regular cycle types") {
  const FieldPtr& q = QQ();
  MatGroup trivial(q, 1, {}, "1", 1);
  CHECK(regular_cycle_types(trivial) == std::set<std::vector<int>>{{1}});
  auto g2 = regular_cycle_types(*group_G2());
  CHECK(g2.count({6, 6}));
  CHECK(g2.count(std::vector<int>(6, 2)));
  CHECK(g2.count(std::vector<int>(12, 1)));
  CHECK(g2.size() == 4);
  auto b2 = regular_cycle_types(*group_Bn(2));
  CHECK(b2 == std::set<std::vector<int>>{std::vector<int>(8, 1), std::vector<int>(4, 2), {4, 4}});
}

TEST_CASE("invariant systems") {
  auto b2 = elem_symm_lpowers(2, 2);
  CHECK(b2.polys[0] == parse_multipoly("x1^2 + x2^2", QQ(), x_vars(2)));
  CHECK(b2.polys[1] == parse_multipoly("x1^2*x2^2", QQ(), x_vars(2)));
  auto one = elem_symm_lpowers(1, 5);
  CHECK(one.polys[0].to_string() == "x1^5");
  CHECK(elem_symm_lpowers(3, 2).degrees == std::vector<int>{2, 4, 6});

  std::vector<InvariantSystem> systems{g2_invariants(), f4_invariants(), st8_invariants(), elem_symm_lpowers(3, 2),
                                       elem_symm_lpowers(2, 4), elem_symm_lpowers(3, 3), elem_symm_lpowers(2, 6)};
  for (const auto& s : systems) {
    CAPTURE(s.name);
    CHECK(verify_system(s));
    long long prod = 1;
    for (int d : s.degrees) prod *= d;
    CHECK(prod == s.group->order());
  }
}

TEST_CASE("F4 reduction matches the reference forms") {
  for (int k : {1, 3, 4, 6}) CHECK(f4_reduced_form(k) == f4_reference_form(k));
  // Both forms agree as functions of the z_i on random rational points.
  std::mt19937_64 rng(8);
  for (int t = 0; t < 100; ++t) {
    Rational z[4];
    for (auto& v : z) v = oracle::random_rational(rng, 7);
    auto s = [&](int k) {
      Rational acc = 0;
      for (auto& v : z) acc += rpow(v, 2 * k);
      return NFElem(QQ(), acc);
    };
    for (int k : {3, 6}) {
      std::vector<NFElem> def_pt, red_pt{s(1), s(2), s(3), s(4)};
      for (int j = 1; j <= k; ++j) def_pt.push_back(s(j));
      CHECK(f4_defining_form(k).evaluate(def_pt) == f4_reference_form(k).evaluate(red_pt));
    }
  }
}
